"""Exhaustive ground truth: state enumeration, move generation and BFS.

Every closed form in `metrics` and `poles` is checked against the
distances computed here. The state spaces are small by design.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .chain import Chain, Topology, TopologyLike, as_topology, canonical_rotation, complement
from .errors import ParameterOutOfRange, TooLarge, TopologyMismatch, Unreachable
from .metrics import pole_steps
from .poles import Omega, PoleKind, pole_distance, pole_members

N_MAX = {Topology.OPEN: 7, Topology.CLOSED: 8}
DENSE_LIMIT = 5000


def _state_key(chain_or_symbols) -> str:
    return chain_or_symbols.symbols if isinstance(chain_or_symbols, Chain) else chain_or_symbols


def one_step_neighbors(state, omega, topology: TopologyLike = None) -> frozenset:
    """All states one legal move away from `state` (never `state` itself)."""
    omega = Omega.coerce(omega)
    if isinstance(state, Chain):
        topology = state.topology if topology is None else as_topology(topology)
    topology = as_topology(topology or Topology.OPEN)
    closed = topology is Topology.CLOSED
    if omega is Omega.ADJACENT_SWAP and not closed:
        raise TopologyMismatch("adjacent swaps are defined on closed chains only")
    s = _state_key(state)
    if closed:
        s = canonical_rotation(s)
    size = len(s)
    out = set()

    if omega is Omega.ADJACENT_SWAP:
        for i in range(size):
            j = (i + 1) % size
            if s[i] != s[j]:
                t = list(s)
                t[i], t[j] = t[j], t[i]
                out.add("".join(t))
    else:
        longest = 1 if omega is Omega.SYMBOL_TRANSFER else size - 1
        for start in range(size):
            for run in range(1, longest + 1):
                if not closed and start + run > size:
                    break
                piece = "".join(s[(start + r) % size] for r in range(run))
                if piece.count(piece[0]) != run:
                    break
                if closed:
                    after = (start + run) % size
                    rest = "".join(s[(after + r) % size] for r in range(size - run))
                else:
                    rest = s[:start] + s[start + run:]
                for pos in range(len(rest) + 1):
                    out.add(rest[:pos] + piece + rest[pos:])

    if closed:
        out = {canonical_rotation(x) for x in out}
    out.discard(s)
    return frozenset(out)


@dataclass
class StateSpace:
    n: int
    topology: Topology
    states: list
    index: dict
    _adjacency: dict = field(default_factory=dict, repr=False)
    _matrices: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.states)

    def chain(self, i: int) -> Chain:
        return Chain(self.states[i], self.topology)

    def adjacency(self, omega) -> list:
        omega = Omega.coerce(omega)
        if omega not in self._adjacency:
            self._adjacency[omega] = [
                sorted(self.index[t] for t in one_step_neighbors(s, omega, self.topology))
                for s in self.states
            ]
        return self._adjacency[omega]

    def distance_matrix(self, omega) -> np.ndarray:
        """All-pairs step counts (inf where unreachable)."""
        omega = Omega.coerce(omega)
        if len(self) > DENSE_LIMIT:
            raise TooLarge("%d states exceed the dense matrix limit %d" % (len(self), DENSE_LIMIT))
        if omega not in self._matrices:
            adj = self.adjacency(omega)
            rows = np.repeat(np.arange(len(adj)), [len(a) for a in adj])
            cols = np.fromiter(itertools.chain.from_iterable(adj), dtype=np.int64, count=rows.size)
            graph = csr_matrix((np.ones(rows.size), (rows, cols)), shape=(len(self), len(self)))
            self._matrices[omega] = shortest_path(graph, method="D", directed=True, unweighted=True)
        return self._matrices[omega]

    def pole_indices(self, kind: PoleKind) -> list:
        return sorted(self.index[m] for m in pole_members(self.n, kind, self.topology))


def necklace_count(n: int) -> int:
    """Number of balanced binary necklaces of length 2n."""
    total = sum(_phi(d) * math.comb(2 * n // d, n // d) for d in range(1, n + 1) if n % d == 0)
    return total // (2 * n)


def _phi(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if math.gcd(k, d) == 1)


def enumerate_states(n: int, topology: TopologyLike = Topology.OPEN, n_max: int = None) -> StateSpace:
    topology = as_topology(topology)
    bound = N_MAX[topology] if n_max is None else n_max
    if n < 1:
        raise ParameterOutOfRange("n must be >= 1")
    if n > bound:
        raise TooLarge(
            "n=%d exceeds the oracle bound %d for %s chains; the state space grows as C(2n, n). "
            "Raise --n-max if you have the memory and patience." % (n, bound, topology.value))
    found = set()
    for ones in itertools.combinations(range(2 * n), n):
        chars = ["0"] * (2 * n)
        for i in ones:
            chars[i] = "1"
        s = "".join(chars)
        found.add(canonical_rotation(s) if topology is Topology.CLOSED else s)
    states = sorted(found)
    return StateSpace(n, topology, states, {s: i for i, s in enumerate(states)})


def _bfs(sources, targets, omega, topology) -> int:
    seen = {s: 0 for s in sources}
    queue = deque(sources)
    while queue:
        x = queue.popleft()
        if x in targets:
            return seen[x]
        for y in one_step_neighbors(x, omega, topology):
            if y not in seen:
                seen[y] = seen[x] + 1
                queue.append(y)
    raise Unreachable("no path from %s to %s" % (sorted(sources)[0], sorted(targets)[0]))


def bfs_distance(a: Chain, b: Chain, omega) -> int:
    """Exact fewest moves from `a` to `b`."""
    if a.topology is not b.topology or a.length != b.length:
        raise ParameterOutOfRange("chains are not in the same state space")
    return _bfs([a.symbols], {b.symbols}, Omega.coerce(omega), a.topology)


def bfs_to_pole_set(a: Chain, kind: PoleKind, omega) -> int:
    """Exact fewest moves from `a` to any member of the pole `kind`."""
    return _bfs([a.symbols], pole_members(a.n, kind, a.topology), Omega.coerce(omega), a.topology)


def complement_index(space: StateSpace) -> np.ndarray:
    key = (lambda s: canonical_rotation(complement(s))) if space.topology is Topology.CLOSED else complement
    return np.array([space.index[key(s)] for s in space.states])


@dataclass
class VerifyReport:
    n: int
    omega: Omega
    topology: Topology
    states: int
    symmetric: bool
    connected: bool
    inverse_closed: bool
    pole_distance_bfs: int
    pole_distance_formula: int
    max_other_distance: int
    strict: bool
    strict_required: bool
    maximality_violations: list
    agreement: dict
    formula_mismatches: list
    locality_violations: list

    @property
    def maximality_ok(self) -> bool:
        return not self.maximality_violations and (self.strict or not self.strict_required)

    @property
    def passed(self) -> bool:
        return (self.symmetric and self.connected and self.inverse_closed
                and self.pole_distance_bfs == self.pole_distance_formula
                and self.maximality_ok and not self.formula_mismatches
                and not self.locality_violations)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "omega": int(self.omega),
            "topology": self.topology.value,
            "states": self.states,
            "passed": self.passed,
            "checks": {
                "symmetry": self.symmetric,
                "connectivity": self.connected,
                "inverse_closed_moves": self.inverse_closed,
                "pole_distance": {"bfs": self.pole_distance_bfs, "formula": self.pole_distance_formula},
                "pole_maximality": {
                    "ok": self.maximality_ok,
                    "max_other_distance": self.max_other_distance,
                    "strict": self.strict,
                    "strict_required": self.strict_required,
                    "violations": self.maximality_violations[:20],
                    "violation_count": len(self.maximality_violations),
                },
                "closed_form_agreement": self.agreement,
                "formula_mismatches": self.formula_mismatches[:20],
                "locality_violations": self.locality_violations[:20],
            },
        }


def verify_suite(n: int, omega, topology: TopologyLike = Topology.CLOSED, n_max: int = None) -> VerifyReport:
    """Run every exhaustive check for one (n, omega, topology) space.

    Violations are collected into the report; nothing is raised for them.
    """
    omega = Omega.coerce(omega)
    topology = as_topology(topology)
    if omega is Omega.ADJACENT_SWAP and topology is Topology.OPEN:
        raise TopologyMismatch("adjacent swaps are defined on closed chains only")
    if n < 2:
        raise ParameterOutOfRange("verification needs n >= 2")
    space = enumerate_states(n, topology, n_max)
    dist = space.distance_matrix(omega)
    adj = space.adjacency(omega)

    symmetric = bool(np.array_equal(dist, dist.T))
    connected = bool(np.isfinite(dist).all())
    inverse_closed = all(i in adj[j] for i, nbrs in enumerate(adj) for j in nbrs)

    plus = space.pole_indices(PoleKind.PLUS)
    minus = space.pole_indices(PoleKind.MINUS)
    to_plus = dist[:, plus].min(axis=1)
    to_minus = dist[:, minus].min(axis=1)
    t_bfs = int(dist[np.ix_(plus, minus)].min())
    t_formula = pole_distance(omega, n)

    # open poles come in symbol-swapped pairs (0101/1010, 0^n1^n/1^n0^n), so
    # states are compared up to relabelling 0 <-> 1 there
    if topology is Topology.OPEN:
        class_dist = np.minimum(dist, dist[:, complement_index(space)])
    else:
        class_dist = dist
    is_pole = np.zeros(len(space), dtype=bool)
    is_pole[plus + minus] = True
    other = ~(is_pole[:, None] & is_pole[None, :])
    max_other = int(class_dist[other].max()) if other.any() else 0
    rows, cols = np.nonzero(other & (class_dist > t_bfs))
    violations = [
        {"a": space.states[i], "b": space.states[j], "steps": int(class_dist[i, j]), "t": t_bfs}
        for i, j in zip(rows, cols) if i < j
    ]
    strict = max_other < t_bfs
    strict_required = omega is Omega.SYMBOL_TRANSFER and topology is Topology.CLOSED

    mismatches = []
    agree_plus = agree_minus = 0
    K = np.empty(len(space), dtype=np.int64)
    for i, s in enumerate(space.states):
        chain = space.chain(i)
        fp, fm = pole_steps(chain, omega)
        K[i] = fm - fp
        agree_plus += fp == to_plus[i]
        agree_minus += fm == to_minus[i]
        if fp != to_plus[i] or fm != to_minus[i]:
            mismatches.append({"state": s, "t_plus": [fp, int(to_plus[i])],
                               "t_minus": [fm, int(to_minus[i])]})

    locality = []
    for i, nbrs in enumerate(adj):
        for j in nbrs:
            dp, dm = to_plus[j] - to_plus[i], to_minus[j] - to_minus[i]
            if abs(dp) > 1 or abs(dm) > 1 or abs(K[j] - K[i]) > 2:
                locality.append({"from": space.states[i], "to": space.states[j],
                                 "d_plus": int(dp), "d_minus": int(dm)})

    agreement = {
        "t_plus": {"agree": int(agree_plus), "total": len(space)},
        "t_minus": {"agree": int(agree_minus), "total": len(space)},
        "t_pole": {"bfs": t_bfs, "formula": t_formula},
    }
    return VerifyReport(
        n=n, omega=omega, topology=topology, states=len(space),
        symmetric=symmetric, connected=connected, inverse_closed=inverse_closed,
        pole_distance_bfs=t_bfs, pole_distance_formula=t_formula,
        max_other_distance=max_other, strict=strict, strict_required=strict_required,
        maximality_violations=violations, agreement=agreement,
        formula_mismatches=mismatches, locality_violations=locality,
    )


def bfs_order_report(chain: Chain, omega):
    """(t_plus, t_minus) measured by BFS, for cross-checking order_report."""
    omega = Omega.coerce(omega)
    return (bfs_to_pole_set(chain, PoleKind.PLUS, omega),
            bfs_to_pole_set(chain, PoleKind.MINUS, omega))
