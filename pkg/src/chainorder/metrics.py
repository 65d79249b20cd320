"""Order parameter, relative order and Omega-information under each ordering method."""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .chain import Chain, Topology, ring_block_count, run_arrays, rotate
from .errors import LengthMismatch, ParameterOutOfRange, TopologyMismatch
from .poles import Omega, pole_distance, require_n

DEFAULT_THETA = Fraction(1, 10)


class ChaosClass(enum.Enum):
    CHAOS = "chaos"
    NEAR_CHAOS = "near-chaos"
    ORDERED = "ordered"


def t_plus_blockcount(chain: Chain) -> int:
    """Steps to perfect alternation under single-symbol or block transfer: n - b."""
    require_n(chain)
    return chain.n - ring_block_count(chain.symbols)


def _block_minimum(symbols: str, n: int) -> int:
    _, sizes, same_left, other_left = run_arrays(symbols)
    # x1: carry the same-kind symbols on the left to the right and the
    # other-kind symbols on the right to the left; x2: the mirror plan
    x1 = other_left + n - sizes - same_left
    x2 = n + same_left - other_left
    return int(np.minimum(x1, x2).min())


def t_minus_omega1(chain: Chain) -> int:
    """Steps from an open chain to 0^n1^n or 1^n0^n by single-symbol transfers."""
    require_n(chain)
    if chain.closed:
        raise TopologyMismatch("t_minus_omega1 takes an open chain; use t_minus_omega1_closed")
    return _block_minimum(chain.symbols, chain.n)


def t_minus_omega1_closed(chain: Chain, verify: bool = False) -> int:
    """Separation distance of a ring: the open rule minimised over all cuts.

    With `verify`, small rings (n <= 6) are also solved by BFS; on a mismatch
    a warning is issued and the BFS value is returned.
    """
    require_n(chain)
    if not chain.closed:
        raise TopologyMismatch("t_minus_omega1_closed takes a closed chain")
    s = chain.symbols
    value = min(_block_minimum(rotate(s, r), chain.n) for r in range(len(s)))
    if verify and chain.n <= 6:
        from .oracle import bfs_to_pole_set
        from .poles import PoleKind
        exact = bfs_to_pole_set(chain, PoleKind.MINUS, Omega.SYMBOL_TRANSFER)
        if exact != value:
            warnings.warn("rotation rule gives %d but BFS gives %d for %s"
                          % (value, exact, s))
            return exact
    return value


def t_minus_omega2(chain: Chain) -> int:
    """b - 1, except b for an open chain whose end symbols agree."""
    require_n(chain)
    s = chain.symbols
    b = ring_block_count(s)
    if not chain.closed and s[0] == s[-1]:
        return b
    return b - 1


def _ones(chain: Chain) -> np.ndarray:
    return np.flatnonzero(chain.as_array()).astype(np.int64)


def _require_closed(chain: Chain):
    if not chain.closed:
        raise TopologyMismatch("adjacent swaps are defined on closed chains only")


def omega3_to_plus(chain: Chain) -> int:
    """Adjacent swaps from a ring to the alternating ring.

    Targets of the ones sit at 2j + c for any integer c, so the cost is the
    absolute deviation of p_i - 2i around its median.
    """
    require_n(chain)
    _require_closed(chain)
    p = _ones(chain)
    a = np.sort(p - 2 * np.arange(p.size))
    return int(np.abs(a - a[p.size // 2]).sum())


def omega3_to_minus(chain: Chain) -> int:
    """Adjacent swaps from a ring to the separated ring.

    g_i = p_i - i is non-decreasing; cyclic relabelling walks a window of
    length n along concat(g, g + n), and each window costs its deviation
    around the median.
    """
    require_n(chain)
    _require_closed(chain)
    p = _ones(chain)
    n = p.size
    g = p - np.arange(n)
    h = np.concatenate((g, g + n))
    prefix = np.concatenate(([0], np.cumsum(h)))
    k = np.arange(n)
    mid = k + n // 2
    med = h[mid]
    upper = prefix[k + n] - prefix[mid] - med * (k + n - mid)
    lower = med * (mid - k) - (prefix[mid] - prefix[k])
    return int((upper + lower).min())


def omega3_distance(a: Chain, b: Chain) -> int:
    """Fewest adjacent swaps turning ring `a` into any rotation of ring `b`.

    Ones never need to pass each other, so the answer is the cheapest
    cyclic order-preserving matching of ones, with the common rotation
    absorbed by a median.
    """
    _require_closed(a)
    _require_closed(b)
    if a.length != b.length:
        raise LengthMismatch("lengths differ: %d vs %d" % (a.length, b.length))
    require_n(a)
    p, q = _ones(a), _ones(b)
    n, size = p.size, a.length
    j = np.arange(2 * n - 1)
    unrolled = q[j % n] + size * (j // n)
    best = None
    for start in range(0, n, 512):
        k = np.arange(start, min(n, start + 512))[:, None]
        d = np.sort(p[None, :] - unrolled[k + np.arange(n)[None, :]], axis=1)
        cost = np.abs(d - d[:, n // 2:n // 2 + 1]).sum(axis=1).min()
        best = cost if best is None else min(best, cost)
    return int(best)


def pole_steps(chain: Chain, omega) -> tuple:
    """(t_plus, t_minus) for `chain` under `omega`."""
    omega = Omega.coerce(omega)
    require_n(chain)
    if omega is Omega.ADJACENT_SWAP:
        _require_closed(chain)
        return omega3_to_plus(chain), omega3_to_minus(chain)
    t_plus = t_plus_blockcount(chain)
    if omega is Omega.BLOCK_TRANSFER:
        return t_plus, t_minus_omega2(chain)
    if chain.closed:
        return t_plus, t_minus_omega1_closed(chain)
    return t_plus, t_minus_omega1(chain)


def classify_chaos(k: Fraction, theta=DEFAULT_THETA) -> ChaosClass:
    if k == 0:
        return ChaosClass.CHAOS
    if abs(k) <= Fraction(theta):
        return ChaosClass.NEAR_CHAOS
    return ChaosClass.ORDERED


def omega_information(t_plus: int, t_minus: int) -> int:
    return t_plus if t_minus - t_plus >= 0 else t_minus


@dataclass(frozen=True)
class OrderReport:
    omega: Omega
    topology: Topology
    n: int
    b: int
    t_plus: int
    t_minus: int
    K: int
    k: Fraction
    I: int
    chaos: ChaosClass
    chain: str = ""

    def as_record(self) -> dict:
        return {
            "omega": int(self.omega),
            "topology": self.topology.value,
            "n": self.n,
            "b": self.b,
            "t_plus": self.t_plus,
            "t_minus": self.t_minus,
            "K": self.K,
            "k_num": self.k.numerator,
            "k_den": self.k.denominator,
            "I": self.I,
            "chaos": self.chaos.value,
        }


def order_report(chain: Chain, omega, theta=DEFAULT_THETA) -> OrderReport:
    omega = Omega.coerce(omega)
    require_n(chain)
    if omega is Omega.ADJACENT_SWAP and not chain.closed:
        raise TopologyMismatch("ordering method 3 (adjacent swaps) needs a closed chain")
    t_plus, t_minus = pole_steps(chain, omega)
    K = t_minus - t_plus
    k = Fraction(K, pole_distance(omega, chain.n))
    return OrderReport(
        omega=omega,
        topology=chain.topology,
        n=chain.n,
        b=ring_block_count(chain.symbols),
        t_plus=t_plus,
        t_minus=t_minus,
        K=K,
        k=k,
        I=omega_information(t_plus, t_minus),
        chaos=classify_chaos(k, theta),
        chain=chain.symbols,
    )


def omega2_K_closed(b: int, n: int) -> int:
    """Order parameter of a ring with n ones in b blocks under block transfer."""
    if n < 1 or not 1 <= b <= n:
        raise ParameterOutOfRange("need 1 <= b <= n (got b=%d, n=%d)" % (b, n))
    return 2 * b - n - 1


def omega2_is_chaos(b: int, n: int, closed: bool = True) -> bool:
    """Chaos test under block transfer.

    Rings (and open chains with differing ends) are chaotic at n = 2b - 1;
    open chains with equal ends have K = 2b - n and are chaotic at n = 2b.
    """
    if closed:
        return omega2_K_closed(b, n) == 0
    if n < 1 or not 1 <= b <= n:
        raise ParameterOutOfRange("need 1 <= b <= n (got b=%d, n=%d)" % (b, n))
    return 2 * b - n == 0
