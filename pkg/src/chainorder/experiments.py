"""Reproductions of the composite results: struggle of orders, additivity, perturbations.

Each table carries the closed-form value next to the value computed from
`order_report` on the constructed chain, so disagreements stay visible.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .chain import (
    Chain,
    CutSpec,
    Topology,
    bond,
    linearize,
    make_near_periodic_G,
    make_near_separation_E,
    make_nA,
    make_S1,
    make_S2,
    parse_chain,
)
from .errors import ParameterOutOfRange, TopologyMismatch
from .metrics import order_report
from .poles import Omega, pole_minus, pole_plus


def t3(n: int) -> int:
    return n * n // 4


# struggle of orders

def struggle_topology(omega: Omega) -> Topology:
    return Topology.CLOSED if omega is Omega.ADJACENT_SWAP else Topology.OPEN


def nA_formulas(omega, s: int, n: int) -> dict:
    """Closed-form K, k, I (where known) and the limit of k for the chain nA."""
    omega = Omega.coerce(omega)
    N = n * s
    if omega is Omega.SYMBOL_TRANSFER:
        K = n - s
        return {"K": K, "k": Fraction(K, N - 1),
                "I": N - n if n >= s else N - s, "limit": Fraction(1, s)}
    if omega is Omega.BLOCK_TRANSFER:
        K = 2 * n - 1 - s * n
        t_plus, t_minus = n * (s - 1), n - 1
        return {"K": K, "k": Fraction(K, N - 1),
                "I": t_plus if K >= 0 else t_minus, "limit": Fraction(2, s) - 1}
    return {"K": None, "k": knA_parity(s, n), "I": None, "limit": Fraction(1)}


def knA_parity(s: int, n: int) -> Fraction:
    """Relative order of the ring nA under adjacent swaps, by parity of s and n."""
    if s % 2 == 0 and n % 2 == 0:
        return 1 - Fraction(1, n)
    if n % 2 == 0:
        return 1 - Fraction(s * s - 1, s * s * n)
    if s % 2 == 0:
        return 1 - Fraction(1, n) - Fraction(1, n * n)
    return 1 + Fraction((1 - s * s) * (1 + n), s * s * n * n - 1)


def knA_from_pole_distances(s: int, n: int) -> Fraction:
    return Fraction(s * s * t3(n) - n * t3(s), t3(n * s))


@dataclass
class SweepRow:
    omega: int
    s: int
    n: int
    t_plus: int
    t_minus: int
    K: int
    k: Fraction
    I: int
    K_formula: Optional[int]
    k_formula: Fraction
    I_formula: Optional[int]
    limit_value: Fraction
    deviation: Fraction
    agree: bool

    def as_record(self) -> dict:
        rec = asdict(self)
        for name in ("k", "k_formula", "limit_value", "deviation"):
            value = rec.pop(name)
            rec[name + "_num"] = value.numerator
            rec[name + "_den"] = value.denominator
            rec[name] = float(value)
        return rec


def struggle_row(omega, s: int, n: int) -> SweepRow:
    omega = Omega.coerce(omega)
    if s < 1 or n < 1:
        raise ParameterOutOfRange("need s >= 1 and n >= 1")
    if n * s < 2:
        raise ParameterOutOfRange("s = 1 needs n >= 2: a single 10 block has coinciding poles")
    chain = make_nA(n, s, struggle_topology(omega))
    rep = order_report(chain, omega)
    f = nA_formulas(omega, s, n)
    agree = rep.k == f["k"] and f["K"] in (None, rep.K) and f["I"] in (None, rep.I)
    if omega is Omega.ADJACENT_SWAP:
        agree = agree and rep.k == knA_from_pole_distances(s, n)
    return SweepRow(
        omega=int(omega), s=s, n=n,
        t_plus=rep.t_plus, t_minus=rep.t_minus, K=rep.K, k=rep.k, I=rep.I,
        K_formula=f["K"], k_formula=f["k"], I_formula=f["I"],
        limit_value=f["limit"], deviation=abs(rep.k - f["limit"]), agree=agree,
    )


def struggle_sweep(omega, s: int, n_range: Iterable[int]) -> list:
    return [struggle_row(omega, s, n) for n in n_range]


@dataclass
class NBRow:
    n: int
    t_plus: int
    t_plus_formula: int
    t_minus: int
    l: int
    l_in_bound: bool
    K: int
    k: Fraction
    limit_value: Fraction
    bfs_t_plus: Optional[int] = None
    bfs_t_minus: Optional[int] = None

    def as_record(self) -> dict:
        rec = asdict(self)
        for name in ("k", "limit_value"):
            value = rec.pop(name)
            rec[name + "_num"] = value.numerator
            rec[name + "_den"] = value.denominator
            rec[name] = float(value)
        return rec


def nB_struggle(chain_b: Chain, n_range: Iterable[int], bfs_limit: int = 6) -> list:
    """Repeat an open block B and track T+ = n*m and the slack s*n - T-."""
    if chain_b.closed:
        raise TopologyMismatch("nB struggle uses open chains")
    s = chain_b.n
    if s < 2:
        raise ParameterOutOfRange("B needs at least two ones")
    m = order_report(chain_b, Omega.SYMBOL_TRANSFER).t_plus
    if m > s - 1:
        raise ParameterOutOfRange("B has T+ = %d > s - 1" % m)
    rows = []
    for n in n_range:
        if n < 1:
            raise ParameterOutOfRange("n must be >= 1")
        chain = Chain(chain_b.symbols * n, Topology.OPEN)
        rep = order_report(chain, Omega.SYMBOL_TRANSFER)
        l = s * n - rep.t_minus
        row = NBRow(n=n, t_plus=rep.t_plus, t_plus_formula=n * m, t_minus=rep.t_minus,
                    l=l, l_in_bound=0 <= l <= s, K=rep.K, k=rep.k,
                    limit_value=1 - Fraction(m, s))
        if n * s <= bfs_limit:
            from .oracle import bfs_order_report
            row.bfs_t_plus, row.bfs_t_minus = bfs_order_report(chain, Omega.SYMBOL_TRANSFER)
        rows.append(row)
    return rows


# additivity

@dataclass
class AdditivityResult:
    omega: int
    a: str
    b: str
    K_a: int
    K_b: int
    K_ab: int
    K_ba: int
    I_a: int
    I_b: int
    I_ab: int
    I_ba: int
    gamma_case: str

    @property
    def K_resid(self) -> int:
        return self.K_ab - self.K_a - self.K_b

    @property
    def I_resid(self) -> int:
        return self.I_ab - self.I_a - self.I_b

    @property
    def commut_K(self) -> int:
        return self.K_ab - self.K_ba

    @property
    def commut_I(self) -> int:
        return self.I_ab - self.I_ba

    def as_record(self) -> dict:
        rec = asdict(self)
        rec.update(K_resid=self.K_resid, I_resid=self.I_resid,
                   commut_K=self.commut_K, commut_I=self.commut_I)
        return rec


def additivity_probe(a: Chain, b: Chain, omega, cut: Optional[CutSpec] = None) -> AdditivityResult:
    from .classical import gamma_case

    omega = Omega.coerce(omega)
    ab = bond(a, b, cut)
    swapped = None if cut is None else CutSpec(cut.b_cut, cut.a_cut, cut.reverse_b)
    ba = bond(b, a, swapped)
    ra, rb, rab, rba = (order_report(c, omega) for c in (a, b, ab, ba))
    if a.closed:
        cut = cut or CutSpec()
        left, right = linearize(a, cut.a_cut), linearize(b, cut.b_cut)
        if cut.reverse_b:
            right = right[::-1]
        case = gamma_case(left[-1], right[0], right[-1], left[0])
    else:
        case = gamma_case(a.symbols[-1], b.symbols[0])
    return AdditivityResult(int(omega), a.symbols, b.symbols, ra.K, rb.K, rab.K, rba.K,
                            ra.I, rb.I, rab.I, rba.I, case)


@dataclass
class AdditivitySummary:
    omega: int
    topology: str
    pairs: int = 0
    K_resid_values: dict = field(default_factory=dict)
    same_sign_pairs: int = 0
    I_resid_violations: list = field(default_factory=list)
    commut_K_violations: list = field(default_factory=list)
    commut_I_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.I_resid_violations or self.commut_K_violations or self.commut_I_violations)


def balanced_strings(n: int):
    for ones in itertools.combinations(range(2 * n), n):
        chars = ["0"] * (2 * n)
        for i in ones:
            chars[i] = "1"
        yield "".join(chars)


def additivity_exhaustive(omega=Omega.BLOCK_TRANSFER, max_length: int = 12,
                          topology=Topology.OPEN) -> AdditivitySummary:
    """Bond every pair of balanced chains (each with n >= 2) up to a combined length."""
    omega = Omega.coerce(omega)
    summary = AdditivitySummary(int(omega), str(topology))
    half = max_length // 2
    pool = {n: sorted({parse_chain(s, topology).symbols for s in balanced_strings(n)})
            for n in range(2, half - 1)}
    for na, nb in itertools.product(pool, repeat=2):
        if na + nb > half:
            continue
        for sa, sb in itertools.product(pool[na], pool[nb]):
            res = additivity_probe(Chain(sa, topology), Chain(sb, topology), omega)
            summary.pairs += 1
            summary.K_resid_values[res.K_resid] = summary.K_resid_values.get(res.K_resid, 0) + 1
            if res.K_a * res.K_b >= 0:
                summary.same_sign_pairs += 1
                if abs(res.I_resid) > 1:
                    summary.I_resid_violations.append(res.as_record())
            if abs(res.commut_K) > 1:
                summary.commut_K_violations.append(res.as_record())
            if abs(res.commut_I) > 1:
                summary.commut_I_violations.append(res.as_record())
    return summary


def separation_bonding(m: int, k: int) -> AdditivityResult:
    """Bond open separation chains 1^m 0^m and 1^k 0^k under single-symbol transfer."""
    if not 2 <= m <= k:
        raise ParameterOutOfRange("need 2 <= m <= k")
    a = Chain("1" * m + "0" * m)
    b = Chain("1" * k + "0" * k)
    return additivity_probe(a, b, Omega.SYMBOL_TRANSFER)


# small perturbations of the poles

@dataclass
class PerturbationRow:
    family: str
    omega: int
    n: int
    param: int
    chain: str
    t_plus: int
    t_minus: int
    K: int
    k: Fraction
    I: int
    t_plus_formula: int
    t_minus_formula: int
    K_formula: int
    k_formula: Fraction
    I_formula: int
    k_gap: Fraction
    k_gap_formula: Fraction

    @property
    def agree(self) -> bool:
        return ((self.t_plus, self.t_minus, self.K, self.k, self.I, self.k_gap)
                == (self.t_plus_formula, self.t_minus_formula, self.K_formula,
                    self.k_formula, self.I_formula, self.k_gap_formula))

    def as_record(self) -> dict:
        rec = asdict(self)
        for name in ("k", "k_formula", "k_gap", "k_gap_formula"):
            value = rec.pop(name)
            rec[name + "_num"] = value.numerator
            rec[name + "_den"] = value.denominator
            rec[name] = float(value)
        rec["agree"] = self.agree
        return rec


def _perturbation(family, omega, n, param, chain, pole, formulas, gap_formula, gap_sign):
    rep = order_report(chain, omega)
    pole_k = order_report(pole, omega).k
    return PerturbationRow(
        family=family, omega=int(omega), n=n, param=param, chain=chain.symbols,
        t_plus=rep.t_plus, t_minus=rep.t_minus, K=rep.K, k=rep.k, I=rep.I,
        t_plus_formula=formulas[0], t_minus_formula=formulas[1], K_formula=formulas[2],
        k_formula=formulas[3], I_formula=formulas[4],
        k_gap=gap_sign * (pole_k - rep.k), k_gap_formula=gap_formula,
    )


def s1_row(n: int, i: int) -> PerturbationRow:
    t = n - 1
    return _perturbation(
        "S1", Omega.SYMBOL_TRANSFER, n, i, make_S1(n, i), pole_plus(n),
        (1, n - i, n - i - 1, 1 - Fraction(i, t), 1), Fraction(i, t), 1)


def s2_row(n: int) -> PerturbationRow:
    t = n - 1
    return _perturbation(
        "S2", Omega.SYMBOL_TRANSFER, n, 0, make_S2(n), pole_minus(n),
        (n - 2, 1, 3 - n, Fraction(3 - n, t), 1), Fraction(2, t), -1)


def g_row(n: int, l: int) -> PerturbationRow:
    t = t3(n)
    return _perturbation(
        "G", Omega.ADJACENT_SWAP, n, l, make_near_periodic_G(n, l), pole_plus(n, Topology.CLOSED),
        (l // 2 + 1, t - l // 2 - 1, t - l - 2, 1 - Fraction(l + 2, t), l // 2 + 1),
        Fraction(l + 2, t), 1)


def e_row(n: int, l: int) -> PerturbationRow:
    t = t3(n)
    return _perturbation(
        "E", Omega.ADJACENT_SWAP, n, l, make_near_separation_E(n, l), pole_minus(n, Topology.CLOSED),
        (t - l, l, 2 * l - t, Fraction(2 * l, t) - 1, l), Fraction(2 * l, t), -1)


def perturbation_suite(n: int, omega) -> list:
    """Every near-pole family defined for (n, omega), with closed forms alongside."""
    omega = Omega.coerce(omega)
    if omega is Omega.SYMBOL_TRANSFER:
        if n < 3:
            raise ParameterOutOfRange("S1/S2 families need n >= 3")
        return [s1_row(n, 1), s1_row(n, 2), s2_row(n)]
    if omega is Omega.ADJACENT_SWAP:
        if n < 3:
            raise ParameterOutOfRange("G/E families need n >= 3")
        rows = [g_row(n, l) for l in range(2, n - 1, 2)]
        rows += [e_row(n, l) for l in range(1, n // 2 + 1)]
        return rows
    raise ParameterOutOfRange("no perturbation families are defined for block transfer")


def limit_check(omega, s: int, n: int) -> bool:
    row = struggle_row(omega, s, n)
    return row.deviation <= Fraction(2 * s, n)

