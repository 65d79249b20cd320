"""Classical baselines: first-order Markov information and the connection function."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .chain import Chain, CutSpec, Topology, bond, linearize, pair_counts, ring_block_count
from .errors import DivergentWeight, InvalidCutPosition, ParameterOutOfRange


@dataclass(frozen=True)
class EpsilonModel:
    """Nearest-neighbour connection weights; eps01 is taken equal to eps10."""

    eps11: float
    eps00: float
    eps10: float

    @property
    def delta_eps(self) -> float:
        return 2 * self.eps10 - (self.eps11 + self.eps00)

    def weight(self, pair: str) -> float:
        if pair == "11":
            return self.eps11
        if pair == "00":
            return self.eps00
        return self.eps10

    def as_dict(self) -> dict:
        return {"eps11": self.eps11, "eps00": self.eps00, "eps10": self.eps10,
                "delta_eps": self.delta_eps}


def _xlog2(x: float, total: float) -> float:
    return 0.0 if x == 0 else x * math.log2(x / total)


def shannon_H(n: int, k: float) -> float:
    """Information in bits of a 2n-symbol first-order Markov chain with k 00-pairs."""
    if n < 1 or not 0 <= k <= n:
        raise ParameterOutOfRange("need n >= 1 and 0 <= k <= n (got n=%r, k=%r)" % (n, k))
    bracket = _xlog2(k, n) + _xlog2(n - k, n)
    return 1 - (2 * n - 1) * bracket / n


@dataclass(frozen=True)
class EntropyPoint:
    n: int
    k: float
    H: float


def entropy_sweep(n: int, step: float = 1.0) -> list:
    ks = np.arange(0, n + step / 2, step)
    return [EntropyPoint(n, float(k) if step != 1 else int(k), shannon_H(n, float(k))) for k in ks]


def markov_epsilons(n: int, b: int) -> EpsilonModel:
    """Connection weights that make F reproduce the Markov information."""
    if not 0 < b < n:
        raise DivergentWeight("weights diverge unless 0 < b < n (got b=%d, n=%d)" % (b, n))
    same = -math.log2((n - b) / n)
    return EpsilonModel(same, same, -math.log2(b / n))


def connection_F(chain: Chain, model: EpsilonModel) -> float:
    """Direct sum of pair weights; rings include the wrap-around pair."""
    s = chain.symbols
    if chain.closed:
        s = s + s[0]
    return math.fsum(model.weight(s[i:i + 2]) for i in range(len(s) - 1))


def connection_F_closed_form(n: int, b: int, model: EpsilonModel) -> float:
    return n * (model.eps11 + model.eps00) + b * model.delta_eps


def gamma_case(a_end: str, b_start: str, b_end: str = None, a_start: str = None) -> str:
    """Name the cross-link case from the symbols meeting at the joints.

    For rings the broken pairs are (a_end, a_start) and (b_end, b_start);
    the new ones are (a_end, b_start) and (b_end, a_start).
    """
    if b_end is None:
        return a_end + b_start
    broken = {a_end + a_start, b_end + b_start}
    if broken == {"00", "11"}:
        return "zeros-meet-ones"
    if (a_end + a_start, b_end + b_start) in {("01", "10"), ("10", "01")}:
        return "like-meets-like"
    return "neutral"


@dataclass(frozen=True)
class GammaBond:
    bonded: Chain
    gamma: float
    case: str
    F_a: float
    F_b: float
    F_bonded: float

    @property
    def residual(self) -> float:
        return self.F_bonded - (self.F_a + self.F_b + self.gamma)


def gamma_bond(a: Chain, b: Chain, model: EpsilonModel, cut: Optional[CutSpec] = None) -> GammaBond:
    """Bond two chains and report the junction term gamma of F(A_B)."""
    if a.topology is not b.topology:
        raise InvalidCutPosition("cannot bond %s chain with %s chain" % (a.topology, b.topology))
    if a.topology is Topology.OPEN:
        joined = bond(a, b, cut)
        pair = a.symbols[-1] + b.symbols[0]
        gamma = model.weight(pair)
        case = gamma_case(a.symbols[-1], b.symbols[0])
    else:
        cut = cut or CutSpec()
        left = linearize(a, cut.a_cut)
        right = linearize(b, cut.b_cut)
        if cut.reverse_b:
            right = right[::-1]
        joined = bond(a, b, cut)
        case = gamma_case(left[-1], right[0], right[-1], left[0])
        gamma = {"neutral": 0.0, "zeros-meet-ones": model.delta_eps,
                 "like-meets-like": -model.delta_eps}[case]
    return GammaBond(joined, gamma, case, connection_F(a, model), connection_F(b, model),
                     connection_F(joined, model))


def k_markov(b: int, n: int) -> int:
    """Connection-function order parameter, normalised to antisymmetric poles."""
    if n < 0 or not 0 <= b <= n:
        raise ParameterOutOfRange("need 0 <= b <= n (got b=%d, n=%d)" % (b, n))
    return 2 * b - n


def classical_summary(chain: Chain, model: Optional[EpsilonModel] = None) -> dict:
    counts = pair_counts(chain)
    n, b = chain.n, ring_block_count(chain.symbols)
    out = {
        "c00": counts.c00, "c01": counts.c01, "c10": counts.c10, "c11": counts.c11,
        "H_bits": shannon_H(n, counts.c00),
        "K_markov": k_markov(b, n),
    }
    if model is None and 0 < b < n:
        model = markov_epsilons(n, b)
    if model is not None:
        out.update({
            "F": connection_F(chain, model),
            "F_closed_form": connection_F_closed_form(n, b, model) if chain.closed else None,
            "delta_eps": model.delta_eps,
        })
    return out
