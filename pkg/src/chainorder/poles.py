"""The two order poles: perfect alternation and complete separation."""

from __future__ import annotations

import enum
import re

from .chain import Chain, Topology, TopologyLike, _make, as_topology, ring_block_count
from .errors import DegenerateN, ParameterOutOfRange


class PoleKind(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"
    NONE = "none"


class Omega(enum.IntEnum):
    """Ordering methods: which one-step moves are legal."""

    SYMBOL_TRANSFER = 1
    BLOCK_TRANSFER = 2
    ADJACENT_SWAP = 3

    @classmethod
    def coerce(cls, value) -> "Omega":
        if isinstance(value, cls):
            return value
        digits = re.sub(r"[^0-9]", "", str(value))
        try:
            return cls(int(digits))
        except ValueError:
            raise ParameterOutOfRange("unknown ordering method %r (use 1, 2 or 3)" % (value,))


def pole_plus(n: int, topology: TopologyLike = Topology.OPEN) -> Chain:
    if n < 1:
        raise ParameterOutOfRange("n must be >= 1")
    return _make("01" * n, topology)


def pole_minus(n: int, topology: TopologyLike = Topology.OPEN) -> Chain:
    if n < 1:
        raise ParameterOutOfRange("n must be >= 1")
    return _make("0" * n + "1" * n, topology)


def pole_members(n: int, kind: PoleKind, topology: TopologyLike) -> frozenset:
    """Every string representing the pole.

    Open chains admit both symbol orders: 0101.../1010... and 0^n1^n/1^n0^n.
    """
    topology = as_topology(topology)
    if kind is PoleKind.PLUS:
        members = {"01" * n, "10" * n}
    elif kind is PoleKind.MINUS:
        members = {"0" * n + "1" * n, "1" * n + "0" * n}
    else:
        raise ValueError("no members for PoleKind.NONE")
    if topology is Topology.CLOSED:
        members = {_make(m, topology).symbols for m in members}
    return frozenset(members)


def require_n(chain: Chain) -> None:
    if chain.n < 2:
        raise DegenerateN("n=%d: the poles coincide, order is undefined" % chain.n)


def classify_pole(chain: Chain) -> PoleKind:
    require_n(chain)
    s = chain.symbols
    b = ring_block_count(s)
    if b == chain.n:
        return PoleKind.PLUS
    # an open chain with ring b = 1 but equal end symbols (e.g. 0110) is
    # not separated
    if b == 1 and (chain.topology is Topology.CLOSED or s[0] != s[-1]):
        return PoleKind.MINUS
    return PoleKind.NONE


def pole_distance(omega, n: int) -> int:
    """Pole-to-pole step count t(omega) for chains with n ones."""
    omega = Omega.coerce(omega)
    if n < 2:
        raise DegenerateN("n=%d: the poles coincide" % n)
    if omega is Omega.ADJACENT_SWAP:
        return n * n // 4
    return n - 1
