"""Balanced binary chains, their block structure, bonding and named families."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

import numpy as np

from .errors import (
    EmptyInput,
    InvalidCutPosition,
    NonBinarySymbol,
    ParameterOutOfRange,
    UnbalancedCounts,
)


class Topology(str, enum.Enum):
    OPEN = "open"
    CLOSED = "closed"

    def __str__(self):
        return self.value


TopologyLike = Union[Topology, str]

_WHITESPACE = re.compile(r"\s+")
_ZERO_RUNS = re.compile(r"0+")


def as_topology(value: TopologyLike) -> Topology:
    return value if isinstance(value, Topology) else Topology(str(value).lower())


def canonical_rotation(symbols: str) -> str:
    """Lexicographically smallest rotation of `symbols`.

    The smallest rotation always starts at the head of a longest run of
    zeros, so only those offsets are compared.
    """
    size = len(symbols)
    if size == 0 or "1" not in symbols or "0" not in symbols:
        return symbols
    # start just after a '1' so no zero run wraps around the end
    shift = (symbols.rindex("1") + 1) % size
    rotated = symbols[shift:] + symbols[:shift]
    runs = [(m.start(), m.end() - m.start()) for m in _ZERO_RUNS.finditer(rotated)]
    longest = max(length for _, length in runs)
    doubled = rotated + rotated
    start = min((pos for pos, length in runs if length == longest),
                key=lambda pos: doubled[pos:pos + size])
    return rotated[start:] + rotated[:start]


def rotate(symbols: str, offset: int) -> str:
    offset %= len(symbols)
    return symbols[offset:] + symbols[:offset]


def complement(symbols: str) -> str:
    return symbols.translate(_COMPLEMENT)


_COMPLEMENT = str.maketrans("01", "10")


@dataclass(frozen=True)
class Chain:
    """A balanced binary chain. Closed chains hold their canonical rotation."""

    symbols: str
    topology: Topology = Topology.OPEN

    @property
    def n(self) -> int:
        return len(self.symbols) // 2

    @property
    def length(self) -> int:
        return len(self.symbols)

    @property
    def closed(self) -> bool:
        return self.topology is Topology.CLOSED

    @property
    def b(self) -> int:
        """Number of one-blocks in the ring closure."""
        return ring_block_count(self.symbols)

    def as_array(self) -> np.ndarray:
        return symbol_array(self.symbols)

    def __str__(self):
        return self.symbols

    def __len__(self):
        return len(self.symbols)


def symbol_array(symbols: str) -> np.ndarray:
    return np.frombuffer(symbols.encode("ascii"), dtype=np.uint8) - ord("0")


def clean_symbols(text: str) -> str:
    """Strip whitespace and check the alphabet, without a balance check."""
    symbols = _WHITESPACE.sub("", text or "")
    if not symbols:
        raise EmptyInput("empty chain")
    stray = set(symbols) - {"0", "1"}
    if stray:
        raise NonBinarySymbol("non-binary symbol(s): %s" % "".join(sorted(stray)))
    return symbols


def parse_chain(text: str, topology: TopologyLike = Topology.OPEN) -> Chain:
    symbols = clean_symbols(text)
    ones = symbols.count("1")
    if 2 * ones != len(symbols):
        raise UnbalancedCounts(
            "chain has %d zeros and %d ones" % (len(symbols) - ones, ones))
    return _make(symbols, topology)


def _make(symbols: str, topology: TopologyLike) -> Chain:
    topology = as_topology(topology)
    if topology is Topology.CLOSED:
        symbols = canonical_rotation(symbols)
    return Chain(symbols, topology)


def ring_block_count(symbols: str) -> int:
    count = symbols.count("01")
    if len(symbols) > 1 and symbols[-1] == "0" and symbols[0] == "1":
        count += 1
    return count


class Block(NamedTuple):
    symbol: str
    size: int
    same_left: int
    other_left: int


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple
    b: int

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)


def run_arrays(symbols: str):
    """Vectorised run scan: (symbol, size, same_left, other_left) arrays."""
    arr = symbol_array(symbols).astype(np.int64)
    starts = np.concatenate(([0], np.flatnonzero(arr[1:] != arr[:-1]) + 1))
    sizes = np.diff(np.concatenate((starts, [arr.size])))
    syms = arr[starts]
    ones_left = np.concatenate(([0], np.cumsum(arr)))[starts]
    zeros_left = starts - ones_left
    same_left = np.where(syms == 1, ones_left, zeros_left)
    other_left = starts - same_left
    return syms, sizes, same_left, other_left


def block_decompose(chain: Chain) -> BlockDecomposition:
    # canonical closed chains start with 0 and end with 1, so the linear scan
    # already begins on a block boundary
    syms, sizes, same_left, other_left = run_arrays(chain.symbols)
    blocks = tuple(
        Block(str(s), int(z), int(l), int(o))
        for s, z, l, o in zip(syms, sizes, same_left, other_left))
    return BlockDecomposition(blocks, ring_block_count(chain.symbols))


@dataclass(frozen=True)
class PairCounts:
    c00: int
    c01: int
    c10: int
    c11: int

    @property
    def total(self):
        return self.c00 + self.c01 + self.c10 + self.c11


def pair_counts(chain: Chain) -> PairCounts:
    """Adjacent-pair counts over the ring closure."""
    s = chain.symbols
    ring = s + s[0]
    counts = {p: 0 for p in ("00", "01", "10", "11")}
    for i in range(len(s)):
        counts[ring[i:i + 2]] += 1
    return PairCounts(counts["00"], counts["01"], counts["10"], counts["11"])


@dataclass(frozen=True)
class CutSpec:
    """Where to cut two rings before gluing them.

    A ring is cut just before index `a_cut` (resp. `b_cut`) of its canonical
    symbols. With `reverse_b` the second ring is glued in reading direction
    reversed.
    """

    a_cut: int = 0
    b_cut: int = 0
    reverse_b: bool = False


def linearize(chain: Chain, cut: int) -> str:
    if not 0 <= cut < chain.length:
        raise InvalidCutPosition("cut %d outside 0..%d" % (cut, chain.length - 1))
    return rotate(chain.symbols, cut)


def bond(a: Chain, b: Chain, cut: Optional[CutSpec] = None) -> Chain:
    """Cross-link two chains into A_B."""
    if a.topology is not b.topology:
        raise InvalidCutPosition("cannot bond %s chain with %s chain" % (a.topology, b.topology))
    if a.topology is Topology.OPEN:
        if cut is not None:
            raise InvalidCutPosition("open chains are concatenated; no cut allowed")
        return Chain(a.symbols + b.symbols, Topology.OPEN)
    cut = cut or CutSpec()
    left = linearize(a, cut.a_cut)
    right = linearize(b, cut.b_cut)
    if cut.reverse_b:
        right = right[::-1]
    return _make(left + right, Topology.CLOSED)


# named families

def make_nA(n: int, s: int, topology: TopologyLike = Topology.OPEN) -> Chain:
    """`n` copies of the separation block 1^s 0^s glued end to end."""
    if n < 1 or s < 1:
        raise ParameterOutOfRange("make_nA needs n >= 1 and s >= 1 (got n=%d, s=%d)" % (n, s))
    topology = as_topology(topology)
    if topology is Topology.CLOSED:
        # (0^s 1^s)^n is already the smallest rotation
        return Chain(("0" * s + "1" * s) * n, topology)
    return Chain(("1" * s + "0" * s) * n, topology)


def make_near_periodic_G(n: int, l: int) -> Chain:
    """Ring close to 0101..., with one 00 and one 11 pair `l` symbols apart."""
    if l % 2 or l < 2 or l > n - 2:
        raise ParameterOutOfRange("G needs even l with 2 <= l <= n-2 (got n=%d, l=%d)" % (n, l))
    head = "00" + "10" * (l // 2) + "11"
    return _make(head + "01" * ((2 * n - len(head)) // 2), Topology.CLOSED)


def make_near_separation_E(n: int, l: int) -> Chain:
    """Separation ring with one 1 moved `l` zeros deep into the zero block."""
    if n < 3 or not 1 <= l <= n // 2:
        raise ParameterOutOfRange(
            "E needs n >= 3 and 1 <= l <= n//2 (got n=%d, l=%d)" % (n, l))
    return _make("0" * l + "1" + "0" * (n - l) + "1" * (n - 1), Topology.CLOSED)


def make_S1(n: int, i: int = 1) -> Chain:
    """Open near-periodic chain with a single 00 and a single 11 pair.

    i=1 puts the defect inside the chain as ...0110...; i=2 starts the
    chain with the 00 pair.
    """
    if n < 3 or i not in (1, 2):
        raise ParameterOutOfRange("S1 needs n >= 3 and i in {1, 2} (got n=%d, i=%r)" % (n, i))
    if i == 1:
        before = (n - 1) // 2
        return Chain("01" * before + "10" + "01" * (n - before - 1), Topology.OPEN)
    return Chain("0011" + "01" * (n - 2), Topology.OPEN)


def make_S2(n: int, position: Optional[int] = None) -> Chain:
    """Open separation chain with one 1 moved into the zero block."""
    if position is None:
        position = n // 2
    if n < 2 or not 1 <= position <= n - 1:
        raise ParameterOutOfRange(
            "S2 needs n >= 2 and 1 <= position <= n-1 (got n=%d, position=%d)" % (n, position))
    return Chain("0" * position + "1" + "0" * (n - position) + "1" * (n - 1), Topology.OPEN)
