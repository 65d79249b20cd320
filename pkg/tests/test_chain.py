import pytest
from hypothesis import given
from hypothesis import strategies as st

from chainorder import (
    CutSpec,
    block_decompose,
    bond,
    canonical_rotation,
    make_nA,
    make_near_periodic_G,
    make_near_separation_E,
    make_S1,
    make_S2,
    pair_counts,
    parse_chain,
    pole_minus,
    pole_plus,
)
from chainorder.chain import rotate
from chainorder.errors import (
    EmptyInput,
    InvalidCutPosition,
    NonBinarySymbol,
    ParameterOutOfRange,
    UnbalancedCounts,
)

from conftest import CHAIN_A, CHAIN_B, balanced


def test_parse_simple():
    assert parse_chain("0101").n == 2
    assert parse_chain(CHAIN_A).n == 9


def test_parse_ignores_whitespace():
    assert parse_chain(" 01 10\n").symbols == "0110"


@pytest.mark.parametrize("text, error", [
    ("011", UnbalancedCounts),
    ("0120", NonBinarySymbol),
    ("", EmptyInput),
    ("   ", EmptyInput),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_chain(text)


def test_closed_chain_is_canonical():
    c = parse_chain("1100", "closed")
    assert c.symbols == "0011"
    assert parse_chain("0110", "closed") == parse_chain("1001", "closed")


@given(balanced(), st.integers(0, 50))
def test_canonical_rotation_invariant(s, r):
    expected = min(rotate(s, i) for i in range(len(s)))
    assert canonical_rotation(s) == expected
    assert canonical_rotation(rotate(s, r)) == expected
    assert canonical_rotation(expected) == expected


@given(balanced())
def test_parse_serialize_roundtrip(s):
    assert str(parse_chain(s)) == s
    canon = canonical_rotation(s)
    assert str(parse_chain(canon, "closed")) == canon


def test_block_decompose_chain_b():
    d = block_decompose(parse_chain(CHAIN_B))
    assert [(int(b.symbol), b.size) for b in d] == [(1, 3), (0, 1), (1, 1), (0, 1), (1, 3), (0, 5)]
    assert d.b == 3


def test_block_decompose_separation():
    d = block_decompose(pole_minus(4))
    assert [(int(b.symbol), b.size) for b in d] == [(0, 4), (1, 4)]
    assert d.b == 1


def test_block_decompose_chain_a():
    d = block_decompose(parse_chain(CHAIN_A))
    assert len(d) == 8
    assert sum(1 for blk in d if blk.symbol == "1") == 4
    assert d.b == 4


@given(balanced(), st.booleans())
def test_block_invariants(s, closed):
    chain = parse_chain(s, "closed" if closed else "open")
    d = block_decompose(chain)
    assert "".join(blk.symbol * blk.size for blk in d) == chain.symbols
    assert all(x.symbol != y.symbol for x, y in zip(d.blocks, d.blocks[1:]))
    assert sum(blk.size for blk in d if blk.symbol == "1") == chain.n
    assert sum(blk.size for blk in d if blk.symbol == "0") == chain.n
    pos = 0
    for blk in d:
        left = chain.symbols[:pos]
        assert blk.same_left == left.count(blk.symbol)
        assert blk.same_left + blk.other_left == pos
        pos += blk.size
    if closed:
        ones = sum(1 for blk in d if blk.symbol == "1")
        zeros = sum(1 for blk in d if blk.symbol == "0")
        assert ones == zeros == d.b


@pytest.mark.parametrize("s, expected", [
    ("0101", (0, 2, 2, 0)),
    ("0011", (1, 1, 1, 1)),
    (CHAIN_A, (5, 4, 4, 5)),
])
def test_pair_counts(s, expected):
    pc = pair_counts(parse_chain(s))
    assert (pc.c00, pc.c01, pc.c10, pc.c11) == expected


@given(balanced())
def test_pair_count_identities(s):
    chain = parse_chain(s)
    pc = pair_counts(chain)
    assert pc.total == 2 * chain.n
    assert pc.c01 == pc.c10 == chain.b
    assert pc.c00 == pc.c11 == chain.n - chain.b


def test_bond_open():
    assert bond(parse_chain("1100"), parse_chain("1100")).symbols == "11001100"
    assert bond(parse_chain("1100"), parse_chain("1100")) == make_nA(2, 2)


def test_bond_periodic_stays_near_periodic():
    ab = bond(pole_plus(3), pole_plus(4))
    assert ab.symbols == "01" * 7


def test_bond_closed_cut():
    a = parse_chain("000111", "closed")
    b = parse_chain("001011", "closed")
    ab = bond(a, b, CutSpec(2, 3))
    assert ab.closed and ab.length == 12
    assert ab.symbols == canonical_rotation(rotate(a.symbols, 2) + rotate(b.symbols, 3))


def test_bond_rejects_bad_cut():
    a = parse_chain("0011", "closed")
    with pytest.raises(InvalidCutPosition):
        bond(a, a, CutSpec(4, 0))
    with pytest.raises(InvalidCutPosition):
        bond(parse_chain("01"), parse_chain("01"), CutSpec(0, 0))


@given(balanced(max_n=6), balanced(max_n=6), st.integers(0, 11), st.integers(0, 11), st.booleans())
def test_bond_length_additive(sa, sb, i, j, flip):
    a, b = parse_chain(sa, "closed"), parse_chain(sb, "closed")
    ab = bond(a, b, CutSpec(i % a.length, j % b.length, flip))
    assert ab.length == a.length + b.length
    assert ab.n == a.n + b.n
    assert len(bond(parse_chain(sa), parse_chain(sb))) == len(sa) + len(sb)


def test_make_nA():
    assert make_nA(3, 2).symbols == "110011001100"
    assert make_nA(1, 4).symbols == "11110000"
    ring = make_nA(3, 2, "closed")
    assert ring.symbols == canonical_rotation("110011001100")


def test_make_G_structure():
    for n in range(4, 12):
        for l in range(2, n - 1, 2):
            g = make_near_periodic_G(n, l)
            pc = pair_counts(g)
            assert g.closed and g.n == n
            assert pc.c00 == pc.c11 == 1


def test_make_E_structure():
    e = make_near_separation_E(6, 3)
    assert e.closed and e.n == 6
    d = block_decompose(e)
    singles = [blk for blk in d if blk.symbol == "1" and blk.size == 1]
    assert len(singles) == 1


@pytest.mark.parametrize("call", [
    lambda: make_near_separation_E(5, 3),
    lambda: make_near_separation_E(5, 0),
    lambda: make_near_periodic_G(6, 3),
    lambda: make_near_periodic_G(6, 6),
    lambda: make_S1(2, 1),
    lambda: make_S1(5, 3),
    lambda: make_nA(0, 2),
])
def test_family_parameter_errors(call):
    with pytest.raises(ParameterOutOfRange):
        call()


def test_make_S1_S2_shapes():
    s1 = make_S1(9, 1)
    pc = pair_counts(s1)
    assert pc.c00 == pc.c11 == 1 and s1.n == 9
    assert "0110" in s1.symbols
    assert make_S1(9, 2).symbols.startswith("0011")
    s2 = make_S2(7)
    assert s2.symbols == "000" + "1" + "0000" + "111111"
    assert s2.n == 7 and s2.b == 2
