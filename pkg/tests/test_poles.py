import pytest

from chainorder import parse_chain, pole_minus, pole_plus
from chainorder.errors import DegenerateN, ParameterOutOfRange
from chainorder.poles import Omega, PoleKind, classify_pole, pole_distance, pole_members

from conftest import CHAIN_A


def test_pole_strings():
    assert pole_plus(3).symbols == "010101"
    assert pole_minus(3).symbols == "000111"
    assert pole_plus(1).symbols == pole_minus(1).symbols == "01"


def test_closed_poles_are_canonical():
    assert pole_plus(3, "closed").symbols == "010101"
    assert pole_minus(3, "closed").symbols == "000111"


@pytest.mark.parametrize("text, topology, kind", [
    ("010101", "open", PoleKind.PLUS),
    ("101010", "open", PoleKind.PLUS),
    ("000111", "closed", PoleKind.MINUS),
    ("111000", "open", PoleKind.MINUS),
    (CHAIN_A, "open", PoleKind.NONE),
    ("0110", "open", PoleKind.NONE),
    ("0110", "closed", PoleKind.MINUS),
])
def test_classify(text, topology, kind):
    assert classify_pole(parse_chain(text, topology)) is kind


def test_classify_degenerate():
    with pytest.raises(DegenerateN):
        classify_pole(parse_chain("01"))


def test_pole_members_open():
    assert pole_members(3, PoleKind.PLUS, "open") == {"010101", "101010"}
    assert pole_members(3, PoleKind.MINUS, "open") == {"000111", "111000"}
    assert pole_members(3, PoleKind.MINUS, "closed") == {"000111"}


@pytest.mark.parametrize("omega, n, t", [
    (1, 9, 8), (2, 9, 8), (3, 4, 4), (3, 5, 6), (3, 3, 2), (3, 2, 1),
])
def test_pole_distance(omega, n, t):
    assert pole_distance(omega, n) == t


@pytest.mark.parametrize("raw", [1, "2", "omega3", Omega.ADJACENT_SWAP])
def test_omega_coerce(raw):
    assert Omega.coerce(raw) in set(Omega)


@pytest.mark.parametrize("raw", [0, 4, "x", "12"])
def test_omega_coerce_rejects(raw):
    with pytest.raises(ParameterOutOfRange):
        Omega.coerce(raw)
