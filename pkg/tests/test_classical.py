import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chainorder import (
    CutSpec,
    EpsilonModel,
    connection_F,
    connection_F_closed_form,
    gamma_bond,
    k_markov,
    markov_epsilons,
    omega2_K_closed,
    parse_chain,
    pole_minus,
    pole_plus,
    shannon_H,
)
from chainorder.classical import classical_summary, entropy_sweep, gamma_case
from chainorder.errors import DivergentWeight, ParameterOutOfRange

from conftest import CHAIN_A, balanced

weights = st.floats(-50, 50, allow_nan=False)
models = st.builds(EpsilonModel, weights, weights, weights)


def test_entropy_values():
    assert shannon_H(7, 0) == 1
    assert shannon_H(10, 5) == 20
    ratio = shannon_H(10**6, 1) / (2 * math.log2(10**6))
    assert 0.9 <= ratio <= 1.1


def test_entropy_bad_args():
    with pytest.raises(ParameterOutOfRange):
        shannon_H(4, 5)


@given(st.integers(1, 400), st.data())
def test_entropy_symmetric(n, data):
    k = data.draw(st.integers(0, n))
    assert shannon_H(n, k) == pytest.approx(shannon_H(n, n - k), rel=1e-12)


@given(st.integers(2, 400), st.data())
def test_entropy_concave(n, data):
    k = data.draw(st.integers(1, n - 1))
    mid = shannon_H(n, k)
    assert 2 * mid >= shannon_H(n, k - 1) + shannon_H(n, k + 1) - 1e-9


def test_entropy_sweep_rows():
    rows = entropy_sweep(10)
    assert len(rows) == 11
    assert rows[5].H == 20


@pytest.mark.parametrize("n, b, expected", [
    (2, 1, (1, 1, 1)),
    (4, 2, (1, 1, 1)),
    (4, 1, (-math.log2(0.75), -math.log2(0.75), 2)),
])
def test_markov_epsilons(n, b, expected):
    m = markov_epsilons(n, b)
    assert (m.eps11, m.eps00, m.eps10) == pytest.approx(expected)


def test_markov_epsilons_divergent():
    with pytest.raises(DivergentWeight):
        markov_epsilons(4, 4)
    with pytest.raises(DivergentWeight):
        markov_epsilons(4, 0)


def test_connection_examples():
    one = EpsilonModel(1, 1, 1)
    assert connection_F(parse_chain("0011", "closed"), one) == 4
    m = EpsilonModel(0.3, -1.25, 2.5)
    assert connection_F(pole_plus(6, "closed"), m) == pytest.approx(12 * 2.5)
    assert connection_F(pole_minus(6, "closed"), m) == pytest.approx(6 * (0.3 - 1.25) + m.delta_eps)


@settings(max_examples=200)
@given(balanced(max_n=40), models)
def test_connection_closed_form(s, m):
    c = parse_chain(s, "closed")
    direct = connection_F(c, m)
    closed = connection_F_closed_form(c.n, c.b, m)
    assert math.isclose(direct, closed, rel_tol=1e-12, abs_tol=1e-9)


@pytest.mark.parametrize("left, right, case", [
    ("0110", "0110", "neutral"),
    ("0110", "1001", "zeros-meet-ones"),
    ("0011", "1100", "like-meets-like"),
    ("0101", "0011", "neutral"),
])
def test_gamma_cases(left, right, case):
    assert gamma_case(left[-1], right[0], right[-1], left[0]) == case


@settings(max_examples=200)
@given(balanced(max_n=8), balanced(max_n=8), st.integers(0, 15), st.integers(0, 15), st.booleans(), models)
def test_gamma_postcondition(sa, sb, i, j, flip, m):
    a, b = parse_chain(sa, "closed"), parse_chain(sb, "closed")
    g = gamma_bond(a, b, m, CutSpec(i % a.length, j % b.length, flip))
    scale = max(1.0, abs(g.F_bonded))
    assert abs(g.residual) <= 1e-9 * scale


@given(balanced(max_n=8), balanced(max_n=8), models)
def test_gamma_postcondition_open(sa, sb, m):
    g = gamma_bond(parse_chain(sa), parse_chain(sb), m)
    assert abs(g.residual) <= 1e-9 * max(1.0, abs(g.F_bonded))


@pytest.mark.parametrize("b, n, K", [(5, 5, 5), (1, 5, -3), (0, 5, -5)])
def test_k_markov(b, n, K):
    assert k_markov(b, n) == K


@given(st.integers(1, 500), st.data())
def test_k_markov_is_shifted_block_transfer_K(n, data):
    b = data.draw(st.integers(1, n))
    assert k_markov(b, n) == omega2_K_closed(b, n) + 1


def test_classical_summary():
    out = classical_summary(parse_chain(CHAIN_A, "closed"))
    assert out["c01"] == out["c10"] == 4
    assert out["F"] == pytest.approx(out["F_closed_form"])
    assert out["K_markov"] == -1
