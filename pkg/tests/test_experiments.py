from fractions import Fraction

import pytest

from chainorder import parse_chain, pole_minus, pole_plus
from chainorder.errors import ParameterOutOfRange, TopologyMismatch
from chainorder.experiments import (
    additivity_exhaustive,
    additivity_probe,
    e_row,
    g_row,
    knA_from_pole_distances,
    knA_parity,
    limit_check,
    nA_formulas,
    nB_struggle,
    perturbation_suite,
    s1_row,
    separation_bonding,
    struggle_row,
    struggle_sweep,
)


def test_nA_formulas_examples():
    f = nA_formulas(1, 2, 3)
    assert (f["K"], f["k"], f["I"]) == (1, Fraction(1, 5), 3)
    assert nA_formulas(2, 2, 3)["K"] == -1
    assert nA_formulas(3, 2, 2)["k"] == Fraction(1, 2)


@pytest.mark.parametrize("s", range(1, 8))
@pytest.mark.parametrize("n", range(1, 12))
def test_knA_parity_matches_pole_distance_form(s, n):
    if n * s < 2:
        return
    assert knA_parity(s, n) == knA_from_pole_distances(s, n)


@pytest.mark.parametrize("omega", [1, 2, 3])
@pytest.mark.parametrize("s", [1, 2, 3, 5])
def test_struggle_rows_agree(omega, s):
    rows = struggle_sweep(omega, s, range(2, 40))
    assert all(r.agree for r in rows)


def test_struggle_row_from_bfs_scale():
    from chainorder.oracle import bfs_order_report
    from chainorder import make_nA
    row = struggle_row(1, 2, 3)
    assert (row.t_plus, row.t_minus) == bfs_order_report(make_nA(3, 2), 1)


def test_struggle_degenerate_cell():
    with pytest.raises(ParameterOutOfRange):
        struggle_row(3, 1, 1)


def test_struggle_limit_values():
    assert struggle_row(1, 2, 50).limit_value == Fraction(1, 2)
    assert struggle_row(2, 4, 50).limit_value == Fraction(-1, 2)
    assert limit_check(1, 3, 300)


def test_nB_struggle_rows():
    rows = nB_struggle(parse_chain("110100"), range(1, 8))
    for r in rows:
        assert r.t_plus == r.t_plus_formula
        assert r.l_in_bound
        if r.bfs_t_plus is not None:
            assert (r.bfs_t_plus, r.bfs_t_minus) == (r.t_plus, r.t_minus)
    assert rows[0].bfs_t_plus is not None


def test_nB_struggle_limits():
    assert nB_struggle(pole_minus(4), [3])[0].limit_value == Fraction(1, 4)
    assert nB_struggle(pole_plus(4), [3])[0].limit_value == 1


def test_nB_struggle_rejects_ring():
    with pytest.raises(TopologyMismatch):
        nB_struggle(pole_plus(3, "closed"), [1])


@pytest.mark.parametrize("m, k", [(2, 2), (2, 5), (3, 4), (6, 9)])
def test_separation_bonding(m, k):
    assert separation_bonding(m, k).K_resid == m


def test_separation_bonding_range():
    with pytest.raises(ParameterOutOfRange):
        separation_bonding(4, 3)


def test_block_transfer_additivity_small():
    s = additivity_exhaustive(2, max_length=10)
    assert s.pairs > 0 and s.ok
    assert set(s.K_resid_values) <= {-1, 0, 1}


@pytest.mark.parametrize("n", [2, 3, 6, 11])
def test_separation_then_periodic_information(n):
    res = additivity_probe(pole_minus(n), pole_plus(n), 2)
    assert res.I_a == res.I_b == 0
    assert abs(res.I_ab - n) <= 1


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_periodic_pair_block_transfer(n):
    assert additivity_probe(pole_plus(n), pole_plus(n), 2).K_resid in (-1, 0, 1)


def test_perturbation_examples():
    r = s1_row(9, 1)
    assert (r.K, r.k, r.I) == (7, Fraction(7, 8), 1) and r.agree
    e = e_row(6, 3)
    assert (e.t_plus, e.t_minus, e.K, e.I) == (6, 3, -3, 3) and e.agree
    for n in (6, 8, 10):
        assert g_row(n, n - 2).I == n // 2


@pytest.mark.parametrize("n", range(3, 16))
@pytest.mark.parametrize("omega", [1, 3])
def test_perturbation_suite_agrees(n, omega):
    assert all(row.agree for row in perturbation_suite(n, omega))


def test_perturbation_suite_block_transfer_rejected():
    with pytest.raises(ParameterOutOfRange):
        perturbation_suite(5, 2)
