"""Closed-form invariant tables and the beta normalization routes."""

from fractions import Fraction as F

import pytest

from torusvass.knots import TorusKnot
from torusvass.tables import (TREFOIL_NORMALIZERS, beta_from_alpha_tilde,
                              closed_form_alpha, closed_form_alpha_tilde,
                              closed_form_beta, printed_g_table)

GRID = [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (2, -3), (5, 6)]

TREFOIL_BETA = {
    (2, 1): 1, (3, 1): 1, (4, 2): 31, (4, 3): 5, (5, 2): 11, (5, 3): 1,
    (5, 4): 1, (6, 5): 5071, (6, 6): 29, (6, 7): 1531, (6, 8): 17, (6, 9): 271,
}


def test_alpha_tilde_trefoil_values():
    t = closed_form_alpha_tilde((2, 3)).entries
    assert t[(2, 1)] == 4
    assert t[(3, 1)] == 8
    assert t[(4, 1)] == 8
    assert t[(4, 2)] == F(62, 3)   # symmetric 9 n^2 m^2 reading
    assert t[(4, 3)] == F(10, 3)
    assert t[(5, 2)] == F(176, 3)


def test_alpha_tilde_further_grid_value():
    assert closed_form_alpha_tilde((2, 5)).entries[(2, 1)] == 12


def test_alpha_tilde_vanishes_on_unknots():
    for m in (1, 5, -7):
        assert all(v == 0 for v in closed_form_alpha_tilde((1, m)).entries.values())


@pytest.mark.parametrize("knot", GRID)
def test_alpha_tilde_compound_identities(knot):
    t = closed_form_alpha_tilde(knot).entries
    assert t[(4, 1)] == t[(2, 1)] ** 2 / 2
    assert t[(5, 1)] == t[(2, 1)] * t[(3, 1)]
    assert t[(6, 1)] == t[(2, 1)] ** 3 / 6
    assert t[(6, 2)] == t[(3, 1)] ** 2 / 2
    assert t[(6, 3)] == t[(2, 1)] * t[(4, 2)]
    assert t[(6, 4)] == t[(2, 1)] * t[(4, 3)]


def test_alpha_trefoil_values():
    a = closed_form_alpha((2, 3)).entries
    assert a[(2, 1)] == F(23, 6)
    assert a[(3, 1)] == 8
    assert a[(4, 1)] == F(529, 72)


@pytest.mark.parametrize("knot", GRID)
def test_alpha_odd_orders_match_tilde(knot):
    a = closed_form_alpha(knot).entries
    t = closed_form_alpha_tilde(knot).entries
    for slot in [(3, 1), (5, 2), (5, 3), (5, 4)]:
        assert a[slot] == t[slot]


def test_beta_trefoil_is_normalizer_vector():
    b = closed_form_beta((2, 3)).entries
    for slot, expected in TREFOIL_BETA.items():
        assert b[slot] == expected
    assert TREFOIL_BETA == TREFOIL_NORMALIZERS


def test_beta_examples():
    b = closed_form_beta((2, 5)).entries
    assert b[(2, 1)] == 3 and b[(3, 1)] == 5
    assert closed_form_beta((2, 2)).entries[(2, 1)] == F(3, 8)
    assert closed_form_beta((4, 3)).entries[(3, 1)] == 10


@pytest.mark.parametrize("knot", GRID)
def test_beta_routes_agree(knot):
    via_tilde = beta_from_alpha_tilde(closed_form_alpha_tilde(knot))
    direct = closed_form_beta(knot)
    assert via_tilde.entries == direct.entries


@pytest.mark.parametrize("knot", GRID)
def test_beta_compounds_are_products(knot):
    b = closed_form_beta(knot).entries
    assert b[(4, 1)] == b[(2, 1)] ** 2
    assert b[(5, 1)] == b[(2, 1)] * b[(3, 1)]
    assert b[(6, 1)] == b[(2, 1)] ** 3
    assert b[(6, 2)] == b[(3, 1)] ** 2
    assert b[(6, 3)] == b[(2, 1)] * b[(4, 2)]
    assert b[(6, 4)] == b[(2, 1)] * b[(4, 3)]


@pytest.mark.parametrize("knot", GRID)
def test_beta_parity_under_mirror(knot):
    n, m = knot
    plus = closed_form_beta((n, m)).entries
    minus = closed_form_beta((n, -m)).entries
    for (i, j), value in plus.items():
        assert minus[(i, j)] == (value if i % 2 == 0 else -value)


def test_beta_from_alpha_tilde_rejects_wrong_kind():
    with pytest.raises(ValueError):
        beta_from_alpha_tilde(closed_form_beta((2, 3)))


def test_table_metadata():
    table = closed_form_beta((3, 4))
    assert table.kind == "beta" and table.knot == TorusKnot(3, 4)
    assert len(table.entries) == 18
    assert len(table.through_order(4)) == 5


def test_printed_g_spot_values():
    su = printed_g_table("su_n")
    assert su[(2, 1)].evaluate(3) == F(-8, 24)
    so = printed_g_table("so_n")
    assert so[(2, 1)].evaluate(7) == F(-30, 96)
    assert so[(3, 1)].evaluate(5) == F(-(5 - 2) ** 2 * 4, 1152)
    a = printed_g_table("su2")
    assert a[(4, 3)].evaluate(F(-3, 4)) == F(1, 360) * F(-3, 4) * (7 * F(-3, 4) + 9)
