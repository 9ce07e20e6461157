"""Series evaluators for the three quantum invariants and the unknot factors."""

from fractions import Fraction as F

import pytest

from torusvass.errors import CancellationFailure, NotAKnot, SingularBracket
from torusvass.groups import product, so_n, su2, su_n
from torusvass.invariants import (akutsu_wadati_normalized, homfly_normalized,
                                  kauffman_normalized, normalized_series, qpower,
                                  unknot_factor, unnormalized_series)
from torusvass.knots import TorusKnot

ORDER = 6
ONE = (F(1),) + (F(0),) * ORDER


def test_qpower_examples():
    assert qpower(0, 1, 4).coefficients_through(4) == (1, 0, 0, 0, 0)
    assert qpower(1, 1, 2).coefficients_through(2) == (1, 1, F(1, 2))
    # t^{-1/2} with t = e^{x/2} is e^{-x/4}
    s = qpower(F(-1, 2), F(1, 2), 2)
    assert s.coefficients_through(2) == (1, F(-1, 4), F(1, 32))


@pytest.mark.parametrize("m", [1, 2, 5, -3, 9])
def test_unit_knots_are_one(m):
    assert homfly_normalized((1, m), 4).coefficients_through(ORDER) == ONE
    assert kauffman_normalized((1, m), 6).coefficients_through(ORDER) == ONE
    assert akutsu_wadati_normalized((1, m), 3).coefficients_through(ORDER) == ONE


@pytest.mark.parametrize("N", [2, 3, 5, 7])
def test_homfly_trefoil_x2(N):
    # 24 * g_{2,1}(N) = -(N^2-1)
    s = homfly_normalized((2, 3), N)
    assert s.coefficient(2) == -(N * N - 1)
    assert s.coefficient(0) == 1


@pytest.mark.parametrize("N", [5, 7, 9])
def test_kauffman_trefoil_x2(N):
    # 24 * g_{2,1}(N) = -(N-1)(N-2)/4
    s = kauffman_normalized((2, 3), N)
    assert s.coefficient(2) == F(-(N - 1) * (N - 2), 4)


@pytest.mark.parametrize("j", [1, 2, 3])
def test_akutsu_wadati_trefoil_x2(j):
    # 24 * g_{2,1}(j) = 4A with A = -j(j+2)/4
    s = akutsu_wadati_normalized((2, 3), j)
    assert s.coefficient(2) == -j * (j + 2)


def test_jones_is_homfly_at_rank_two():
    for knot in [(2, 3), (2, 5), (3, 4), (3, 5), (2, -3), (4, 5)]:
        h = homfly_normalized(knot, 2)
        a = akutsu_wadati_normalized(knot, 1)
        assert h.agrees_with(a, ORDER)


@pytest.mark.parametrize("knot", [(2, 3), (3, 4), (2, 5), (4, 5)])
def test_n_m_symmetry(knot):
    n, m = knot
    assert homfly_normalized((n, m), 4).agrees_with(homfly_normalized((m, n), 4), ORDER)
    assert kauffman_normalized((n, m), 8).agrees_with(kauffman_normalized((m, n), 8), ORDER)
    assert akutsu_wadati_normalized((n, m), 2).agrees_with(
        akutsu_wadati_normalized((m, n), 2), ORDER)


@pytest.mark.parametrize("knot", [(2, 3), (3, 4), (2, 7)])
def test_mirror_parity(knot):
    n, m = knot
    for series, mirror in [
        (homfly_normalized((n, m), 3), homfly_normalized((n, -m), 3)),
        (kauffman_normalized((n, m), 7), kauffman_normalized((n, -m), 7)),
        (akutsu_wadati_normalized((n, m), 2), akutsu_wadati_normalized((n, -m), 2)),
    ]:
        assert mirror.agrees_with(series.mirrored(), ORDER)


def test_unknot_factor_constants():
    assert unknot_factor(su_n(2)).coefficient(0) == 2
    assert unknot_factor(su_n(2)).coefficient(2) == F(1, 4)
    assert unknot_factor(so_n(7)).coefficient(0) == 7
    assert unknot_factor(su2(1)).coefficient(0) == 2
    assert unknot_factor(su2(3)).coefficient(0) == 4
    assert unknot_factor(product(3, 2)).coefficient(0) == 9


def test_unknot_factor_su_n_sinh_ratio():
    # sinh(N x/2)/sinh(x/2): x^2 coefficient N(N^2-1)/24
    for N in (2, 3, 5):
        assert unknot_factor(su_n(N)).coefficient(2) == F(N * (N * N - 1), 24)


def test_unnormalized_unknot_is_factor():
    for group in (su_n(3), so_n(6), su2(2)):
        series = unnormalized_series((1, 1), group)
        assert series.agrees_with(unknot_factor(group), ORDER)


def test_unnormalized_constant_is_dimension():
    assert unnormalized_series((2, 3), su_n(2)).coefficient(0) == 2
    assert unnormalized_series((2, 3), product(2, 1)).coefficient(0) == 4


def test_product_group_squares_jones():
    # SU(2) x SU(2, j=1) on the trefoil: both factors equal the N=2 series
    left = unnormalized_series((2, 3), product(2, 1))
    factor = unnormalized_series((2, 3), su_n(2))
    assert left.agrees_with((factor * factor).truncated(ORDER), ORDER)


def test_normalized_product_multiplies():
    prod = normalized_series((2, 5), product(3, 2))
    split = normalized_series((2, 5), su_n(3), ORDER, guard=3) \
        * normalized_series((2, 5), su2(2), ORDER, guard=3)
    assert prod.agrees_with(split, ORDER)


def test_constant_term_always_one():
    for knot in [(2, 3), (3, 5), (5, 6), (2, -9)]:
        assert normalized_series(knot, su_n(4)).coefficient(0) == 1
        assert normalized_series(knot, so_n(9)).coefficient(0) == 1
        assert normalized_series(knot, su2(4)).coefficient(0) == 1


def test_rejects_non_coprime():
    with pytest.raises(NotAKnot):
        homfly_normalized((2, 4), 3)


def test_rejects_negative_n():
    with pytest.raises(CancellationFailure):
        homfly_normalized((-2, 3), 3)


def test_kauffman_sampling_floor():
    with pytest.raises(SingularBracket):
        kauffman_normalized((3, 4), 4)  # needs N >= 5


def test_higher_truncation_order():
    s = homfly_normalized((2, 3), 2, trunc_order=10)
    assert s.trunc_order == 10
    assert s.coefficient(0) == 1


def test_torus_knot_helpers():
    assert TorusKnot(-3, 2).oriented() == TorusKnot(3, -2)
    assert TorusKnot(2, 3).swapped() == TorusKnot(3, 2)
    assert TorusKnot(2, 3).mirrored() == TorusKnot(2, -3)
    assert TorusKnot(1, 5).is_unknot()
