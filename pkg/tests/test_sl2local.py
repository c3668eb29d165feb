"""Exact SL2 local factors over compact discrete valuation rings."""

from fractions import Fraction

import pytest

from repzeta.sl2local import (
    local_factor,
    sl1_division_abscissa,
    sl2_class_count,
    sl2_degree_census,
    sl2_group_order,
    sl2_local_zeta,
)


def _exact_zeta(q: int, s: int) -> Fraction:
    """Exact rational evaluation at integer s from the declared families."""
    factor = local_factor(q)
    total = Fraction(0)
    for degree, mult in factor.finite_terms:
        total += Fraction(mult, degree**s)
    # level-j term of a seed (j >= 2): degree and multiplicity both scale by
    # q^(j-2), so the degree-power sum is geometric with ratio q^(1-s)
    ratio = Fraction(1, q ** (s - 1))
    for degree, mult in factor.geometric_seeds:
        total += Fraction(mult, degree**s) / (1 - ratio)
    return total


def test_q3_value_at_two():
    assert _exact_zeta(3, 2) == Fraction(745, 144)
    assert abs(sl2_local_zeta(3, 2.0) - 745.0 / 144.0) < 1e-12


def test_float_matches_exact_on_grid():
    for q in (3, 5, 7, 9):
        for s in (2, 3, 4):
            assert abs(sl2_local_zeta(q, float(s)) - float(_exact_zeta(q, s))) < 1e-10


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 25])
def test_level_one_identities(q):
    factor = local_factor(q)
    mults = [m for _, m in factor.finite_terms]
    assert sum(mults) == q + 4
    assert sum(m * d * d for d, m in factor.finite_terms) == q * (q * q - 1)


@pytest.mark.parametrize("q,k", [(3, 1), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (9, 2)])
def test_census_counts_and_mass(q, k):
    census = sl2_degree_census(q, k)
    assert census.total_multiplicity() == sl2_class_count(q, k)
    assert census.sum_degree_squares() == sl2_group_order(q, k)


def test_class_count_formula():
    # (q + 4) + sum_{j=2}^{k} q^(j-2) (q^2 + 3q)
    assert sl2_class_count(3, 1) == 7
    assert sl2_class_count(3, 2) == 25
    assert sl2_class_count(3, 3) == 79
    assert sl2_class_count(5, 1) == 9
    assert sl2_class_count(5, 2) == 49
    assert sl2_class_count(7, 1) == 11


def test_group_order_formula():
    assert sl2_group_order(3, 1) == 24
    assert sl2_group_order(3, 2) == 648
    assert sl2_group_order(5, 2) == 15_000


def test_level_contributions_shrink_geometrically():
    # successive level sums of m * d^(-2) scale by exactly 1/q
    q = 3
    factor = local_factor(q)
    seed_sum = Fraction(0)
    for degree, mult in factor.geometric_seeds:
        seed_sum += Fraction(mult, degree**2)
    levels = []
    for j in range(2, 6):
        scale = q ** (j - 2)
        levels.append(seed_sum * Fraction(scale, scale**2))
    for a, b in zip(levels, levels[1:]):
        assert b == a / q


def test_even_and_composite_q_rejected():
    with pytest.raises(ValueError):
        local_factor(4)
    with pytest.raises(ValueError):
        local_factor(2)
    with pytest.raises(ValueError):
        local_factor(15)
    with pytest.raises(ValueError):
        local_factor(1)


def test_s_at_or_below_one_rejected():
    with pytest.raises(ValueError):
        sl2_local_zeta(3, 1.0)
    with pytest.raises(ValueError):
        sl2_local_zeta(3, 0.5)


def test_division_algebra_abscissa():
    assert sl1_division_abscissa(2) == 1
    assert sl1_division_abscissa(4) == Fraction(1, 2)
    assert sl1_division_abscissa(100) == Fraction(1, 50)
    with pytest.raises(ValueError):
        sl1_division_abscissa(1)
