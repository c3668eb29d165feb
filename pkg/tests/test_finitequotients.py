"""Brute-force SL2 censuses over finite quotient rings, both flavors."""

import math
import random

import pytest

from repzeta.errors import BudgetExceededError
from repzeta.finitequotients import (
    FiniteMatrixGroup,
    QuotientRing,
    build_sl2_group,
    class_growth_exponents,
    conjugacy_classes,
    predicted_order,
)

EXPECTED_COUNTS = {(3, 1): 7, (3, 2): 25, (5, 1): 9, (7, 1): 11}


@pytest.mark.parametrize("flavor", ["char0", "charp"])
@pytest.mark.parametrize("p,k", sorted(EXPECTED_COUNTS))
def test_orders_and_counts_both_flavors(flavor, p, k):
    ring = QuotientRing(p, k, flavor)
    group = build_sl2_group(ring)
    assert group.order == predicted_order(ring) == p ** (3 * k - 2) * (p * p - 1)
    classes = conjugacy_classes(group)
    assert classes.count == EXPECTED_COUNTS[(p, k)]
    assert sum(classes.sizes) == group.order


def test_level_two_at_five_both_flavors():
    counts = {}
    for flavor in ("char0", "charp"):
        group = build_sl2_group(QuotientRing(5, 2, flavor))
        assert group.order == 15_000
        counts[flavor] = conjugacy_classes(group).count
    assert counts == {"char0": 49, "charp": 49}


def test_identity_is_a_singleton_class():
    group = build_sl2_group(QuotientRing(3, 2, "char0"))
    classes = conjugacy_classes(group)
    one = (1, 0, 0, 1)
    idx = classes.representatives.index(one)
    assert classes.sizes[idx] == 1


def test_full_and_orbit_paths_agree():
    group = build_sl2_group(QuotientRing(3, 2, "char0"))
    full = conjugacy_classes(group, full_threshold=10**9)
    orbit = conjugacy_classes(group, full_threshold=0)
    assert full.representatives == orbit.representatives
    assert full.sizes == orbit.sizes


def test_element_order_invariance():
    ring = QuotientRing(3, 2, "charp")
    group = build_sl2_group(ring)
    baseline = conjugacy_classes(group)
    shuffled = list(group.elements)
    random.Random(11).shuffle(shuffled)
    regrouped = FiniteMatrixGroup(ring=ring, generators=group.generators,
                                  elements=tuple(shuffled))
    reshuffled = conjugacy_classes(regrouped)
    assert reshuffled.count == baseline.count
    assert sorted(reshuffled.sizes) == sorted(baseline.sizes)


def test_ring_flavor_determines_label_but_not_census():
    for p, k in ((3, 1), (3, 2)):
        a = QuotientRing(p, k, "char0")
        b = QuotientRing(p, k, "charp")
        assert a.label() != b.label()
        ca = conjugacy_classes(build_sl2_group(a))
        cb = conjugacy_classes(build_sl2_group(b))
        assert ca.count == cb.count
        assert sorted(ca.sizes) == sorted(cb.sizes)


def test_budget_error_names_predicted_order():
    ring = QuotientRing(3, 2, "char0")
    with pytest.raises(BudgetExceededError) as err:
        build_sl2_group(ring, max_order=100)
    assert "648" in str(err.value)


def test_ring_validation():
    with pytest.raises(ValueError):
        QuotientRing(2, 1, "char0")  # even residue characteristic
    with pytest.raises(ValueError):
        QuotientRing(6, 1, "char0")  # not prime
    with pytest.raises(ValueError):
        QuotientRing(3, 0, "char0")
    with pytest.raises(ValueError):
        QuotientRing(3, 1, "weird")


def test_class_growth_exponents_q3():
    gammas = class_growth_exponents({1: 7, 2: 25, 3: 79}, 3)
    expected = [
        math.log(7) / math.log(3),
        math.log(25) / (2 * math.log(3)),
        math.log(79) / (3 * math.log(3)),
    ]
    assert gammas == pytest.approx(expected)
    assert gammas == pytest.approx([1.7712, 1.4650, 1.3257], abs=5e-4)
    assert all(a > b for a, b in zip(gammas, gammas[1:]))


def test_class_growth_exponents_q5():
    gammas = class_growth_exponents({1: 9, 2: 49}, 5)
    assert gammas == pytest.approx([1.3652, 1.2091], abs=5e-4)


def test_class_growth_exponents_validation():
    with pytest.raises(ValueError):
        class_growth_exponents({}, 3)
    with pytest.raises(ValueError):
        class_growth_exponents({1: 7}, 1)
    with pytest.raises(ValueError):
        class_growth_exponents({0: 7}, 3)
    with pytest.raises(ValueError):
        class_growth_exponents({1: 0}, 3)
