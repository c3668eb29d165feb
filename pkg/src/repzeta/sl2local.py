"""Exact representation zeta local factor of SL2 over a compact local ring.

For odd residue field size q the full character-degree list of SL2 of the
valuation ring is known in closed form: six degree families at level <= 1
plus three families per level j >= 2 whose degrees and multiplicities both
scale by q^(j-2).  Summed against degree^(-s) this gives a finite expression
with a single geometric factor 1/(1 - q^(1-s)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .census import DegreeCensus
from .numtheory import is_odd_prime_power


@dataclass(frozen=True)
class Sl2LocalFactor:
    """Degree/multiplicity families for SL2 over a local ring with odd q.

    finite_terms covers levels 0 and 1 (may contain zero multiplicities for
    tiny q, dropped from censuses); geometric_seeds lists the level-2
    families, repeated at level j with degree and multiplicity both times
    q^(j-2).
    """

    q: int
    finite_terms: tuple[tuple[int, int], ...]
    geometric_seeds: tuple[tuple[int, int], ...]


def _check_q(q: int) -> None:
    if q % 2 == 0:
        raise ValueError(f"q = {q} is even; the closed form needs an odd residue field")
    if q < 3 or not is_odd_prime_power(q):
        raise ValueError(f"q = {q} is not an odd prime power >= 3")


def local_factor(q: int) -> Sl2LocalFactor:
    _check_q(q)
    finite = (
        (1, 1),
        (q, 1),
        (q + 1, (q - 3) // 2),
        ((q + 1) // 2, 2),
        (q - 1, (q - 1) // 2),
        ((q - 1) // 2, 2),
    )
    seeds = (
        ((q * q - 1) // 2, 4 * q),
        (q * q - q, (q * q - 1) // 2),
        (q * q + q, (q - 1) ** 2 // 2),
    )
    return Sl2LocalFactor(q=q, finite_terms=finite, geometric_seeds=seeds)


def sl2_local_zeta(q: int, s: float) -> float:
    """Exact local zeta value: finite part plus geometric part / (1 - q^(1-s)).

    Defined for s > 1 (the geometric factor diverges at s = 1).
    """
    factor = local_factor(q)
    if not s > 1:
        raise ValueError(f"s must exceed 1 for the geometric factor to converge, got {s}")
    finite = sum(m * d ** (-s) for d, m in factor.finite_terms)
    seeds = sum(m * d ** (-s) for d, m in factor.geometric_seeds)
    return finite + seeds / (1.0 - q ** (1.0 - s))


def sl2_degree_census(q: int, k: int) -> DegreeCensus:
    """Degree census of SL2 of the ring truncated at level k (exact).

    Level <= 1 contributes the six finite families; each level 2 <= j <= k
    contributes the three seed families with degree and multiplicity both
    scaled by q^(j-2).  Total class count is (q+4) + sum_{j=2..k} q^(j-1)(q+3)
    and the degree-square sum is the group order q^(3k-2) (q^2-1).
    """
    factor = local_factor(q)
    if k < 1:
        raise ValueError(f"level k must be >= 1, got {k}")
    counts: dict[int, int] = {}

    def put(d: int, m: int) -> None:
        if m:
            counts[d] = counts.get(d, 0) + m

    for d, m in factor.finite_terms:
        put(d, m)
    for j in range(2, k + 1):
        scale = q ** (j - 2)
        for d, m in factor.geometric_seeds:
            put(d * scale, m * scale)
    cap = max(counts)
    return DegreeCensus.from_counts(counts, cap)


def sl2_class_count(q: int, k: int) -> int:
    """Predicted number of conjugacy classes of SL2 at level k."""
    _check_q(q)
    if k < 1:
        raise ValueError(f"level k must be >= 1, got {k}")
    return (q + 4) + sum(q ** (j - 1) * (q + 3) for j in range(2, k + 1))


def sl2_group_order(q: int, k: int) -> int:
    """|SL2| of the level-k quotient: q^(3k-2) (q^2 - 1)."""
    _check_q(q)
    if k < 1:
        raise ValueError(f"level k must be >= 1, got {k}")
    return q ** (3 * k - 2) * (q * q - 1)


def sl1_division_abscissa(d: int) -> Fraction:
    """Abscissa for the norm-one units of a division algebra of degree d: 2/d."""
    if d < 2:
        raise ValueError(f"division algebra degree must be >= 2, got {d}")
    return Fraction(2, d)
