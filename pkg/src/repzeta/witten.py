"""Witten zeta machinery: exhaustive dimension censuses and partial sums.

The Witten zeta function of a simple complex group is sum 1/dim^s over the
irreducibles; enumerating all dominant weights whose Weyl dimension stays
under a cap gives its census exactly.  Pruning the weight search is sound
because the dimension is strictly increasing in every weight coordinate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .census import DegreeCensus
from .errors import BudgetExceededError
from .rootsystems import RootSystem, weyl_dim

DEFAULT_CENSUS_BUDGET = 10_000_000


def dimension_census(
    rs: RootSystem, max_dim: int, *, max_entries: int = DEFAULT_CENSUS_BUDGET
) -> DegreeCensus:
    """Census of all irreducible dimensions <= max_dim (complete, exact).

    Depth-first search over weight coordinates; a branch is cut as soon as
    the dimension with the remaining coordinates at zero already exceeds the
    cap, which is valid by coordinate monotonicity.  Raises
    BudgetExceededError if more than max_entries irreducibles would be
    recorded.
    """
    if max_dim < 1:
        raise ValueError(f"max_dim must be >= 1, got {max_dim}")
    if max_entries < 1:
        raise ValueError("max_entries must be >= 1")
    r = rs.rank
    counts: dict[int, int] = {}
    weight = [0] * r
    recorded = 0

    def descend(i: int) -> None:
        nonlocal recorded
        while True:
            d = weyl_dim(rs, weight)
            if d > max_dim:
                weight[i] = 0
                return
            if i == r - 1:
                counts[d] = counts.get(d, 0) + 1
                recorded += 1
                if recorded > max_entries:
                    raise BudgetExceededError(
                        f"dimension census for {rs.label()} exceeded budget of "
                        f"{max_entries} irreducibles below {max_dim}"
                    )
            else:
                descend(i + 1)
            weight[i] += 1

    descend(0)
    return DegreeCensus.from_counts(counts, max_dim)


def zeta_partial(census: DegreeCensus, s: float) -> float:
    """Partial zeta sum: multiplicity * degree^(-s), ascending degree order."""
    if not s > 0:
        raise ValueError(f"s must be positive, got {s}")
    total = 0.0
    for d, m in census.items():
        total += m * d ** (-s)
    return total


@dataclass(frozen=True)
class AbscissaEstimate:
    slope: float
    raw_ratio: float
    sample_points: tuple[tuple[int, int], ...]


def abscissa_estimate(census: DegreeCensus, *, points: int = 32) -> AbscissaEstimate:
    """Estimate the growth exponent of R(n) from the top decade of the census.

    Fits log R(n) against log n by least squares at geometrically spaced n in
    [cap/10, cap]; also reports the raw ratio log R(cap) / log cap.  Needs a
    cap of at least 100 and at least 10 usable sample points.
    """
    n_max = census.cap
    if n_max < 100:
        raise ValueError(f"census cap {n_max} too small for an abscissa estimate (need >= 100)")
    lo = n_max / 10.0
    samples: list[tuple[int, int]] = []
    seen: set[int] = set()
    for i in range(points):
        n = round(lo * 10.0 ** (i / (points - 1)))
        n = min(max(n, 1), n_max)
        if n in seen:
            continue
        seen.add(n)
        rn = census.cumulative(n)
        if rn > 0:
            samples.append((n, rn))
    if len(samples) < 10:
        raise ValueError(f"only {len(samples)} usable sample points, need >= 10")
    xs = [math.log(n) for n, _ in samples]
    ys = [math.log(rn) for _, rn in samples]
    k = len(xs)
    xbar = sum(xs) / k
    ybar = sum(ys) / k
    sxx = sum((x - xbar) ** 2 for x in xs)
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    slope = sxy / sxx
    r_cap = census.cumulative(n_max)
    raw = math.log(r_cap) / math.log(n_max)
    return AbscissaEstimate(slope=slope, raw_ratio=raw, sample_points=tuple(samples))


@dataclass(frozen=True)
class OrderedExpSeriesReport:
    """Convergence report for sum over 1 <= b_1 < ... < b_k of exp(sum a_i b_i)."""

    coefficients: tuple[float, ...]
    suffix_sums: tuple[float, ...]
    converges: bool
    closed_form: float | None
    depth: int
    truncated_sums: tuple[tuple[int, float], ...]

    @property
    def truncated(self) -> float:
        return self.truncated_sums[-1][1]

    @property
    def agreement_gap(self) -> float | None:
        if self.closed_form is None:
            return None
        return abs(self.truncated - self.closed_form)


def _truncated_ordered_exp_sum(coeffs: tuple[float, ...], depth: int) -> float:
    """Direct evaluation of the series with every index b_i <= depth."""
    k = len(coeffs)
    # g[i][b] = partial sum over choices of b_i >= b, ..., b_k, all <= depth
    nxt = [1.0] * (depth + 2)
    for i in range(k - 1, -1, -1):
        cur = [0.0] * (depth + 2)
        acc = 0.0
        for b in range(depth, 0, -1):
            acc += math.exp(coeffs[i] * b) * nxt[b + 1]
            cur[b] = acc
        nxt = cur
    return nxt[1]


def ordered_exp_series_check(coefficients, depth: int = 60) -> OrderedExpSeriesReport:
    """Convergence test for sum_{1<=b_1<...<b_k} exp(a_1 b_1 + ... + a_k b_k).

    The series converges exactly when every suffix sum a_i + ... + a_k is
    negative, in which case it equals

        prod_{i=1..k} exp(S_i) / (1 - exp(S_i)),   S_i = a_i + ... + a_k.

    Truncated sums (all b_i <= depth) are returned alongside so the closed
    form can be checked numerically.
    """
    coeffs = tuple(float(a) for a in coefficients)
    if not coeffs:
        raise ValueError("need at least one coefficient")
    if depth < len(coeffs):
        raise ValueError(f"depth {depth} too small for {len(coeffs)} nested indices")
    suffix: list[float] = []
    acc = 0.0
    for a in reversed(coeffs):
        acc += a
        suffix.append(acc)
    suffix.reverse()
    converges = all(s < 0 for s in suffix)
    closed = None
    if converges:
        closed = 1.0
        for s in suffix:
            closed *= math.exp(s) / (1.0 - math.exp(s))
    checkpoints = sorted({max(len(coeffs), depth // 4), max(len(coeffs), depth // 2), depth})
    truncated = tuple((d, _truncated_ordered_exp_sum(coeffs, d)) for d in checkpoints)
    return OrderedExpSeriesReport(
        coefficients=coeffs,
        suffix_sums=tuple(suffix),
        converges=converges,
        closed_form=closed,
        depth=depth,
        truncated_sums=truncated,
    )
