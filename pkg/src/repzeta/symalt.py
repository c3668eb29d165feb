"""Character degrees of symmetric and alternating groups, and wreath towers.

Degrees of S_k come from partitions via the hook length formula.  Restricting
to A_k, a partition and its transpose give the same degree (one entry), while
a self-conjugate partition splits into two irreducibles of half the degree.
The wreath-tower helpers evaluate the growth conditions under which an
iterated permutational wreath product of alternating groups keeps a finite
abscissa target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .census import DegreeCensus

MAX_PARTITION_SIZE = 40


def partitions(k: int) -> list[tuple[int, ...]]:
    """All partitions of k in reverse lexicographic order: (k) first, (1,..,1) last."""
    if k < 1 or k > MAX_PARTITION_SIZE:
        raise ValueError(f"partition size must be in 1..{MAX_PARTITION_SIZE}, got {k}")
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def extend(remaining: int, largest: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            extend(remaining - part, part)
            prefix.pop()

    extend(k, k)
    return out


def conjugate_partition(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose of the Young diagram."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def _check_partition(parts) -> tuple[int, ...]:
    t = tuple(parts)
    if not t or any(p < 1 for p in t) or any(a < b for a, b in zip(t, t[1:])):
        raise ValueError(f"not a partition (weakly decreasing positive parts): {parts!r}")
    return t


def hook_degree(parts) -> int:
    """Character degree of S_k at the partition: k! / product of hook lengths."""
    t = _check_partition(parts)
    k = sum(t)
    conj = conjugate_partition(t)
    hooks = 1
    for i, row in enumerate(t):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    degree, rem = divmod(math.factorial(k), hooks)
    if rem:
        raise AssertionError(f"hook product does not divide {k}! for {t}")
    return degree


def sym_degree_census(k: int) -> DegreeCensus:
    """Full degree census of S_k; degree-square sum equals k!."""
    counts: dict[int, int] = {}
    for lam in partitions(k):
        d = hook_degree(lam)
        counts[d] = counts.get(d, 0) + 1
    census = DegreeCensus.from_counts(counts, max(counts))
    if census.sum_degree_squares() != math.factorial(k):
        raise AssertionError(f"S_{k} census degree-square sum != {k}!")
    return census


def alt_degree_census(k: int) -> DegreeCensus:
    """Full degree census of A_k for k >= 5.

    Each unordered pair {partition, transpose} contributes one degree; each
    self-conjugate partition contributes the degree twice at half size (the
    half-degrees are always even in total count, never fractional).
    """
    if k < 5:
        raise ValueError(f"alternating census needs k >= 5, got {k}")
    counts: dict[int, int] = {}

    def put(d: int, m: int) -> None:
        counts[d] = counts.get(d, 0) + m

    for lam in partitions(k):
        conj = conjugate_partition(lam)
        if lam == conj:
            d = hook_degree(lam)
            if d % 2:
                raise AssertionError(f"self-conjugate partition {lam} has odd degree {d}")
            put(d // 2, 2)
        elif lam < conj:
            # counted once per unordered pair; the transpose side is skipped
            put(hook_degree(lam), 1)
    census = DegreeCensus.from_counts(counts, max(counts))
    if 2 * census.sum_degree_squares() != math.factorial(k):
        raise AssertionError(f"A_{k} census degree-square sum != {k}!/2")
    return census


def alt_zeta(k: int, s: float) -> float:
    """Partial (here: complete) zeta sum of A_k at s."""
    census = alt_degree_census(k)
    return sum(m * d ** (-s) for d, m in census.items())


def alt_zeta_exact(k: int, s: int) -> Fraction:
    """Exact rational zeta value of A_k at a non-negative integer s."""
    if s < 0:
        raise ValueError("exact evaluation needs integer s >= 0")
    census = alt_degree_census(k)
    return sum((Fraction(m, d**s) for d, m in census.items()), Fraction(0))


@dataclass(frozen=True)
class PerfectBoundResult:
    holds: bool
    constant: float
    exponent: float
    tightest_n: int
    min_slack: float


def perfect_group_count_bound(census: DegreeCensus, s: float, c: float) -> PerfectBoundResult:
    """Check R(n) <= c * n^s + 1 for every n up to the census cap.

    Valid input is the census of a group with exactly one linear character
    (a perfect group); with c = zeta(s) - 1 the inequality always holds, and
    the result reports where it is tightest.
    """
    if census.cumulative(1) != 1:
        raise ValueError("count bound needs exactly one degree-1 character (perfect group)")
    if not s > 0:
        raise ValueError(f"s must be positive, got {s}")
    holds = True
    tightest_n = 1
    min_slack = math.inf
    for n in range(1, census.cap + 1):
        slack = c * n**s + 1 - census.cumulative(n)
        if slack < min_slack:
            min_slack = slack
            tightest_n = n
        if slack < 0:
            holds = False
    return PerfectBoundResult(
        holds=holds, constant=c, exponent=s, tightest_n=tightest_n, min_slack=min_slack
    )


def sym_alt_count_inequality(k: int) -> bool:
    """Index-2 transfer inequalities between S_k and A_k degree counts.

    For a subgroup of index 2: R_n(A) <= 2 R_{2n}(S) and R_n(S) <= 2 R_n(A),
    checked for every n up to the larger census cap.
    """
    sym = sym_degree_census(k)
    alt = alt_degree_census(k)
    top = max(sym.cap, alt.cap)
    for n in range(1, top + 1):
        if alt.cumulative(n) > 2 * sym.cumulative(2 * n):
            return False
        if sym.cumulative(n) > 2 * alt.cumulative(n):
            return False
    return True


def wreath_log_order(ells, j: int) -> float:
    """log |W_j| for the tower W_0 = A_{l_0}, W_j = (A_{l_j})^(L_{j-1}) wr-ext W_{j-1},
    where L_{j-1} = l_0 * ... * l_{j-1}; each layer multiplies the order by
    (l_j! / 2)^(L_{j-1}).  Computed in log space via lgamma."""
    ells = tuple(int(v) for v in ells)
    if j < 0 or j >= len(ells):
        raise ValueError(f"tower level {j} out of range for {len(ells)} layer sizes")
    if any(v < 5 for v in ells[: j + 1]):
        raise ValueError("layer sizes must all be >= 5")
    log_order = math.lgamma(ells[0] + 1) - math.log(2)
    big_l = ells[0]
    for i in range(1, j + 1):
        log_order += big_l * (math.lgamma(ells[i] + 1) - math.log(2))
        big_l *= ells[i]
    return log_order


EXACT_ZETA_LIMIT = MAX_PARTITION_SIZE
NOT_VERIFIABLE = "not verifiable at desk scale"


@dataclass(frozen=True)
class WreathConditionsReport:
    ells: tuple[int, ...]
    r: int
    log_order_prev: float
    branching_product: int
    growth_lhs: float
    growth_holds: bool
    zeta_status: str  # "holds" / "fails" / NOT_VERIFIABLE
    zeta_value: float | None
    zeta_bound: float


def wreath_tower_conditions(ells, r: int) -> WreathConditionsReport:
    """Evaluate the two sufficient conditions at tower level r.

    Growth condition: log |W_{r-1}| / log l_r < 1/r.  Zeta condition:
    zeta_{A_{l_r}}(1/r) < 1 + 1/L_{r-1}, decidable exactly only when l_r is
    small enough to enumerate partitions (l_r <= 40); otherwise reported as
    not verifiable at desk scale.
    """
    ells = tuple(int(v) for v in ells)
    if r < 1:
        raise ValueError(f"tower level r must be >= 1, got {r}")
    if len(ells) < r + 1:
        raise ValueError(f"need at least {r + 1} layer sizes, got {len(ells)}")
    if any(v < 5 for v in ells[: r + 1]):
        raise ValueError("layer sizes must all be >= 5")
    log_prev = wreath_log_order(ells, r - 1)
    big_l = 1
    for v in ells[:r]:
        big_l *= v
    lhs = log_prev / math.log(ells[r])
    growth_holds = lhs < 1.0 / r
    zeta_bound = 1.0 + 1.0 / big_l
    if ells[r] <= EXACT_ZETA_LIMIT:
        value = alt_zeta(ells[r], 1.0 / r)
        status = "holds" if value < zeta_bound else "fails"
    else:
        value = None
        status = NOT_VERIFIABLE
    return WreathConditionsReport(
        ells=ells,
        r=r,
        log_order_prev=log_prev,
        branching_product=big_l,
        growth_lhs=lhs,
        growth_holds=growth_holds,
        zeta_status=status,
        zeta_value=value,
        zeta_bound=zeta_bound,
    )
