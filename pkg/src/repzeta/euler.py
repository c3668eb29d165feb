"""Global zeta as an Euler product: archimedean factor times SL2 local factors.

For the rank-one arithmetic lattice the global representation zeta function
factors into a Witten-zeta archimedean part (one factor per archimedean
place) and the product of the exact SL2 local factors over odd primes.  On
s in [2, 3] every local factor is squeezed between (1 - q^(1-s))^(-1/2) and
(1 - q^(1-s))^(-100), so the product inherits divergence at s = 2 from the
square root of the zeta pole and convergence beyond it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .census import DegreeCensus
from .numtheory import is_odd_prime_power, primes_up_to
from .sl2local import sl2_local_zeta
from .witten import zeta_partial

ARCHIMEDEAN_TAIL_TOLERANCE = 1e-8


@dataclass(frozen=True)
class EulerProductConfig:
    s: float
    prime_bound: int
    archimedean_exponent: int = 1
    excluded_primes: frozenset[int] = field(default_factory=lambda: frozenset({2}))

    def __post_init__(self):
        if self.prime_bound < 3:
            raise ValueError(f"prime bound must be >= 3, got {self.prime_bound}")
        if self.archimedean_exponent < 0:
            raise ValueError("archimedean exponent must be >= 0")
        if 2 not in self.excluded_primes:
            raise ValueError("the even prime has no closed-form local factor; keep 2 excluded")


def global_partial_product(
    cfg: EulerProductConfig,
    witten_census: DegreeCensus | None,
    *,
    acknowledge_divergence: bool = False,
) -> float:
    """Partial global zeta: (truncated archimedean zeta)^a * prod of local factors.

    Requires s > 2 for a finite limit, with the census cap large enough that
    the archimedean truncation error is below 1e-8.  For 1 < s <= 2 the
    product diverges as the prime bound grows; pass acknowledge_divergence
    to probe it anyway.  Factors are combined in ascending prime order.
    """
    s = cfg.s
    if not s > 1:
        raise ValueError(f"s must exceed 1, got {s}")
    if s <= 2 and not acknowledge_divergence:
        raise ValueError(
            f"s = {s} is at or below the divergence point 2; "
            "pass acknowledge_divergence=True to probe anyway"
        )
    log_total = 0.0
    if cfg.archimedean_exponent:
        if witten_census is None:
            raise ValueError("archimedean exponent > 0 needs a Witten census")
        if s > 2:
            cap = witten_census.cap
            tail = cap ** (1.0 - s) / (s - 1.0)
            if tail > ARCHIMEDEAN_TAIL_TOLERANCE:
                raise ValueError(
                    f"census cap {cap} leaves archimedean tail ~{tail:.2e} "
                    f"above {ARCHIMEDEAN_TAIL_TOLERANCE}"
                )
        log_total += cfg.archimedean_exponent * math.log(zeta_partial(witten_census, s))
    for p in primes_up_to(cfg.prime_bound):
        if p in cfg.excluded_primes:
            continue
        log_total += math.log(sl2_local_zeta(p, s))
    return math.exp(log_total)


@dataclass(frozen=True)
class SandwichResult:
    q: int
    s: float
    lower: float
    value: float
    upper: float

    @property
    def ok(self) -> bool:
        return self.lower < self.value < self.upper


def sandwich_check(q: int, s: float) -> SandwichResult:
    """Check (1-q^(1-s))^(-1/2) < local factor < (1-q^(1-s))^(-100) on s in [2,3]."""
    if not 2 <= s <= 3:
        raise ValueError(f"sandwich is stated for s in [2, 3], got {s}")
    if not is_odd_prime_power(q) or q < 3:
        raise ValueError(f"q must be an odd prime power >= 3, got {q}")
    base = 1.0 - q ** (1.0 - s)
    return SandwichResult(
        q=q,
        s=s,
        lower=base**-0.5,
        value=sl2_local_zeta(q, s),
        upper=base**-100.0,
    )


@dataclass(frozen=True)
class DivergenceProbeReport:
    """Partial products of the odd-prime local factors along a bound schedule.

    At s = 2 the log-product must exceed the comparator
    (1/2) * sum over odd p <= P of -log(1 - 1/p)  (half the log of the
    truncated zeta pole), and does so at every step while growing without
    visible bound.  For s > 2 the successive differences are reported so
    stabilization can be judged.
    """

    s: float
    prime_bounds: tuple[int, ...]
    values: tuple[float, ...]
    log_values: tuple[float, ...]
    comparators_log: tuple[float, ...] | None
    differences: tuple[float, ...]

    @property
    def strictly_increasing(self) -> bool:
        return all(b > a for a, b in zip(self.values, self.values[1:]))

    @property
    def exceeds_comparator(self) -> bool:
        if self.comparators_log is None:
            return True
        return all(lv > cv for lv, cv in zip(self.log_values, self.comparators_log))

    @property
    def differences_shrink(self) -> bool:
        return all(b < a for a, b in zip(self.differences, self.differences[1:]))

    def to_json_dict(self) -> dict:
        return {
            "s": self.s,
            "prime_bounds": list(self.prime_bounds),
            "values": list(self.values),
            "log_values": list(self.log_values),
            "comparators_log": None
            if self.comparators_log is None
            else list(self.comparators_log),
            "differences": list(self.differences),
            "strictly_increasing": self.strictly_increasing,
            "exceeds_comparator": self.exceeds_comparator,
        }


def divergence_probe(s: float, prime_bounds) -> DivergenceProbeReport:
    """Evaluate the odd-prime partial products at each bound in the schedule.

    s = 2 probes the divergence point (with the zeta-pole comparator);
    2 < s <= 3 probes convergence.  The schedule must be strictly increasing.
    """
    bounds = tuple(int(b) for b in prime_bounds)
    if len(bounds) < 2 or any(b <= a for a, b in zip(bounds, bounds[1:])):
        raise ValueError("prime bound schedule must be strictly increasing, length >= 2")
    if bounds[0] < 3:
        raise ValueError("smallest prime bound must be >= 3")
    if not 2 <= s <= 3:
        raise ValueError(f"probe covers s in [2, 3], got {s}")
    primes = [p for p in primes_up_to(bounds[-1]) if p != 2]
    log_values = []
    comparators = []
    log_acc = 0.0
    comp_acc = 0.0
    idx = 0
    for bound in bounds:
        while idx < len(primes) and primes[idx] <= bound:
            p = primes[idx]
            log_acc += math.log(sl2_local_zeta(p, s))
            comp_acc += -0.5 * math.log(1.0 - 1.0 / p)
            idx += 1
        log_values.append(log_acc)
        comparators.append(comp_acc)
    values = tuple(math.exp(lv) for lv in log_values)
    diffs = tuple(b - a for a, b in zip(values, values[1:]))
    return DivergenceProbeReport(
        s=s,
        prime_bounds=bounds,
        values=values,
        log_values=tuple(log_values),
        comparators_log=tuple(comparators) if s == 2 else None,
        differences=diffs,
    )
