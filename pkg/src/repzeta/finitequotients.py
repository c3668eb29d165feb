"""Brute-force SL2 over finite local rings: enumeration and conjugacy counts.

Two ring flavors with the same residue field F_p: integers mod p^k and
truncated polynomials F_p[t]/(t^k).  Elements are encoded as integers in
[0, p^k): the residue itself in the first case, the base-p digit string of
the polynomial in the second (so the uniformizer power pi^j encodes as p^j
in both).  The group is enumerated by closure from elementary matrices; one
pair of elementaries per uniformizer power is needed, since over the
polynomial ring the two classic elementaries only generate the subgroup
defined over the prime field.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceededError
from .numtheory import is_prime

DEFAULT_GROUP_BUDGET = 200_000
FULL_CONJUGATION_THRESHOLD = 50_000
_MAX_TABLE_SIZE = 2048  # polynomial flavor builds size*size op tables

Matrix = tuple[int, int, int, int]


class QuotientRing:
    """Finite local ring of size p^k: Z/p^k ("char0") or F_p[t]/t^k ("charp")."""

    def __init__(self, p: int, k: int, flavor: str = "char0"):
        if flavor not in ("char0", "charp"):
            raise ValueError(f"flavor must be 'char0' or 'charp', got {flavor!r}")
        if p < 3 or p % 2 == 0 or not is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        size = p**k
        if size >= 2**31:
            raise ValueError(f"ring size p^k = {size} exceeds the 2^31 encoding bound")
        self.p = p
        self.k = k
        self.flavor = flavor
        self.size = size
        self.zero = 0
        self.one = 1
        if flavor == "char0":
            m = size

            def mat_mul(x: Matrix, y: Matrix) -> Matrix:
                a, b, c, d = x
                e, f, g, h = y
                return ((a * e + b * g) % m, (a * f + b * h) % m,
                        (c * e + d * g) % m, (c * f + d * h) % m)

            def mat_inv(x: Matrix) -> Matrix:
                a, b, c, d = x
                return (d, -b % m, -c % m, a)

            self.mat_mul = mat_mul
            self.mat_inv = mat_inv
        else:
            if size > _MAX_TABLE_SIZE:
                raise ValueError(
                    f"polynomial flavor builds {size}x{size} operation tables; "
                    f"size bound is {_MAX_TABLE_SIZE}"
                )
            self._build_tables()
            mul = self._mul
            add = self._add
            neg = self._neg

            def mat_mul(x: Matrix, y: Matrix) -> Matrix:
                a, b, c, d = x
                e, f, g, h = y
                return (add[mul[a][e]][mul[b][g]], add[mul[a][f]][mul[b][h]],
                        add[mul[c][e]][mul[d][g]], add[mul[c][f]][mul[d][h]])

            def mat_inv(x: Matrix) -> Matrix:
                a, b, c, d = x
                return (d, neg[b], neg[c], a)

            self.mat_mul = mat_mul
            self.mat_inv = mat_inv

    def _digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return out

    def _from_digits(self, digits) -> int:
        v = 0
        for d in reversed(digits):
            v = v * self.p + d
        return v

    def _build_tables(self) -> None:
        p, k, size = self.p, self.k, self.size
        all_digits = [self._digits(a) for a in range(size)]
        add = [[0] * size for _ in range(size)]
        mul = [[0] * size for _ in range(size)]
        for a in range(size):
            da = all_digits[a]
            for b in range(a, size):
                db = all_digits[b]
                s = self._from_digits([(x + y) % p for x, y in zip(da, db)])
                add[a][b] = s
                add[b][a] = s
                conv = [0] * k
                for i, x in enumerate(da):
                    if x:
                        for j, y in enumerate(db[: k - i]):
                            conv[i + j] = (conv[i + j] + x * y) % p
                m = self._from_digits(conv)
                mul[a][b] = m
                mul[b][a] = m
        self._add = add
        self._mul = mul
        self._neg = [self._from_digits([(-x) % p for x in self._digits(a)]) for a in range(size)]

    # --- elementwise ops on numpy arrays (used by the conjugacy search) ---

    def np_tables(self):
        if self.flavor == "char0":
            m = self.size
            return (lambda a, b: (a * b) % m, lambda a, b: (a + b) % m, lambda a: (-a) % m)
        mul = np.array(self._mul, dtype=np.int64)
        add = np.array(self._add, dtype=np.int64)
        neg = np.array(self._neg, dtype=np.int64)
        return (lambda a, b: mul[a, b], lambda a, b: add[a, b], lambda a: neg[a])

    def uniformizer_power(self, j: int) -> int:
        """Encoding of pi^j (p^j or t^j); zero once j >= k."""
        if j < 0:
            raise ValueError("exponent must be >= 0")
        return self.p**j if j < self.k else 0

    def label(self) -> str:
        if self.flavor == "char0":
            return f"Z/{self.p}^{self.k}"
        return f"F_{self.p}[t]/(t^{self.k})"


def predicted_order(ring: QuotientRing) -> int:
    """|SL2| over the ring: p^(3k-2) (p^2 - 1)."""
    p, k = ring.p, ring.k
    return p ** (3 * k - 2) * (p * p - 1)


@dataclass
class FiniteMatrixGroup:
    ring: QuotientRing
    generators: tuple[Matrix, ...]
    elements: list[Matrix] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)


def build_sl2_group(ring: QuotientRing, *, max_order: int = DEFAULT_GROUP_BUDGET) -> FiniteMatrixGroup:
    """Enumerate SL2 over the ring by closure from elementary matrices.

    Generators are the upper/lower elementaries with every uniformizer power
    as off-diagonal entry.  The closure must reproduce the predicted order
    exactly, which certifies both completeness and the generator set.
    """
    order = predicted_order(ring)
    if order > max_order:
        raise BudgetExceededError(
            f"SL2 over {ring.label()} has order {order}, over the budget of {max_order}"
        )
    one, zero = ring.one, ring.zero
    gens: list[Matrix] = []
    for j in range(ring.k):
        u = ring.uniformizer_power(j)
        gens.append((one, u, zero, one))
        gens.append((one, zero, u, one))
    mat_mul = ring.mat_mul
    identity: Matrix = (one, zero, zero, one)
    seen: set[Matrix] = {identity}
    queue: deque[Matrix] = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = mat_mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != order:
        raise AssertionError(
            f"closure over {ring.label()} reached {len(seen)} elements, expected {order}"
        )
    return FiniteMatrixGroup(ring=ring, generators=tuple(gens), elements=sorted(seen))


@dataclass(frozen=True)
class ConjugacyClasses:
    """Conjugacy partition: lexicographically least representatives, sorted."""

    representatives: tuple[Matrix, ...]
    sizes: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.representatives)

    def size_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for s in self.sizes:
            hist[s] = hist.get(s, 0) + 1
        return hist


def conjugacy_classes(
    group: FiniteMatrixGroup, *, full_threshold: int = FULL_CONJUGATION_THRESHOLD
) -> ConjugacyClasses:
    """Partition the group into conjugacy classes.

    Small groups (order <= full_threshold) conjugate each unvisited element
    by the whole group at once (vectorized); larger ones close each orbit
    under conjugation by the generators only.  Both are exact and produce
    identical, ordering-independent output.
    """
    if group.order <= full_threshold:
        pairs = _classes_full(group)
    else:
        pairs = _classes_generator_orbits(group)
    pairs.sort()
    reps = tuple(rep for rep, _ in pairs)
    sizes = tuple(size for _, size in pairs)
    if sum(sizes) != group.order:
        raise AssertionError("conjugacy class sizes do not add up to the group order")
    return ConjugacyClasses(representatives=reps, sizes=sizes)


def _encode(mat: Matrix, m: int) -> int:
    a, b, c, d = mat
    return ((a * m + b) * m + c) * m + d


def _classes_full(group: FiniteMatrixGroup) -> list[tuple[Matrix, int]]:
    ring = group.ring
    m = ring.size
    mul, add, neg = ring.np_tables()
    arr = np.array(group.elements, dtype=np.int64)
    ga, gb, gc, gd = arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3]
    ia, ib, ic, id_ = gd, neg(gb), neg(gc), ga
    enc_all = ((ga * m + gb) * m + gc) * m + gd
    position = {int(e): i for i, e in enumerate(enc_all)}
    visited = np.zeros(group.order, dtype=bool)
    out: list[tuple[Matrix, int]] = []
    for i in range(group.order):
        if visited[i]:
            continue
        xa, xb, xc, xd = group.elements[i]
        # t = g x, then y = t g^-1, for every g simultaneously
        t1 = add(mul(ga, xa), mul(gb, xc))
        t2 = add(mul(ga, xb), mul(gb, xd))
        t3 = add(mul(gc, xa), mul(gd, xc))
        t4 = add(mul(gc, xb), mul(gd, xd))
        y1 = add(mul(t1, ia), mul(t2, ic))
        y2 = add(mul(t1, ib), mul(t2, id_))
        y3 = add(mul(t3, ia), mul(t4, ic))
        y4 = add(mul(t3, ib), mul(t4, id_))
        encs = np.unique(((y1 * m + y2) * m + y3) * m + y4)
        for e in encs:
            visited[position[int(e)]] = True
        least = int(encs[0])
        rep = (least // m**3 % m, least // m**2 % m, least // m % m, least % m)
        out.append((rep, len(encs)))
    return out


def _classes_generator_orbits(group: FiniteMatrixGroup) -> list[tuple[Matrix, int]]:
    ring = group.ring
    mat_mul, mat_inv = ring.mat_mul, ring.mat_inv
    conjugators = [(g, mat_inv(g)) for g in group.generators]
    visited: set[Matrix] = set()
    out: list[tuple[Matrix, int]] = []
    for x in group.elements:
        if x in visited:
            continue
        orbit = {x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for g, ginv in conjugators:
                z = mat_mul(mat_mul(g, y), ginv)
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        visited |= orbit
        out.append((min(orbit), len(orbit)))
    return out


def class_growth_exponents(counts: dict[int, int], q: int) -> list[float]:
    """log_q of the class count at level k, divided by k, in level order.

    This is the finite-level estimate of the conjugacy growth exponent; for
    SL2 it decreases toward 1 as the level grows.
    """
    import math

    if not counts:
        raise ValueError("need class counts for at least one level")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    out = []
    for k in sorted(counts):
        n = counts[k]
        if k < 1 or n < 1:
            raise ValueError(f"invalid level/count pair ({k}, {n})")
        out.append(math.log(n) / (k * math.log(q)))
    return out
