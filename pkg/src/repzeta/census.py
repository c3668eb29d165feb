"""Degree censuses: multiset of irreducible-character degrees up to a cap.

A census records, for every degree n <= cap that occurs, how many
irreducibles have that degree.  The running total R(n) is the count of
irreducibles of degree at most n, the basic object all the growth estimates
are built on.
"""

from __future__ import annotations

import csv
import json
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Iterator, Mapping


@dataclass(frozen=True)
class DegreeCensus:
    cap: int
    degrees: tuple[int, ...]
    multiplicities: tuple[int, ...]
    _cumulative: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_counts(cls, counts: Mapping[int, int], cap: int) -> "DegreeCensus":
        if cap < 1:
            raise ValueError(f"census cap must be >= 1, got {cap}")
        degrees = sorted(counts)
        mults = []
        for d in degrees:
            m = counts[d]
            if d < 1 or d > cap:
                raise ValueError(f"degree {d} outside [1, {cap}]")
            if m < 1:
                raise ValueError(f"multiplicity for degree {d} must be >= 1, got {m}")
            mults.append(m)
        running = []
        total = 0
        for m in mults:
            total += m
            running.append(total)
        return cls(
            cap=cap,
            degrees=tuple(degrees),
            multiplicities=tuple(mults),
            _cumulative=tuple(running),
        )

    def __len__(self) -> int:
        return len(self.degrees)

    def items(self) -> Iterator[tuple[int, int]]:
        return zip(self.degrees, self.multiplicities)

    def cumulative(self, n: int) -> int:
        """R(n): number of recorded irreducibles of degree <= n."""
        i = bisect_right(self.degrees, n)
        return self._cumulative[i - 1] if i else 0

    def total_multiplicity(self) -> int:
        return self._cumulative[-1] if self.degrees else 0

    def sum_degree_squares(self) -> int:
        """Exact sum of multiplicity * degree^2 (the group order, for a full
        finite-group census)."""
        return sum(m * d * d for d, m in self.items())

    def max_degree(self) -> int:
        return self.degrees[-1] if self.degrees else 0

    def to_json_dict(self) -> dict:
        return {
            "cap": self.cap,
            "entries": [
                {"degree": d, "multiplicity": m, "cumulative": c}
                for (d, m), c in zip(self.items(), self._cumulative)
            ],
        }

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["degree", "multiplicity", "cumulative"])
            for (d, m), c in zip(self.items(), self._cumulative):
                writer.writerow([d, m, c])

    def write_json(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
