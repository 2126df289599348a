"""Dyck paths, Catalan numbers, and the Catalan matroid.

A Dyck path of half-length n is a sequence of n upsteps and n downsteps whose
every prefix has at least as many ups as downs.  Its upstep set (the 1-based
positions of the U steps) determines the path, and the upstep sets of all
Dyck paths of length 2n are the bases of the Catalan matroid on [2n].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BadCardinalityError
from .matroids import Matroid


def catalan_number(n: int) -> int:
    """C_n = C(2n, n) / (n + 1), exactly."""
    if n < 0:
        raise ValueError("Catalan numbers need n >= 0")
    return math.comb(2 * n, n) // (n + 1)


def _prefixes_stay_nonnegative(steps: str) -> bool:
    height = 0
    for c in steps:
        height += 1 if c == "U" else -1
        if height < 0:
            return False
    return True


@dataclass(frozen=True)
class DyckPath:
    """A balanced U/D step string that never dips below its starting height."""

    n: int
    steps: str

    def __post_init__(self):
        if len(self.steps) != 2 * self.n:
            raise ValueError(f"need {2 * self.n} steps, got {len(self.steps)}")
        if set(self.steps) - {"U", "D"}:
            raise ValueError("steps must consist of U and D only")
        if self.steps.count("U") != self.n:
            raise ValueError("a Dyck path has equally many ups and downs")
        if not _prefixes_stay_nonnegative(self.steps):
            raise ValueError("path falls below its starting height")

    @classmethod
    def from_upsteps(cls, upsteps: Iterable[int], n: int) -> DyckPath:
        ups = set(upsteps)
        steps = "".join("U" if i in ups else "D" for i in range(1, 2 * n + 1))
        return cls(n, steps)

    @property
    def upsteps(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(self.steps) if c == "U")


def enumerate_dyck(n: int) -> list[DyckPath]:
    """All Dyck paths of length 2n, in lexicographic order of upstep sets.

    Candidates are filtered by the prefix condition itself, independently of
    the closed-form inequality test below.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    out = []
    for combo in combinations(range(1, 2 * n + 1), n):
        ups = set(combo)
        steps = "".join("U" if i in ups else "D" for i in range(1, 2 * n + 1))
        if _prefixes_stay_nonnegative(steps):
            out.append(DyckPath(n, steps))
    return out


def is_dyck_upstep_set(s: Sequence[int], n: int) -> bool:
    """Closed-form test: a_1 = 1 and a_i <= 2i - 1 for the sorted positions.

    (a_1 <= 1 already forces a_1 = 1.)  Raises BadCardinalityError when s
    does not have exactly n elements.
    """
    positions = sorted(s)
    if len(positions) != n or len(set(positions)) != n:
        raise BadCardinalityError(f"expected {n} distinct upstep positions")
    if any(not 1 <= a <= 2 * n for a in positions):
        raise ValueError("positions must lie in [2n]")
    return all(a <= 2 * i + 1 for i, a in enumerate(positions))


def catalan_matroid(n: int) -> Matroid:
    """The matroid on [2n] whose bases are the Dyck upstep sets of length 2n."""
    if n < 1:
        raise ValueError("the Catalan matroid needs n >= 1")
    bases = tuple(p.upsteps for p in enumerate_dyck(n))
    return Matroid(2 * n, n, bases)
