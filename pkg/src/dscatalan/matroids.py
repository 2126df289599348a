"""Matroids given by explicit basis lists on ground sets {1, ..., n}.

Ground sets stay of the form [n]: deletion relabels the surviving elements
downward, and the relabeling map is available separately so isomorphisms
stated as label shifts can be checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import ColoopDeletionError, RankDeficientError
from .linalg import ExactMatrix, determinant


@dataclass(frozen=True)
class Matroid:
    """ground_size n, rank r, and the lexicographically sorted list of bases.

    Each basis is a strictly increasing r-tuple of elements of [n].  The
    basis-exchange axiom is not enforced at construction (it is exponential);
    use verify_basis_exchange for that.
    """

    ground_size: int
    rank: int
    bases: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.ground_size < 0:
            raise ValueError("ground size must be non-negative")
        if not self.bases:
            raise ValueError("a matroid needs at least one basis")
        seen = set()
        for b in self.bases:
            if len(b) != self.rank:
                raise ValueError("all bases must have rank-many elements")
            if any(not 1 <= e <= self.ground_size for e in b):
                raise ValueError("basis element outside the ground set")
            if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
                raise ValueError("bases must be strictly increasing tuples")
            if b in seen:
                raise ValueError("duplicate basis")
            seen.add(b)
        if list(self.bases) != sorted(self.bases):
            raise ValueError("basis list must be lexicographically sorted")

    @classmethod
    def from_bases(cls, ground_size: int, bases: Iterable[Iterable[int]]) -> Matroid:
        """Normalizing constructor: sorts elements, deduplicates, sorts the list."""
        normalized = sorted({tuple(sorted(b)) for b in bases})
        if not normalized:
            raise ValueError("a matroid needs at least one basis")
        return cls(ground_size, len(normalized[0]), tuple(normalized))


def from_matrix(a: ExactMatrix) -> Matroid:
    """Column matroid of an integer matrix with full row rank r.

    The bases are the r-subsets of column labels (1-based) whose maximal
    minor is non-zero, computed exactly.
    """
    r, n = a.rows, a.cols
    bases = []
    for combo in combinations(range(n), r):
        if determinant(a.column_submatrix(combo)) != 0:
            bases.append(tuple(c + 1 for c in combo))
    if not bases:
        raise RankDeficientError(f"no {r}-subset of columns is independent")
    return Matroid(n, r, tuple(bases))


def verify_basis_exchange(m: Matroid) -> bool:
    """Exhaustive check of the basis exchange axiom.

    For every pair B1, B2 and every b1 in B1 - B2 there must be b2 in
    B2 - B1 with B1 - {b1} + {b2} again a basis.
    """
    fsets = [frozenset(b) for b in m.bases]
    universe = set(fsets)
    for s1 in fsets:
        for s2 in fsets:
            if s1 == s2:
                continue
            only1 = s1 - s2
            only2 = s2 - s1
            for b1 in only1:
                rest = s1 - {b1}
                if not any(rest | {b2} in universe for b2 in only2):
                    return False
    return True


def is_loop(m: Matroid, e: int) -> bool:
    """True iff e lies in no basis."""
    return all(e not in b for b in m.bases)


def is_coloop(m: Matroid, e: int) -> bool:
    """True iff e lies in every basis."""
    return all(e in b for b in m.bases)


def deletion_relabeling(ground_size: int, e: int) -> dict[int, int]:
    """Old-label to new-label map used when element e is removed from [n]."""
    return {x: x if x < e else x - 1 for x in range(1, ground_size + 1) if x != e}


def delete(m: Matroid, e: int) -> Matroid:
    """Rank-preserving single-element deletion.

    Keeps the bases avoiding e and relabels the ground set down to [n-1]
    via deletion_relabeling.  Raises ColoopDeletionError when e lies in
    every basis (deleting a coloop drops the rank; see remove_coloop).
    """
    if not 1 <= e <= m.ground_size:
        raise ValueError(f"element {e} outside the ground set")
    if is_coloop(m, e):
        raise ColoopDeletionError(f"element {e} is a coloop")
    relabel = deletion_relabeling(m.ground_size, e)
    kept = [tuple(relabel[x] for x in b) for b in m.bases if e not in b]
    return Matroid(m.ground_size - 1, m.rank, tuple(sorted(kept)))


def remove_coloop(m: Matroid, e: int) -> Matroid:
    """Deletion of a coloop: strip e from every basis, dropping the rank by one.

    Together with delete this realizes standard matroid deletion for every
    element.
    """
    if not is_coloop(m, e):
        raise ValueError(f"element {e} is not a coloop")
    relabel = deletion_relabeling(m.ground_size, e)
    stripped = [tuple(relabel[x] for x in b if x != e) for b in m.bases]
    return Matroid(m.ground_size - 1, m.rank - 1, tuple(sorted(stripped)))


def add_coloop(m: Matroid) -> Matroid:
    """Direct sum with a coloop inserted at label 1 (all old labels shift up)."""
    bases = tuple(sorted((1,) + tuple(x + 1 for x in b) for b in m.bases))
    return Matroid(m.ground_size + 1, m.rank + 1, bases)


def equal_as_labeled(m1: Matroid, m2: Matroid) -> bool:
    """Label-preserving equality: same ground size, rank, and basis list."""
    return (
        m1.ground_size == m2.ground_size
        and m1.rank == m2.rank
        and m1.bases == m2.bases
    )
