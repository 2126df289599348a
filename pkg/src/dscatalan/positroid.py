"""Positroid representations: Grassmann necklaces and decorated permutations.

A matroid whose representing matrix has all maximal minors non-negative is a
positroid.  Two standard combinatorial encodings are produced here from the
basis list alone: the Grassmann necklace (the Gale-minimal basis under every
cyclic rotation of the ground order) and the decorated permutation read off
the necklace through the exchange rule.

Convention note.  The raw exchange rule I_{i+1} = (I_i - {i}) + {j} defines a
map sigma(i) = j; for the dimension-4 column matroid this gives the one-line
word (1, 4, 2, 5, 3).  The inverse word (1, 3, 5, 2, 4) is the form these
permutations are usually quoted in, so decorated_permutation returns
sigma^{-1}.  Fixed points keep their two-coloring either way: i with i in
I_i is coloop-type (printed "i~"), i missing from I_i is loop-type
(printed "i_").
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .face_vectors import ds_matrix
from .linalg import ExactMatrix, determinant
from .matroids import Matroid


@dataclass(frozen=True)
class GrassmannNecklace:
    """The sequence I_1, ..., I_n of Gale-minimal bases, one per rotation."""

    n: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.sets) != self.n:
            raise ValueError("a necklace has one entry per ground element")
        for i in range(self.n):
            current = set(self.sets[i])
            nxt = set(self.sets[(i + 1) % self.n])
            if not current - {i + 1} <= nxt:
                raise ValueError(f"necklace condition fails between I_{i + 1} and its successor")


@dataclass(frozen=True)
class DecoratedPermutation:
    """A permutation of [n] in one-line notation with two-colored fixed points."""

    n: int
    one_line: tuple[int, ...]
    coloop_fixed: frozenset[int]
    loop_fixed: frozenset[int]

    def __post_init__(self):
        if sorted(self.one_line) != list(range(1, self.n + 1)):
            raise ValueError("not a permutation of [n]")
        fixed = {i for i in range(1, self.n + 1) if self.one_line[i - 1] == i}
        if self.coloop_fixed | self.loop_fixed != fixed or self.coloop_fixed & self.loop_fixed:
            raise ValueError("decorations must two-color exactly the fixed points")

    def __str__(self) -> str:
        parts = []
        for i, v in enumerate(self.one_line, start=1):
            if i in self.coloop_fixed:
                parts.append(f"{v}~")
            elif i in self.loop_fixed:
                parts.append(f"{v}_")
            else:
                parts.append(str(v))
        return " ".join(parts)


def grassmann_necklace(m: Matroid) -> GrassmannNecklace:
    """I_i is the Gale-minimal basis under the order i < i+1 < ... < i-1.

    For matroids the Gale-minimal basis exists and coincides with the basis
    whose sorted position sequence is lexicographically least, which is what
    the min below computes.
    """
    n = m.ground_size
    sets = []
    for i in range(1, n + 1):
        key = lambda b: sorted((e - i) % n for e in b)
        sets.append(min(m.bases, key=key))
    return GrassmannNecklace(n, tuple(sets))


def decorated_permutation(m: Matroid) -> DecoratedPermutation:
    """Decorated permutation of a positroid, from its Grassmann necklace."""
    necklace = grassmann_necklace(m)
    n = necklace.n
    sigma = [0] * (n + 1)
    coloops, loops = set(), set()
    for i in range(1, n + 1):
        current = set(necklace.sets[i - 1])
        nxt = set(necklace.sets[i % n])
        if nxt == current:
            sigma[i] = i
            (coloops if i in current else loops).add(i)
        else:
            gained = nxt - (current - {i})
            if len(gained) != 1:
                raise ValueError("necklace violates the single-exchange rule")
            sigma[i] = gained.pop()
    inverse = [0] * n
    for i in range(1, n + 1):
        inverse[sigma[i] - 1] = i
    return DecoratedPermutation(
        n, tuple(inverse), frozenset(coloops), frozenset(loops)
    )


def closed_form_decorated_permutation(d: int) -> DecoratedPermutation:
    """The known closed form for the dimension-d column matroid.

    Even d = 2n on [2n+1]: 1~ 3 5 ... (2n+1) 2 4 ... (2n).
    Odd d = 2n-1 on [2n]:  2 4 ... (2n) 1 3 ... (2n-1).
    """
    if d < 1:
        raise ValueError("need d >= 1")
    if d % 2 == 0:
        n = d // 2
        word = (1,) + tuple(2 * i + 1 for i in range(1, n + 1)) + tuple(
            2 * i for i in range(1, n + 1)
        )
        return DecoratedPermutation(2 * n + 1, word, frozenset({1}), frozenset())
    n = (d + 1) // 2
    word = tuple(2 * i for i in range(1, n + 1)) + tuple(
        2 * i - 1 for i in range(1, n + 1)
    )
    return DecoratedPermutation(2 * n, word, frozenset(), frozenset())


def all_minors_nonnegative(m: ExactMatrix) -> bool:
    """Exhaustively test every minor of every size for non-negativity."""
    for size in range(1, min(m.rows, m.cols) + 1):
        for rows in combinations(range(m.rows), size):
            for cols in combinations(range(m.cols), size):
                if determinant(m.submatrix(rows, cols)) < 0:
                    return False
    return True


def check_total_nonnegativity(d: int) -> bool:
    """True iff every minor of the dimension-d coefficient matrix is >= 0."""
    return all_minors_nonnegative(ds_matrix(d))
