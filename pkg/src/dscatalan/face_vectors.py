"""f-, h- and g-vector calculus for simplicial polytopes.

Conventions used everywhere in this package:

* An f-vector of a d-polytope is (f_{-1}, f_0, ..., f_{d-1}) with f_{-1} = 1
  counting the empty face, so it has d+1 entries.
* The Dehn-Sommerville coefficient matrix for dimension d has
  floor(d/2) + 1 rows (indexed 0..floor(d/2), matching g) and d+1 columns.
  Its columns carry the external labels 1..d+1, and column label j holds the
  coefficients of f_{j-2}.  Every ground set in this package uses these
  1-based column labels.
* Vectors act on the matrix from the left: g . M = f.

The transforms below are total linear maps; they accept arbitrary integer
(or exact rational) data, not only vectors of actual polytopes.  Whether a
vector is polytopal is reported separately (symmetry and integrality are
linear-algebra facts, the M-sequence condition is the g-theorem fact).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import ExactMatrix, Scalar, binomial, row_times_matrix

SIMPLEX_BOUNDARY = "simplex-boundary"
CROSSPOLYTOPE_BOUNDARY = "crosspolytope-boundary"


@dataclass(frozen=True)
class FVector:
    """Face counts (f_{-1}, f_0, ..., f_{d-1}) of a d-dimensional complex."""

    d: int
    entries: tuple[Scalar, ...]

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("dimension must be non-negative")
        if len(self.entries) != self.d + 1:
            raise ValueError(f"f-vector for d={self.d} needs {self.d + 1} entries")


@dataclass(frozen=True)
class HVector:
    """h-vector (h_0, ..., h_d)."""

    d: int
    entries: tuple[Scalar, ...]

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("dimension must be non-negative")
        if len(self.entries) != self.d + 1:
            raise ValueError(f"h-vector for d={self.d} needs {self.d + 1} entries")


@dataclass(frozen=True)
class GVector:
    """g-vector (g_0, ..., g_{floor(d/2)}).

    The dimension is stored explicitly because the length alone does not
    determine the parity of d.
    """

    d: int
    entries: tuple[Scalar, ...]

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("dimension must be non-negative")
        if len(self.entries) != self.d // 2 + 1:
            raise ValueError(f"g-vector for d={self.d} needs {self.d // 2 + 1} entries")


@lru_cache(maxsize=None)
def ds_matrix(d: int) -> ExactMatrix:
    """The Dehn-Sommerville matrix of dimension d.

    Entry (i, j) for 0 <= i <= floor(d/2), 0 <= j <= d is
    C(d+1-i, d+1-j) - C(i, d+1-j).
    """
    if d < 0:
        raise ValueError("dimension must be non-negative")
    rows = d // 2 + 1
    cols = d + 1
    ent = tuple(
        binomial(d + 1 - i, d + 1 - j) - binomial(i, d + 1 - j)
        for i in range(rows)
        for j in range(cols)
    )
    return ExactMatrix(rows, cols, ent)


def ds_column_submatrix(d: int, labels) -> ExactMatrix:
    """Columns of ds_matrix(d) selected by 1-based column labels."""
    return ds_matrix(d).column_submatrix([j - 1 for j in labels])


def f_to_h(f: FVector) -> HVector:
    """h_k = sum_{i=0}^{k} (-1)^{k-i} C(d-i, k-i) f_{i-1}."""
    d = f.d
    ent = []
    for k in range(d + 1):
        acc = 0
        for i in range(k + 1):
            term = binomial(d - i, k - i) * f.entries[i]
            acc = acc + term if (k - i) % 2 == 0 else acc - term
        ent.append(acc)
    return HVector(d, tuple(ent))


def h_to_f(h: HVector) -> FVector:
    """Inverse of f_to_h: f_{k-1} = sum_{i=0}^{k} C(d-i, k-i) h_i."""
    d = h.d
    ent = tuple(
        sum(binomial(d - i, k - i) * h.entries[i] for i in range(k + 1))
        for k in range(d + 1)
    )
    return FVector(d, ent)


def h_to_g(h: HVector) -> GVector:
    """Difference sequence of the first half of h: g_0 = h_0, g_i = h_i - h_{i-1}."""
    d = h.d
    ent = [h.entries[0]]
    for i in range(1, d // 2 + 1):
        ent.append(h.entries[i] - h.entries[i - 1])
    return GVector(d, tuple(ent))


def g_to_h(g: GVector) -> HVector:
    """Partial sums of g up to floor(d/2), extended by the symmetry h_k = h_{d-k}."""
    d = g.d
    half = [g.entries[0]]
    for i in range(1, d // 2 + 1):
        half.append(half[-1] + g.entries[i])
    ent = [half[k] if k <= d // 2 else half[d - k] for k in range(d + 1)]
    return HVector(d, tuple(ent))


def g_to_f(g: GVector) -> FVector:
    """f = g . M_d, matching entries to column labels 1..d+1."""
    return FVector(g.d, row_times_matrix(g.entries, ds_matrix(g.d)))


def check_dehn_sommerville(h: HVector) -> bool:
    """True iff h_k = h_{d-k} for all k."""
    return h.entries == tuple(reversed(h.entries))


def _as_int(v: Scalar) -> int | None:
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return None


def macaulay_pseudo_power(m: int, i: int) -> int:
    """The i-th Macaulay pseudo-power m^<i>.

    Write m = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j) greedily with
    a_i > a_{i-1} > ... > a_j >= j >= 1 (this representation is unique) and
    return C(a_i + 1, i + 1) + ... + C(a_j + 1, j + 1).
    """
    if i < 1:
        raise ValueError("pseudo-power index must be >= 1")
    if m < 0:
        raise ValueError("pseudo-power of a negative value")
    out = 0
    j = i
    while m > 0:
        if j < 1:
            raise AssertionError("greedy Macaulay representation left a remainder")
        a = j
        while binomial(a + 1, j) <= m:
            a += 1
        m -= binomial(a, j)
        out += binomial(a + 1, j + 1)
        j -= 1
    return out


def is_m_sequence(g: GVector) -> bool:
    """Macaulay growth condition: g_0 = 1, g_i >= 0 integral, g_{i+1} <= g_i^<i>.

    This is the arithmetic side of the g-theorem; vectors with fractional
    entries are never M-sequences.
    """
    vals = [_as_int(v) for v in g.entries]
    if any(v is None for v in vals):
        return False
    if not vals or vals[0] != 1:
        return False
    if any(v < 0 for v in vals):
        return False
    for i in range(1, len(vals) - 1):
        if vals[i + 1] > macaulay_pseudo_power(vals[i], i):
            return False
    return True


def sample_f_vector(family: str, d: int) -> FVector:
    """Closed-form f-vector of a standard simplicial family.

    ``simplex-boundary``: f_i = C(d+1, i+1).
    ``crosspolytope-boundary``: f_i = 2^(i+1) C(d, i+1).
    """
    if d < 1:
        raise ValueError("sample families need d >= 1")
    if family == SIMPLEX_BOUNDARY:
        ent = tuple(binomial(d + 1, i + 1) for i in range(-1, d))
    elif family == CROSSPOLYTOPE_BOUNDARY:
        ent = tuple(2 ** (i + 1) * binomial(d, i + 1) for i in range(-1, d))
    else:
        raise ValueError(f"unknown family {family!r}")
    return FVector(d, ent)
