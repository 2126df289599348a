"""Recovering a full f-vector from a Dehn-Sommerville basis of its entries.

A set of column labels determines every simplicial f-vector exactly when the
corresponding columns of the coefficient matrix are linearly independent.
Reconstruction solves for the g-vector on those columns and re-expands, so
the symmetry relations hold by construction.  When the labels are not a
basis, the failure is certified: for linearly consistent data, two distinct
completions are produced (mirroring the classical ambiguity of fixing the
last two entries in dimension 4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import matroids
from .dyck import catalan_matroid, enumerate_dyck
from .errors import (
    InconsistentConventionError,
    NotADSBasisError,
    WrongArityError,
)
from .face_vectors import (
    FVector,
    GVector,
    HVector,
    check_dehn_sommerville,
    ds_column_submatrix,
    ds_matrix,
    g_to_h,
    h_to_f,
    is_m_sequence,
)
from .linalg import (
    Scalar,
    determinant,
    row_times_matrix,
    solve_row_system,
    solve_square,
)
from .routing import ds_basis_predicate


@dataclass(frozen=True)
class PartialFAssignment:
    """Known f-vector values keyed by column label (label j claims f_{j-2})."""

    d: int
    known: tuple[tuple[int, Scalar], ...]

    def __post_init__(self):
        labels = [l for l, _ in self.known]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate labels")
        if any(not 1 <= l <= self.d + 1 for l in labels):
            raise ValueError("labels must lie in [d+1]")
        if list(labels) != sorted(labels):
            raise ValueError("known pairs must be sorted by label")

    @classmethod
    def from_mapping(cls, d: int, mapping: Mapping[int, Scalar]) -> PartialFAssignment:
        return cls(d, tuple(sorted(mapping.items())))

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(l for l, _ in self.known)

    @property
    def values(self) -> tuple[Scalar, ...]:
        return tuple(v for _, v in self.known)


@dataclass(frozen=True)
class ReconstructionReport:
    """A reconstructed f/h/g triple with advisory validity flags.

    ``integral`` and the symmetry of h are linear-algebra facts;
    ``nonnegative`` (all f entries >= 0) and ``m_sequence`` are the
    polytopality side.  Flags never block reconstruction: a vector can be
    uniquely determined without being the f-vector of any polytope.
    """

    f: FVector
    h: HVector
    g: GVector
    basis_used: tuple[int, ...]
    integral: bool
    nonnegative: bool
    m_sequence: bool


def dehn_sommerville_bases(d: int) -> list[tuple[int, ...]]:
    """All determining label sets of dimension d, in lexicographic order.

    Generated through the Dyck-path characterization: for even d = 2n the
    bases are the upstep sets of the Dyck paths of length 2(n+1); for odd d
    they are obtained from the even case one dimension up by dropping the
    forced label 1 and shifting down.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    if d % 2 == 0:
        n = d // 2
        out = [p.upsteps for p in enumerate_dyck(n + 1)]
        # Position 2n+2 is never an upstep (paths end with a downstep).
        assert all(b[-1] <= d + 1 for b in out)
        return out
    shifted = dehn_sommerville_bases(d + 1)
    return [tuple(x - 1 for x in b[1:]) for b in shifted]


def is_ds_basis(d: int, s: Iterable[int]) -> bool:
    """True iff the labels determine every f-vector of dimension d.

    Wrong cardinality or out-of-range labels simply return False.
    """
    labels = tuple(sorted(s))
    rank = (d + 2) // 2
    if len(labels) != rank or len(set(labels)) != rank:
        return False
    if any(not 1 <= x <= d + 1 for x in labels):
        return False
    if d == 0:
        return labels == (1,)
    return ds_basis_predicate(labels, d)


def _primitive_int_vector(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer one with positive lead."""
    lcm = 1
    for x in v:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _crt_merge(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    g = math.gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    lcm = m1 // g * m2
    step = ((r2 - r1) // g * pow(m1 // g, -1, m2 // g)) % (m2 // g)
    return (r1 + m1 * step) % lcm, lcm


def _integral_anchor(g_star: Sequence[Fraction], k: Sequence[int]) -> Fraction | None:
    """Some t with g_star + t*k integral, if any exists.

    Since k is primitive, the full solution set is then anchor + Z.
    """
    q = 1
    for x in g_star:
        q = q * x.denominator // math.gcd(q, x.denominator)
    # In terms of u = q*t: u*k_i = -q*g_i (mod q) for every coordinate.
    sol = (0, 1)
    for gi, ki in zip(g_star, k):
        a, b = ki % q, (-gi * q) % q
        if q == 1:
            continue
        g = math.gcd(a, q)
        if int(b) % g:
            return None
        m = q // g
        r = (int(b) // g * pow(a // g, -1, m)) % m if m > 1 else 0
        sol = _crt_merge(sol[0], sol[1], r, m)
        if sol is None:
            return None
    return Fraction(sol[0], q)


def _nonneg_window(g_star: Sequence[Fraction], k: Sequence[int]) -> tuple[Fraction, Fraction] | None:
    """Rational bounds on t keeping every coordinate of g_star + t*k >= 0.

    Kernel directions of these column systems always carry mixed signs (some
    column has all entries positive), so the window is a finite interval.
    """
    lo, hi = None, None
    for gi, ki in zip(g_star, k):
        if ki > 0:
            bound = Fraction(-gi, ki)
            lo = bound if lo is None or bound > lo else lo
        elif ki < 0:
            bound = Fraction(-gi, ki)
            hi = bound if hi is None or bound < hi else hi
        elif gi < 0:
            return None
    if lo is None or hi is None or lo > hi:
        return None
    return lo, hi


def _completion_pair(d: int, g_star, kernel_dir):
    """Two distinct completions of the underdetermined system.

    Preference order along the solution line g_star + t * kernel_dir:
    the two smallest integral choices whose f-vector passes all validity
    flags; then one valid plus its lattice neighbor; then any integral
    anchor pair; finally the rational pair itself.  All choices are
    deterministic.
    """
    m = ds_matrix(d)

    def f_of(g_vec):
        f = row_times_matrix(g_vec, m)
        return tuple(
            int(x) if isinstance(x, Fraction) and x.denominator == 1 else x for x in f
        )

    def g_at(t: Fraction):
        return tuple(gs + t * ki for gs, ki in zip(g_star, kernel_dir))

    anchor = _integral_anchor(g_star, kernel_dir)
    if anchor is None:
        return f_of(g_star), f_of(g_at(Fraction(1)))

    window = _nonneg_window(g_star, kernel_dir)
    valid: list[Fraction] = []
    if window is not None:
        lo, hi = window
        t = anchor + math.ceil(lo - anchor)
        while t <= hi:
            g_vec = g_at(t)
            ints = [int(x) for x in g_vec]
            f = f_of(ints)
            if all(x >= 0 for x in f) and is_m_sequence(GVector(d, tuple(ints))):
                valid.append(t)
            t += 1
    if len(valid) >= 2:
        return f_of(g_at(valid[0])), f_of(g_at(valid[1]))
    base = valid[0] if valid else anchor
    return f_of(g_at(base)), f_of(g_at(base + 1))


def reconstruct(assignment: PartialFAssignment) -> ReconstructionReport:
    """Recover f, h and g from rank-many known f-vector entries.

    Raises WrongArityError when the number of known entries differs from
    ceil((d+1)/2), InconsistentConventionError when label 1 carries a value
    other than 1, and NotADSBasisError (with an ambiguity certificate when
    the data is consistent) when the labels do not form a basis.
    """
    d = assignment.d
    rank = (d + 2) // 2
    labels, values = assignment.labels, assignment.values
    if len(labels) != rank:
        raise WrongArityError(f"need {rank} known entries, got {len(labels)}")
    if 1 in labels and values[labels.index(1)] != 1:
        raise InconsistentConventionError("position 1 must carry the value 1")

    sub = ds_column_submatrix(d, labels)
    if determinant(sub) == 0:
        particular, kernel = solve_row_system(sub, values)
        if particular is None:
            raise NotADSBasisError(labels, completions=None)
        raise NotADSBasisError(
            labels,
            completions=_completion_pair(d, particular, _primitive_int_vector(kernel[0])),
        )

    g_rat = solve_square(sub, values)
    integral = all(x.denominator == 1 for x in g_rat)
    g_entries: tuple[Scalar, ...] = (
        tuple(int(x) for x in g_rat) if integral else g_rat
    )
    g = GVector(d, g_entries)
    h = g_to_h(g)
    f = h_to_f(h)

    # Sanity: the re-expansion must agree with the data and the symmetry.
    by_label = dict(zip(labels, values))
    for j, x in by_label.items():
        if f.entries[j - 1] != x:
            raise AssertionError("reconstruction does not match the known entries")
    if f.entries[0] != 1 or not check_dehn_sommerville(h):
        raise AssertionError("reconstruction violated a structural invariant")

    return ReconstructionReport(
        f=f,
        h=h,
        g=g,
        basis_used=labels,
        integral=integral,
        nonnegative=all(x >= 0 for x in f.entries),
        m_sequence=integral and is_m_sequence(g),
    )


def verify_main_theorem(n: int) -> bool:
    """Check both trivial-element identities for the given half-parameter.

    The even-dimension matroid of size 2n must equal the Catalan matroid
    C_{n+1} with its loop 2n+2 deleted, and the odd one of size 2n-1 must
    additionally have the coloop 1 removed.  Both sides are built from
    scratch (exact minors on one side, Dyck paths plus deletions on the
    other) and compared as labeled matroids.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    cat = catalan_matroid(n + 1)
    loopless = matroids.delete(cat, 2 * n + 2)
    even_ok = matroids.equal_as_labeled(
        matroids.from_matrix(ds_matrix(2 * n)), loopless
    )
    odd_ok = matroids.equal_as_labeled(
        matroids.from_matrix(ds_matrix(2 * n - 1)),
        matroids.remove_coloop(loopless, 1),
    )
    return even_ok and odd_ok
