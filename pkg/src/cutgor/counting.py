"""Dilation counting: lattice points, semigroup growth, h-vectors.

Two independent counting routes exist on purpose and must never be merged:

* the Ehrhart route counts lattice points of the r-th dilation by pruned
  enumeration against the facet system plus cycle parity;
* the Hilbert route grows the semigroup generated by the cut vectors layer
  by layer and counts distinct degree-r sums.

The Hilbert count can never exceed the Ehrhart count, and the polytope is
normal precisely when they agree for every r; at desk scale equality is
certified up to a finite degree only, and verdicts say so honestly.  The
h-vector is the binomial transform of the Hilbert counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import kernels
from .errors import BoundExceededError, InvalidInputError
from .polytope import barahona_facets, cut_vertices, lattice_basis

EHRHART = "ehrhart"
HILBERT = "hilbert"


@dataclass(frozen=True)
class DilationCounts:
    """Counts indexed by dilation degree 0..len-1, tagged with their route."""

    kind: str
    m: int
    values: tuple

    def __post_init__(self):
        if self.kind not in (EHRHART, HILBERT):
            raise InvalidInputError(f"unknown counting kind {self.kind!r}")
        if self.values and self.values[0] != 1:
            raise InvalidInputError("degree-0 count must be 1")

    def to_json(self):
        return {"kind": self.kind, "m": self.m, "counts": list(self.values)}


def _check_bounds(g, r, max_n, max_m):
    if max_n is not None and g.n > max_n:
        raise BoundExceededError(f"bounded at n={max_n}, got n={g.n}")
    if max_m is not None and g.m > max_m:
        raise BoundExceededError(f"bounded at m={max_m}, got m={g.m}")
    if r > g.m + 2:
        raise BoundExceededError(
            f"dilation degree {r} exceeds the desk bound m+2={g.m + 2}"
        )
    if r < 0:
        raise InvalidInputError(f"dilation degree must be nonnegative, got {r}")


def ehrhart_count(g, r, max_m=8):
    """Number of lattice points in the r-th dilation, by facet enumeration."""
    _check_bounds(g, r, None, max_m)
    if g.m == 0:
        return 1
    fs = barahona_facets(g)
    A = [q.a for q in fs.inequalities]
    b = [q.b for q in fs.inequalities]
    parity = lattice_basis(g).cycles
    return kernels.count_lattice_points(A, b, parity, r)


def ehrhart_profile(g, r_max=None, max_m=8):
    if r_max is None:
        r_max = g.m + 2
    _check_bounds(g, r_max, None, max_m)
    if g.m == 0:
        return DilationCounts(EHRHART, 0, tuple([1] * (r_max + 1)))
    fs = barahona_facets(g)
    A = [q.a for q in fs.inequalities]
    b = [q.b for q in fs.inequalities]
    parity = lattice_basis(g).cycles
    values = tuple(
        kernels.count_lattice_points(A, b, parity, r) for r in range(r_max + 1)
    )
    return DilationCounts(EHRHART, g.m, values)


def hilbert_count(g, r, max_n=6):
    """Number of distinct sums of exactly r cut vectors."""
    _check_bounds(g, r, max_n, None)
    verts = [v.coords for v in cut_vertices(g)]
    return kernels.semigroup_layer_counts(verts, r)[r]


def hilbert_profile(g, r_max=None, max_n=6):
    if r_max is None:
        r_max = g.m + 2
    _check_bounds(g, r_max, max_n, None)
    verts = [v.coords for v in cut_vertices(g)]
    values = tuple(kernels.semigroup_layer_counts(verts, r_max))
    return DilationCounts(HILBERT, g.m, values)


# ---------------------------------------------------------------------------
# normality


@dataclass(frozen=True)
class NormalityVerdict:
    """Desk-scale normality: either certified up to a degree, or refuted.

    ``witness_degree`` is the first degree where the Hilbert count falls
    short of the Ehrhart count, or None when none was found up to
    ``checked_up_to``.  A None witness is a certificate only up to that
    degree, never beyond.
    """

    checked_up_to: int
    witness_degree: int | None
    hilbert: DilationCounts
    ehrhart: DilationCounts

    @property
    def normal_up_to_bound(self):
        return self.witness_degree is None

    def to_json(self):
        return {
            "normal_up_to": self.checked_up_to if self.witness_degree is None else None,
            "witness_degree": self.witness_degree,
            "hilbert": list(self.hilbert.values),
            "ehrhart": list(self.ehrhart.values),
        }


def is_normal_desk(g, r_max=None, max_n=6, max_m=8):
    """Compare the two counting routes degree by degree.

    Stops at the first disagreement (a genuine non-normality witness, since
    a missing semigroup point stays missing) or at r_max, default m+2.
    """
    if r_max is None:
        r_max = g.m + 2
    _check_bounds(g, r_max, max_n, max_m)
    hilbert = hilbert_profile(g, r_max, max_n=max_n)
    if g.m == 0:
        return NormalityVerdict(r_max, None, hilbert, DilationCounts(EHRHART, 0, hilbert.values))
    fs = barahona_facets(g)
    A = [q.a for q in fs.inequalities]
    b = [q.b for q in fs.inequalities]
    parity = lattice_basis(g).cycles
    ehr_values = []
    witness = None
    for r in range(r_max + 1):
        count = kernels.count_lattice_points(A, b, parity, r)
        ehr_values.append(count)
        if count < hilbert.values[r]:
            raise AssertionError(
                "Ehrhart count below Hilbert count: a counting route is broken"
            )
        if count != hilbert.values[r]:
            witness = r
            break
    checked = r_max if witness is None else witness
    hil = DilationCounts(HILBERT, g.m, hilbert.values[: len(ehr_values)])
    ehr = DilationCounts(EHRHART, g.m, tuple(ehr_values))
    return NormalityVerdict(checked, witness, hil, ehr)


# ---------------------------------------------------------------------------
# h-vectors


@dataclass(frozen=True)
class HVector:
    entries: tuple

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1:
            raise InvalidInputError("an h-vector starts with 1")
        if len(self.entries) > 1 and self.entries[-1] == 0:
            raise InvalidInputError("trailing zeros must be stripped")

    @property
    def s(self):
        return len(self.entries) - 1

    def to_json(self):
        return list(self.entries)


def h_vector(counts, m=None):
    """Binomial transform of Hilbert counts into the h-vector.

    Needs counts for degrees 0..m+1.  Entry i is the alternating sum of
    C(m+1, i-j) * counts[j]; trailing zeros are stripped.
    """
    if isinstance(counts, DilationCounts):
        if counts.kind != HILBERT:
            raise InvalidInputError("h-vector is computed from Hilbert counts")
        if m is None:
            m = counts.m
        values = counts.values
    else:
        if m is None:
            raise InvalidInputError("explicit m required for raw count sequences")
        values = tuple(counts)
    if len(values) < m + 2:
        raise InvalidInputError(
            f"h-vector needs counts for degrees 0..{m + 1}, got {len(values)}"
        )
    entries = []
    for i in range(m + 2):
        acc = 0
        for j in range(i + 1):
            acc += (-1) ** (i - j) * comb(m + 1, i - j) * values[j]
        entries.append(acc)
    while len(entries) > 1 and entries[-1] == 0:
        entries.pop()
    return HVector(tuple(entries))


def expand_h(h, m, r_max):
    """Inverse transform: counts implied by an h-vector in dimension m.

    Used to verify that h_vector is a bijection on the supplied degrees.
    """
    entries = h.entries if isinstance(h, HVector) else tuple(h)
    out = []
    for r in range(r_max + 1):
        acc = 0
        for i, hi in enumerate(entries):
            if i <= r:
                acc += hi * comb(r - i + m, m)
        out.append(acc)
    return tuple(out)


def is_symmetric(h):
    entries = h.entries if isinstance(h, HVector) else tuple(h)
    return entries == entries[::-1]


def is_unimodal(h):
    """Nondecreasing through the middle entry."""
    entries = h.entries if isinstance(h, HVector) else tuple(h)
    half = (len(entries) - 1) // 2
    return all(entries[i] <= entries[i + 1] for i in range(half))
