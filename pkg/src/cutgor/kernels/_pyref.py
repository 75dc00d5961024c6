"""Reference implementations of the enumeration kernels, pure Python.

The two hot entry points, :func:`count_lattice_points` and
:func:`semigroup_layer_counts`, have compiled twins in ``_fast``; this module
is the fallback and the ground truth the compiled versions are tested
against.  Listing and first-witness search run at fixture scale only, so
they live here and are shared by both backends.

Conventions shared by every kernel:

* Points are integer vectors in [0, r]^m; ``A`` (k rows of m coefficients)
  and ``b`` describe the unit-dilation system a.x <= b, which scales to
  a.x <= r*b at dilation r, or a.x <= r*b - 1 when ``strict``.
* ``parity`` is a sequence of coordinate index groups; a point qualifies
  when every group has an even coordinate sum.  This is the lattice
  membership test, with groups the fundamental cycles.
* m == 0 means the polytope is a single point; it counts once at every
  dilation, strict or not, matching the convention that a zero-dimensional
  polytope has codegree 1.
"""

from __future__ import annotations


def _prepare(A, b, parity, r, strict):
    k = len(A)
    m = len(A[0]) if k else _parity_width(parity)
    limits = [r * bj - (1 if strict else 0) for bj in b]
    # Optimistic completion: the most negative contribution coordinates
    # i..m-1 can still make, given every coordinate stays in [0, r].
    minrest = []
    for row in A:
        tail = [0] * (m + 1)
        for i in range(m - 1, -1, -1):
            tail[i] = tail[i + 1] + (row[i] * r if row[i] < 0 else 0)
        minrest.append(tail)
    cols = []
    for i in range(m):
        cols.append(tuple((j, A[j][i]) for j in range(k) if A[j][i]))
    pbits = [0] * m
    for p_idx, group in enumerate(parity):
        for i in group:
            pbits[i] |= 1 << p_idx
    return k, m, limits, minrest, cols, pbits


def _parity_width(parity):
    width = 0
    for group in parity:
        for i in group:
            width = max(width, i + 1)
    return width


def count_lattice_points(A, b, parity, r, strict=False):
    """Number of integer points of the r-th dilation (interior if strict)."""
    if r < 0:
        raise ValueError(f"dilation must be nonnegative, got {r}")
    A = [tuple(row) for row in A]
    k, m, limits, minrest, cols, pbits = _prepare(A, b, parity, r, strict)
    if m == 0:
        return 1
    sums = [0] * k

    def rec(i, par):
        if i == m:
            return 1 if par == 0 else 0
        lb, ub = 0, r
        for j in range(k):
            rem = limits[j] - sums[j] - minrest[j][i + 1]
            a = A[j][i]
            if a > 0:
                q = rem // a
                if q < ub:
                    ub = q
            elif a < 0:
                q = -(rem // (-a))
                if q > lb:
                    lb = q
            elif rem < 0:
                return 0
        total = 0
        col = cols[i]
        pb = pbits[i]
        for val in range(lb, ub + 1):
            for j, a in col:
                sums[j] += a * val
            total += rec(i + 1, par ^ pb if val & 1 else par)
            for j, a in col:
                sums[j] -= a * val
        return total

    return rec(0, 0)


def iter_lattice_points(A, b, parity, r, strict=False):
    """Yield qualifying points in lexicographic order."""
    if r < 0:
        raise ValueError(f"dilation must be nonnegative, got {r}")
    A = [tuple(row) for row in A]
    k, m, limits, minrest, cols, pbits = _prepare(A, b, parity, r, strict)
    if m == 0:
        yield ()
        return
    sums = [0] * k
    x = [0] * m

    def rec(i, par):
        if i == m:
            if par == 0:
                yield tuple(x)
            return
        lb, ub = 0, r
        for j in range(k):
            rem = limits[j] - sums[j] - minrest[j][i + 1]
            a = A[j][i]
            if a > 0:
                q = rem // a
                if q < ub:
                    ub = q
            elif a < 0:
                q = -(rem // (-a))
                if q > lb:
                    lb = q
            elif rem < 0:
                return
        col = cols[i]
        pb = pbits[i]
        for val in range(lb, ub + 1):
            x[i] = val
            for j, a in col:
                sums[j] += a * val
            yield from rec(i + 1, par ^ pb if val & 1 else par)
            for j, a in col:
                sums[j] -= a * val
        x[i] = 0

    yield from rec(0, 0)


def list_lattice_points(A, b, parity, r, strict=False, limit=None):
    out = []
    for point in iter_lattice_points(A, b, parity, r, strict):
        out.append(point)
        if limit is not None and len(out) >= limit:
            break
    return out


def first_lattice_point(A, b, parity, r, strict=False):
    for point in iter_lattice_points(A, b, parity, r, strict):
        return point
    return None


def semigroup_layer_counts(vertices, r_max):
    """Sizes of the r-fold sumsets of a 0/1 generator set, r = 0..r_max.

    Layer r is the set of distinct sums of exactly r generators with
    repetition; layer 0 is the origin alone.  Coordinates of a layer-r sum
    are at most r, so each point packs into one integer with fixed-width
    fields and layers grow by set arithmetic on packed values.
    """
    if r_max < 0:
        raise ValueError(f"r_max must be nonnegative, got {r_max}")
    counts = [1]
    if r_max == 0:
        return counts
    gens = {tuple(v) for v in vertices}
    if not gens:
        raise ValueError("need at least one generator")
    m = len(next(iter(gens)))
    if m == 0:
        return [1] * (r_max + 1)
    bits = max(1, int(r_max).bit_length())
    packed_gens = [
        sum(x << (i * bits) for i, x in enumerate(v)) for v in sorted(gens)
    ]
    layer = {0}
    for _ in range(r_max):
        layer = {p + g for p in layer for g in packed_gens}
        counts.append(len(layer))
    return counts
