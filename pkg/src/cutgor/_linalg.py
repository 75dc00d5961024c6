"""Exact integer linear algebra on Python ints.

Everything here is fraction-free: ranks and determinants come from Bareiss
elimination, hyperplane normals from cofactor expansion.  No floats anywhere;
intermediate entries are minors of the input matrix, so they stay exact and
of moderate size for the matrix shapes this package produces.
"""

from __future__ import annotations

from math import gcd


def row_rank(rows):
    """Rank of an integer matrix given as a sequence of row sequences."""
    mat = [list(row) for row in rows]
    if not mat:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        piv = mat[rank][col]
        row_r = mat[rank]
        for i in range(rank + 1, nrows):
            row_i = mat[i]
            factor = row_i[col]
            # Bareiss update, applied uniformly: rows with a zero in the
            # pivot column still rescale by piv/prev, or the later exact
            # divisions go wrong.
            for j in range(col + 1, ncols):
                row_i[j] = (piv * row_i[j] - factor * row_r[j]) // prev
            row_i[col] = 0
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank


def det(rows):
    """Determinant of a square integer matrix (Bareiss, exact)."""
    mat = [list(row) for row in rows]
    size = len(mat)
    if size == 0:
        return 1
    if any(len(row) != size for row in mat):
        raise ValueError("determinant requires a square matrix")
    sign = 1
    prev = 1
    for col in range(size):
        pivot = None
        for i in range(col, size):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            return 0
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            sign = -sign
        piv = mat[col][col]
        for i in range(col + 1, size):
            row_i = mat[i]
            factor = row_i[col]
            row_c = mat[col]
            for j in range(col + 1, size):
                row_i[j] = (piv * row_i[j] - factor * row_c[j]) // prev
            row_i[col] = 0
        prev = piv
    return sign * mat[size - 1][size - 1]


def affine_rank(points):
    """Rank of the homogenized point set: affine dimension is this minus 1.

    ``affine_rank(pts) == len(pts[0]) + 1`` means the points affinely span
    the whole ambient space.
    """
    return row_rank([(1, *p) for p in points])


def affinely_independent(points):
    points = list(points)
    return affine_rank(points) == len(points)


def primitive_normal(points):
    """Integer normal of the hyperplane through ``m`` points of Z^m.

    Returns a primitive integer vector orthogonal to every difference
    ``points[i] - points[0]``, computed by cofactor expansion of the
    difference matrix, or None when the points do not affinely span a
    hyperplane.  The sign is arbitrary; callers orient it.
    """
    pts = [tuple(p) for p in points]
    m = len(pts[0])
    if len(pts) != m:
        raise ValueError("need exactly m points in dimension m")
    base = pts[0]
    diffs = [[p[j] - base[j] for j in range(m)] for p in pts[1:]]
    normal = []
    sign = 1
    for j in range(m):
        minor = [row[:j] + row[j + 1:] for row in diffs]
        normal.append(sign * det(minor))
        sign = -sign
    g = 0
    for a in normal:
        g = gcd(g, a)
    if g == 0:
        return None
    return tuple(a // g for a in normal)
