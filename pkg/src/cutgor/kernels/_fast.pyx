# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the hot enumeration kernels.

Semantics are defined by ``_pyref``; this module must agree with it bit for
bit.  Listing and first-witness search are re-exported unchanged from the
reference module because they only run at fixture scale.  Inputs that do not
fit the compiled fast paths (more than 64 parity groups, packed points wider
than 63 bits) are delegated to the reference implementation rather than
rejected.
"""

from libc.stdlib cimport free, malloc, qsort
from libc.stdint cimport int64_t, uint64_t

import numpy as np

from . import _pyref

iter_lattice_points = _pyref.iter_lattice_points
list_lattice_points = _pyref.list_lattice_points
first_lattice_point = _pyref.first_lattice_point


cdef inline int64_t _floordiv_pos(int64_t p, int64_t q) noexcept nogil:
    # Floor division with q > 0; C division truncates toward zero instead.
    cdef int64_t d = p / q
    if p % q != 0 and p < 0:
        d -= 1
    return d


cdef int64_t _dfs(int i, int m, int k, uint64_t par, int64_t r,
                  const int64_t* A, const int64_t* limits,
                  const int64_t* minrest, const uint64_t* pbits,
                  int64_t* sums) noexcept nogil:
    cdef int64_t total = 0, lb = 0, ub = r, rem, a, q, val
    cdef int j
    if i == m:
        return 1 if par == 0 else 0
    for j in range(k):
        rem = limits[j] - sums[j] - minrest[j * (m + 1) + i + 1]
        a = A[j * m + i]
        if a > 0:
            q = _floordiv_pos(rem, a)
            if q < ub:
                ub = q
        elif a < 0:
            q = -_floordiv_pos(rem, -a)
            if q > lb:
                lb = q
        elif rem < 0:
            return 0
    if lb > ub:
        return 0
    for j in range(k):
        sums[j] += A[j * m + i] * lb
    val = lb
    while val <= ub:
        if val & 1:
            total += _dfs(i + 1, m, k, par ^ pbits[i], r, A, limits, minrest, pbits, sums)
        else:
            total += _dfs(i + 1, m, k, par, r, A, limits, minrest, pbits, sums)
        val += 1
        if val <= ub:
            for j in range(k):
                sums[j] += A[j * m + i]
    for j in range(k):
        sums[j] -= A[j * m + i] * ub
    return total


def count_lattice_points(A, b, parity, r, strict=False):
    """Number of integer points of the r-th dilation (interior if strict)."""
    if r < 0:
        raise ValueError(f"dilation must be nonnegative, got {r}")
    rows = [tuple(row) for row in A]
    cdef int k = len(rows)
    cdef int m = len(rows[0]) if k else _pyref._parity_width(parity)
    if m == 0:
        return 1
    groups = [tuple(g) for g in parity]
    if len(groups) > 64:
        return _pyref.count_lattice_points(rows, b, groups, r, strict)

    flat = np.zeros(max(1, k * m), dtype=np.int64)
    lim = np.zeros(max(1, k), dtype=np.int64)
    tails = np.zeros(max(1, k * (m + 1)), dtype=np.int64)
    for j in range(k):
        row = rows[j]
        lim[j] = r * b[j] - (1 if strict else 0)
        for i in range(m):
            flat[j * m + i] = row[i]
        acc = 0
        for i in range(m - 1, -1, -1):
            if row[i] < 0:
                acc += row[i] * r
            tails[j * (m + 1) + i] = acc
        # tails[j][m] stays 0
    pb = np.zeros(m, dtype=np.uint64)
    for p_idx, group in enumerate(groups):
        for i in group:
            pb[i] |= np.uint64(1) << np.uint64(p_idx)
    sums = np.zeros(max(1, k), dtype=np.int64)

    cdef int64_t[::1] flat_v = flat
    cdef int64_t[::1] lim_v = lim
    cdef int64_t[::1] tails_v = tails
    cdef uint64_t[::1] pb_v = pb
    cdef int64_t[::1] sums_v = sums
    cdef int64_t out
    cdef int64_t rr = r
    cdef int mm = m, kk = k
    with nogil:
        out = _dfs(0, mm, kk, 0, rr, &flat_v[0], &lim_v[0], &tails_v[0], &pb_v[0], &sums_v[0])
    return int(out)


cdef int _cmp_i64(const void* pa, const void* pb) noexcept nogil:
    cdef int64_t a = (<const int64_t*> pa)[0]
    cdef int64_t bb = (<const int64_t*> pb)[0]
    if a < bb:
        return -1
    if a > bb:
        return 1
    return 0


def _grow_layer(prev, gens):
    # One sumset step: sorted unique values of prev + g over all generators.
    cdef int64_t[::1] prev_v = prev
    cdef int64_t[::1] gens_v = gens
    cdef Py_ssize_t np_ = prev_v.shape[0], nv = gens_v.shape[0]
    cdef Py_ssize_t total = np_ * nv
    cdef int64_t* buf = <int64_t*> malloc(total * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError("sumset buffer allocation failed")
    cdef Py_ssize_t i, j, t
    with nogil:
        t = 0
        for i in range(np_):
            for j in range(nv):
                buf[t] = prev_v[i] + gens_v[j]
                t += 1
        qsort(buf, total, sizeof(int64_t), _cmp_i64)
        t = 0
        for i in range(total):
            if i == 0 or buf[i] != buf[i - 1]:
                buf[t] = buf[i]
                t += 1
    out = np.empty(t, dtype=np.int64)
    cdef int64_t[::1] out_v = out
    for i in range(t):
        out_v[i] = buf[i]
    free(buf)
    return out


def semigroup_layer_counts(vertices, r_max):
    """Sizes of the r-fold sumsets of a 0/1 generator set, r = 0..r_max."""
    if r_max < 0:
        raise ValueError(f"r_max must be nonnegative, got {r_max}")
    gens = sorted({tuple(v) for v in vertices})
    if not gens:
        raise ValueError("need at least one generator")
    m = len(gens[0])
    if r_max == 0 or m == 0:
        return _pyref.semigroup_layer_counts(gens, r_max)
    bits = max(1, int(r_max).bit_length())
    if m * bits > 63:
        return _pyref.semigroup_layer_counts(gens, r_max)
    packed = np.array(
        [sum(x << (i * bits) for i, x in enumerate(v)) for v in gens],
        dtype=np.int64,
    )
    counts = [1]
    layer = np.zeros(1, dtype=np.int64)
    for _ in range(r_max):
        layer = _grow_layer(layer, packed)
        counts.append(int(layer.shape[0]))
    return counts
