"""Exact linear algebra: ranks, determinants, hyperplane normals.

The whole package leans on these three functions for facet verification,
so they are checked against an independent Fraction-based elimination.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutgor._linalg import affine_rank, affinely_independent, det, primitive_normal, row_rank


def fraction_rank(rows):
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    rank = 0
    for col in range(len(mat[0])):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank]
        for i in range(rank + 1, len(mat)):
            if mat[i][col]:
                f = mat[i][col] / lead[col]
                mat[i] = [a - f * b for a, b in zip(mat[i], lead)]
        rank += 1
        if rank == len(mat):
            break
    return rank


class TestRowRank:
    def test_basics(self):
        assert row_rank([]) == 0
        assert row_rank([[0, 0]]) == 0
        assert row_rank([[1, 0], [0, 1]]) == 2
        assert row_rank([[1, 2], [2, 4]]) == 1

    def test_zero_pivot_rows_stay_consistent(self):
        # Regression: rows skipped at an early pivot step (zero in the pivot
        # column while the previous pivot was 1) must still be rescaled, or
        # later exact divisions silently truncate.  These twelve homogenized
        # cut vectors lie on a hyperplane of R^7, so their rank is 6; the
        # unscaled variant reported 7.
        rows = [
            (1, 0, 0, 0, 0, 0, 0),
            (1, 1, 0, 1, 0, 0, 0),
            (1, 1, 1, 0, 1, 1, 0),
            (1, 1, 1, 0, 0, 0, 0),
            (1, 1, 1, 0, 1, 0, 1),
            (1, 1, 0, 1, 1, 0, 1),
            (1, 1, 0, 1, 1, 1, 0),
            (1, 0, 1, 1, 1, 1, 0),
            (1, 0, 1, 1, 0, 0, 0),
            (1, 0, 1, 1, 1, 0, 1),
            (1, 0, 0, 0, 1, 0, 1),
            (1, 0, 0, 0, 1, 1, 0),
        ]
        assert row_rank(rows) == 6
        assert fraction_rank(rows) == 6

    @settings(max_examples=300, deadline=None)
    @given(
        st.lists(
            st.lists(st.integers(min_value=-4, max_value=4), min_size=5, max_size=5),
            min_size=0,
            max_size=7,
        )
    )
    def test_matches_fraction_elimination(self, rows):
        assert row_rank(rows) == fraction_rank(rows)


class TestDet:
    def test_small_cases(self):
        assert det([]) == 1
        assert det([[5]]) == 5
        assert det([[1, 2], [3, 4]]) == -2
        assert det([[2, 0, 0], [0, 3, 0], [0, 0, 4]]) == 24
        assert det([[1, 2], [2, 4]]) == 0

    def test_row_swap_flips_sign(self):
        assert det([[0, 1], [1, 0]]) == -1

    def test_requires_square(self):
        with pytest.raises(ValueError):
            det([[1, 2, 3], [4, 5, 6]])

    @settings(max_examples=200, deadline=None)
    @given(
        st.integers(min_value=1, max_value=4),
        st.data(),
    )
    def test_matches_cofactor_expansion(self, size, data):
        rows = [
            [data.draw(st.integers(min_value=-5, max_value=5)) for _ in range(size)]
            for _ in range(size)
        ]

        def cofactor(mat):
            if len(mat) == 1:
                return mat[0][0]
            total = 0
            for j, top in enumerate(mat[0]):
                if not top:
                    continue
                minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
                total += (-1) ** j * top * cofactor(minor)
            return total

        assert det(rows) == cofactor(rows)


class TestAffine:
    def test_affine_rank_counts_the_homogenized_span(self):
        square = [(0, 0), (1, 0), (0, 1), (1, 1)]
        assert affine_rank(square) == 3
        segment = [(0, 0), (1, 1), (2, 2)]
        assert affine_rank(segment) == 2

    def test_affinely_independent(self):
        assert affinely_independent([(0, 0), (1, 0), (0, 1)])
        assert not affinely_independent([(0, 0), (1, 1), (2, 2)])
        assert affinely_independent([(0, 0)])

    def test_primitive_normal_is_orthogonal_and_primitive(self):
        points = [(0, 0, 0), (1, 0, 1), (0, 1, 1)]
        normal = primitive_normal(points)
        base = points[0]
        for p in points[1:]:
            assert sum(c * (x - y) for c, x, y in zip(normal, p, base)) == 0
        from math import gcd

        g = 0
        for c in normal:
            g = gcd(g, c)
        assert g == 1

    def test_primitive_normal_rejects_degenerate_spans(self):
        assert primitive_normal([(0, 0, 0), (1, 1, 1), (2, 2, 2)]) is None
