"""Sweep machinery on small bounds: enumeration, cache, separations, suites."""

import json

import pytest

from cutgor.gorenstein import GORENSTEIN
from cutgor.graphs import build_graph
from cutgor.sweeps import (
    SUITES,
    OracleCache,
    clique_separations,
    edge_universe,
    iter_graphs_up_to,
    iter_labeled_graphs,
    run_suite,
    sweep_compressed_implication,
    sweep_decomposition,
    sweep_normality_closure,
    sweep_special_simplices,
    sweep_theorem_equivalence,
)
from fixture_graphs import bowtie, c4, k4, paw


class TestEnumeration:
    def test_edge_universe_is_lexicographic(self):
        assert edge_universe(3) == ((1, 2), (1, 3), (2, 3))

    def test_labeled_counts(self):
        assert sum(1 for _ in iter_labeled_graphs(3)) == 8
        assert sum(1 for _ in iter_labeled_graphs(4)) == 64

    def test_connected_counts(self):
        # Labeled connected graphs: 1, 1, 4, 38, 728 for n = 1..5.
        expect = [1, 1, 4, 38, 728]
        for n, count in enumerate(expect, start=1):
            got = sum(1 for _ in iter_labeled_graphs(n, connected_only=True))
            assert got == count, n

    def test_edge_bound_filter(self):
        for g in iter_labeled_graphs(4, max_m=3):
            assert g.m <= 3
        assert sum(1 for _ in iter_labeled_graphs(4, max_m=3)) == sum(
            1 for g in iter_labeled_graphs(4) if g.m <= 3
        )

    def test_up_to_accumulates(self):
        assert sum(1 for _ in iter_graphs_up_to(3)) == 1 + 2 + 8


class TestOracleCache:
    def test_hits_on_edge_order_permutations(self):
        cache = OracleCache()
        a = build_graph(3, [(1, 2), (2, 3), (1, 3)])
        b = build_graph(3, [(1, 3), (1, 2), (2, 3)])
        first = cache.report(a)
        second = cache.report(b)
        assert second is first
        assert cache.hits == 1

    def test_distinct_graphs_get_distinct_entries(self):
        cache = OracleCache()
        cache.report(c4())
        cache.report(paw())
        assert cache.hits == 0
        assert len(cache.reports) == 2

    def test_normal_within_bounds(self):
        cache = OracleCache()
        assert cache.normal_up_to(k4())


class TestCliqueSeparations:
    def test_double_triangle_splits_at_the_shared_vertex(self):
        # Each side keeps the shared clique, so the sides are the two glued
        # triangles themselves.
        seps = list(clique_separations(bowtie()))
        assert ((3,), (1, 2, 3), (3, 4, 5)) in seps

    def test_pendant_triangle_has_vertex_and_edge_splits(self):
        kinds = {len(s[0]) for s in clique_separations(paw())}
        assert 1 in kinds

    def test_rigid_graphs_have_none(self):
        assert list(clique_separations(c4())) == []
        assert list(clique_separations(k4())) == []

    def test_star_emits_each_leaf_against_the_rest(self):
        g = build_graph(4, [(1, 2), (1, 3), (1, 4)])
        seps = [s for s in clique_separations(g) if s[0] == (1,)]
        assert len(seps) == 3
        for shared, side, rest in seps:
            # One leaf plus the center against the other two plus the center.
            assert len(side) == 2 and len(rest) == 3
            assert 1 in side and 1 in rest


class TestSuites:
    def test_equivalence_on_tiny_bounds(self):
        # Connected labeled graphs with n <= 3: one, one, and four of them.
        report = sweep_theorem_equivalence(max_n=3, max_m=3)
        assert report.ok and report.graphs_checked == 6
        assert report.violations == ()

    def test_simplices_on_tiny_bounds(self):
        report = sweep_special_simplices(max_n=4)
        assert report.ok
        counters = dict(report.counters)
        assert counters["found"] == counters.get("d1", 0) + counters.get(
            "d3", 0
        ) + counters.get("d0", 0)

    def test_compressed_on_tiny_bounds(self):
        report = sweep_compressed_implication(max_n=4)
        assert report.ok and report.graphs_checked == 75
        assert dict(report.counters)[GORENSTEIN] > 0

    def test_decomposition_on_tiny_bounds(self):
        report = sweep_decomposition(max_n=5)
        assert report.ok
        counters = dict(report.counters)
        assert counters["decomposed"] + counters["rejected"] == report.graphs_checked

    def test_normality_on_tiny_bounds(self):
        report = sweep_normality_closure(max_n=3, max_m=3)
        assert report.ok

    def test_shared_cache_is_reused(self):
        cache = OracleCache()
        sweep_theorem_equivalence(max_n=3, max_m=3, cache=cache)
        assert len(cache.reports) > 0
        sweep_normality_closure(max_n=3, max_m=3, cache=cache)
        assert cache.hits > 0

    def test_run_suite_dispatch_and_overrides(self):
        report = run_suite("equivalence", max_n=3, max_m=3)
        assert report.suite == "theorem_equivalence"
        assert report.graphs_checked == 6
        with pytest.raises(ValueError):
            run_suite("unknown")

    def test_every_registered_suite_has_defaults(self):
        assert set(SUITES) == {
            "equivalence",
            "simplices",
            "compressed",
            "decomposition",
            "normality",
        }

    def test_report_json_round_trips(self):
        report = sweep_theorem_equivalence(max_n=3, max_m=3)
        payload = report.to_json()
        json.dumps(payload)
        assert payload["suite"] == "theorem_equivalence"
        assert payload["ok"] is True
        assert payload["graphs_checked"] == 6
