"""Classifier, certificates, simplex search, falsifier, counting oracle."""

import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutgor.errors import BoundExceededError, PreconditionError
from cutgor.gorenstein import (
    BRANCH_BIPARTITE,
    BRANCH_CHORDAL,
    GORENSTEIN,
    NOT_GORENSTEIN,
    UNDECIDED,
    SpecialSimplex,
    classify_gorenstein,
    classify_verdict,
    construct_special_simplex,
    gorenstein_oracle,
    interior_point_criterion,
    special_simplex_search,
    verify_special_simplex,
)
from cutgor.graphs import build_graph, contract_edge, induced_subgraph
from cutgor.polytope import CutVector, barahona_facets, compressed_facets, cut_vertices
from fixture_graphs import (
    bowtie,
    c4,
    c5,
    c6,
    k1,
    k2,
    k3,
    k4,
    k5,
    named_fixtures,
    p3,
    paw,
    petersen,
    two_k4_shared_triangle,
)


def all_labeled_graphs(n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(2 ** len(pairs)):
        yield build_graph(n, [p for t, p in enumerate(pairs) if mask >> t & 1])


class TestClassifier:
    def test_verdicts_and_branches(self):
        expect = {
            "K1": (GORENSTEIN, BRANCH_BIPARTITE),
            "K2": (GORENSTEIN, BRANCH_BIPARTITE),
            "P3": (GORENSTEIN, BRANCH_BIPARTITE),
            "K3": (GORENSTEIN, BRANCH_CHORDAL),
            "C4": (GORENSTEIN, BRANCH_BIPARTITE),
            "PAW": (NOT_GORENSTEIN, None),
            "C5": (NOT_GORENSTEIN, None),
            "C6": (NOT_GORENSTEIN, None),
            "K4": (GORENSTEIN, BRANCH_CHORDAL),
            "BOWTIE": (GORENSTEIN, BRANCH_CHORDAL),
            "K5E": (GORENSTEIN, BRANCH_CHORDAL),
            "K5": (NOT_GORENSTEIN, None),
        }
        for name, g in named_fixtures().items():
            assert classify_verdict(g) == expect[name], name

    def test_pendant_triangle_violations(self):
        cert = classify_gorenstein(paw())
        assert [(v.condition, v.witness) for v in cert.violations] == [
            ("odd_cycle", (3, 1, 2)),
            ("bridge", 3),
        ]

    def test_five_cycle_violations(self):
        cert = classify_gorenstein(c5())
        assert [(v.condition, v.witness) for v in cert.violations] == [
            ("odd_cycle", (4, 5, 1, 2, 3)),
            ("chordless_cycle", (1, 2, 3, 4, 5)),
        ]

    def test_six_cycle_violations(self):
        cert = classify_gorenstein(c6())
        assert [v.condition for v in cert.violations] == [
            "long_chordless_cycle",
            "chordless_cycle",
        ]
        assert cert.violations[0].witness == (1, 2, 3, 4, 5, 6)

    def test_k5_violation_replaces_branch_noise(self):
        cert = classify_gorenstein(k5())
        assert [v.condition for v in cert.violations] == ["k5_minor"]
        blocks = cert.violations[0].witness
        assert sorted(sorted(b) for b in blocks) == [[1], [2], [3], [4], [5]]

    def test_petersen_fails_both_branches(self):
        cert = classify_gorenstein(petersen())
        assert cert.verdict == NOT_GORENSTEIN
        conditions = {v.condition for v in cert.violations}
        assert conditions == {"odd_cycle", "chordless_cycle"}

    def test_positive_certificates_carry_a_simplex(self):
        for name, g in named_fixtures().items():
            cert = classify_gorenstein(g)
            if cert.verdict == GORENSTEIN:
                assert cert.simplex is not None, name
                assert cert.violations == (), name
            else:
                assert cert.simplex is None and cert.partition is None, name

    def test_verdict_core_agrees_with_the_certificate_exhaustively(self):
        for n in range(1, 5):
            for g in all_labeled_graphs(n):
                cert = classify_gorenstein(g)
                assert classify_verdict(g) == (cert.verdict, cert.branch)

    def test_certificate_json_is_serializable(self):
        for maker in (c4, bowtie, c5, k5):
            payload = classify_gorenstein(maker()).to_json()
            json.dumps(payload)
            assert set(payload) == {
                "verdict",
                "branch",
                "partition",
                "special_simplex",
                "violations",
            }

    def test_not_closed_under_minors(self):
        # The pendant triangle sits inside the positive double triangle both
        # as an induced subgraph and as a contraction, so no minor-closure
        # argument can apply to the positive class.
        g = bowtie()
        assert classify_verdict(g)[0] == GORENSTEIN
        sub = induced_subgraph(g, [1, 2, 3, 4])
        assert classify_verdict(sub)[0] == NOT_GORENSTEIN
        contracted = contract_edge(g, g.edge_index[(4, 5)]).graph
        assert classify_verdict(contracted)[0] == NOT_GORENSTEIN


class TestSpecialSimplices:
    def test_dimension_by_branch(self):
        expect = {
            "K1": 0,
            "K2": 1,
            "P3": 1,
            "C4": 1,
            "K3": 3,
            "K4": 3,
            "BOWTIE": 3,
            "K5E": 3,
        }
        for name, d in expect.items():
            simplex = construct_special_simplex(named_fixtures()[name])
            assert simplex.d == d, name

    def test_bipartite_simplex_is_the_zero_one_pair(self):
        simplex = construct_special_simplex(c4())
        coords = [v.coords for v in simplex.vertices]
        assert coords == [(0, 0, 0, 0), (1, 1, 1, 1)]

    def test_double_triangle_partition(self):
        cert = classify_gorenstein(bowtie())
        assert [sorted(cls) for cls in cert.partition.classes] == [
            [1, 4],
            [2, 5],
            [3],
            [],
        ]

    def test_negative_input_refused(self):
        with pytest.raises(PreconditionError):
            construct_special_simplex(c5())

    def test_certificates_verify_against_both_facet_systems(self):
        for name, g in named_fixtures().items():
            if classify_verdict(g)[0] != GORENSTEIN or g.m == 0:
                continue
            simplex = construct_special_simplex(g)
            verts = cut_vertices(g)
            for system in (barahona_facets(g), compressed_facets(g)):
                ok, reason = verify_special_simplex(system, simplex, verts)
                assert ok, (name, reason)

    def test_verifier_rejects_foreign_points(self):
        g = c4()
        bad = CutVector(frozenset(), (2, 0, 0, 0))
        ok, reason = verify_special_simplex(
            barahona_facets(g), SpecialSimplex((bad,)), cut_vertices(g)
        )
        assert not ok and reason == ("not_a_polytope_vertex", 0)

    def test_verifier_rejects_affine_dependence(self):
        g = k4()
        verts = cut_vertices(g)
        degenerate = SpecialSimplex((verts[0], verts[1], verts[0], verts[2]))
        ok, reason = verify_special_simplex(barahona_facets(g), degenerate, verts)
        assert not ok and reason == ("affinely_dependent",)

    def test_verifier_rejects_wrong_tight_counts(self):
        g = k3()
        verts = cut_vertices(g)
        wrong = SpecialSimplex((verts[0], verts[1]))
        ok, reason = verify_special_simplex(barahona_facets(g), wrong, verts)
        assert not ok and reason[0] == "facet_tight_count"

    def test_every_vertex_pair_of_the_pendant_triangle_fails(self):
        # No two vertices of this polytope meet every facet in exactly one
        # point, which is the geometric face of the negative verdict.
        g = paw()
        fs = barahona_facets(g)
        verts = cut_vertices(g)
        for a, b in itertools.combinations(range(len(verts)), 2):
            ok, _ = verify_special_simplex(
                fs, SpecialSimplex((verts[a], verts[b])), verts
            )
            assert not ok

    def test_search_agrees_with_construction(self):
        for name in ("K2", "P3", "K3", "C4", "K4", "BOWTIE"):
            g = named_fixtures()[name]
            found = special_simplex_search(g)
            built = construct_special_simplex(g)
            assert found is not None, name
            assert found.d == built.d, name

    def test_search_finds_nothing_for_the_pendant_triangle(self):
        assert special_simplex_search(paw()) is None

    def test_search_preconditions_and_bounds(self):
        with pytest.raises(PreconditionError):
            special_simplex_search(c5())
        with pytest.raises(BoundExceededError):
            special_simplex_search(build_graph(6, [(1, 2)]), max_n=5)
        with pytest.raises(BoundExceededError):
            special_simplex_search(k3(), d_max=5)


class TestInteriorCriterion:
    def test_positive_fixtures(self):
        for name, g, codeg, witness in [
            ("K2", k2(), 2, (1,)),
            ("K3", k3(), 4, (2, 2, 2)),
            ("C4", c4(), 2, (1, 1, 1, 1)),
            ("BOWTIE", bowtie(), 4, (2, 2, 2, 2, 2, 2)),
        ]:
            rep = interior_point_criterion(g, 2)
            assert rep.ok and rep.failure is None, name
            assert rep.codegree == codeg and rep.witness == witness, name
            assert rep.r_checked == 2, name

    def test_hexagon_survives_one_step_then_fails(self):
        # The unique interior point exists, but the quotient property breaks
        # at the second step: a necessary condition only a deeper check sees.
        shallow = interior_point_criterion(c6(), 1)
        assert shallow.ok and shallow.witness == (1, 1, 1, 1, 1, 1)
        deep = interior_point_criterion(c6(), 2)
        assert not deep.ok
        assert deep.failure == ("quotient_outside", 2, (1, 1, 1, 1, 1, 3))

    def test_five_cycle_has_two_interior_points(self):
        rep = interior_point_criterion(c5(), 2)
        assert not rep.ok
        assert rep.witness == (1, 1, 1, 1, 2)
        assert rep.failure == ("interior_not_unique", (1, 1, 1, 2, 1))

    def test_never_a_false_negative_on_positives(self):
        for name, g in named_fixtures().items():
            if g.m > 6 or classify_verdict(g)[0] != GORENSTEIN:
                continue
            assert interior_point_criterion(g, 2).ok, name

    def test_bound_and_json(self):
        with pytest.raises(BoundExceededError):
            interior_point_criterion(two_k4_shared_triangle(), 1, max_m=8)
        payload = interior_point_criterion(c6(), 2).to_json()
        json.dumps(payload)
        assert payload["failure"] == ["quotient_outside", 2, [1, 1, 1, 1, 1, 3]]


class TestCountingOracle:
    def test_fixture_verdicts(self):
        expect = {
            "K1": GORENSTEIN,
            "K2": GORENSTEIN,
            "P3": GORENSTEIN,
            "K3": GORENSTEIN,
            "C4": GORENSTEIN,
            "PAW": NOT_GORENSTEIN,
            "C5": NOT_GORENSTEIN,
            "C6": NOT_GORENSTEIN,
            "K4": GORENSTEIN,
            "BOWTIE": GORENSTEIN,
        }
        for name, verdict in expect.items():
            assert gorenstein_oracle(named_fixtures()[name]).verdict == verdict, name

    def test_asymmetric_h_is_the_negative_reason(self):
        rep = gorenstein_oracle(paw())
        assert rep.verdict == NOT_GORENSTEIN
        assert rep.h.entries == (1, 3)
        assert rep.reason == "h-vector asymmetric"

    def test_positive_verdict_carries_the_caveat_degree(self):
        rep = gorenstein_oracle(bowtie())
        assert rep.verdict == GORENSTEIN
        assert rep.h.entries == (1, 9, 9, 1)
        assert rep.checked_up_to == 8
        assert "up to degree 8" in rep.reason

    def test_out_of_bounds_is_undecided(self):
        assert gorenstein_oracle(k5()).verdict == UNDECIDED
        assert gorenstein_oracle(build_graph(7, [])).verdict == UNDECIDED
        assert gorenstein_oracle(two_k4_shared_triangle()).verdict == UNDECIDED

    def test_k5_minor_guard_inside_bounds(self):
        rep = gorenstein_oracle(k5(), max_m=10)
        assert rep.verdict == UNDECIDED
        assert "K5" in rep.reason

    def test_json_shape(self):
        payload = gorenstein_oracle(c4()).to_json()
        json.dumps(payload)
        assert payload["verdict"] == GORENSTEIN
        assert payload["h"] == [1, 3, 3, 1]


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2**10 - 1))
def test_classifier_matches_oracle_on_random_small_graphs(mask):
    pairs = list(itertools.combinations(range(1, 6), 2))
    edges = [p for t, p in enumerate(pairs) if mask >> t & 1]
    g = build_graph(5, edges[:7])
    rep = gorenstein_oracle(g)
    if rep.verdict != UNDECIDED:
        assert classify_verdict(g)[0] == rep.verdict
