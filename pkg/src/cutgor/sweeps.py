"""Exhaustive labeled-graph sweeps that cross-validate the classifier.

Each suite enumerates every labeled graph within its bounds and puts two
independent routes to the same question against each other: the structural
classifier versus the counting oracle, the constructed simplex versus the
exhaustive search, the clique-sum decomposition versus the predicate triple
it claims to characterize.  Suites return SweepReport values rather than
raising, so the CLI and the acceptance tests can render counts; a nonempty
violation list means a genuine defect somewhere in the artifact.

Enumeration is over labeled graphs (no isomorphism reduction): duplicates
only cost time at these scales, and every invariant checked is isomorphism
invariant anyway.  Order is deterministic: vertex count ascending, then the
edge-subset bitmask ascending over the lexicographic pair universe.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .errors import BoundExceededError
from .gorenstein import (
    GORENSTEIN,
    UNDECIDED,
    classify_verdict,
    construct_special_simplex,
    gorenstein_oracle,
    special_simplex_search,
    verify_special_simplex,
)
from .graphs import (
    Graph,
    _check_peo,
    _mcs_order,
    bridges,
    clique_sum_decompose,
    contract_edge,
    delete_edge,
    has_k5_minor,
    induced_subgraph,
    is_connected,
    max_induced_cycle_at_least,
    triangles,
)
from .polytope import barahona_facets, compressed_facets, cut_vertices, is_compressed_graph


def edge_universe(n):
    """All vertex pairs on 1..n in lexicographic order; bit i of an edge
    mask selects pair i."""
    return tuple(
        (u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
    )


def iter_labeled_graphs(n, max_m=None, connected_only=False):
    """Every labeled graph on exactly n vertices, bitmask order."""
    pairs = edge_universe(n)
    total = 1 << len(pairs)
    for mask in range(total):
        if max_m is not None and mask.bit_count() > max_m:
            continue
        edges = tuple(p for i, p in enumerate(pairs) if mask >> i & 1)
        g = Graph(n, edges)
        if connected_only and not is_connected(g):
            continue
        yield g


def iter_graphs_up_to(max_n, max_m=None, connected_only=False):
    for n in range(1, max_n + 1):
        yield from iter_labeled_graphs(n, max_m=max_m, connected_only=connected_only)


@dataclass(frozen=True)
class SweepReport:
    suite: str
    graphs_checked: int
    checks: int
    violations: tuple
    counters: tuple
    elapsed: float

    @property
    def ok(self):
        return not self.violations

    def to_json(self):
        return {
            "suite": self.suite,
            "graphs_checked": self.graphs_checked,
            "checks": self.checks,
            "violations": [_jsonable(v) for v in self.violations],
            "counters": {k: v for k, v in self.counters},
            "elapsed_seconds": round(self.elapsed, 3),
            "ok": self.ok,
        }


def _jsonable(value):
    if isinstance(value, (tuple, list, frozenset, set)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (int, str, float, bool)) or value is None:
        return value
    return str(value)


def _report(suite, start, graphs, checks, violations, counters):
    return SweepReport(
        suite,
        graphs,
        checks,
        tuple(violations),
        tuple(sorted(counters.items())),
        time.monotonic() - start,
    )


class OracleCache:
    """Memoized counting-oracle reports, keyed by the graph up to edge order.

    The brute-force verdict does not depend on edge indexing (permuting
    coordinates permutes both counting routes identically), so minors and
    split-off pieces reuse reports computed for the sweep's own labeling.
    """

    def __init__(self):
        self.reports = {}
        self.hits = 0

    @staticmethod
    def key(g):
        return g.n, tuple(sorted(tuple(sorted(e)) for e in g.edges))

    def report(self, g):
        key = self.key(g)
        rep = self.reports.get(key)
        if rep is None:
            rep = gorenstein_oracle(g)
            self.reports[key] = rep
        else:
            self.hits += 1
        return rep

    def normal_up_to(self, g):
        rep = self.report(g)
        if rep.verdict == UNDECIDED:
            raise BoundExceededError(f"oracle bounds exceeded for n={g.n}, m={g.m}")
        return rep.witness_degree is None


def sweep_theorem_equivalence(max_n=5, max_m=7, cache=None):
    """Structural classification against the counting oracle, graph by graph.

    Connected labeled graphs with n <= max_n and m <= max_m; every verdict
    must agree.  The oracle's positive verdicts carry a normality caveat
    degree, which agreement deliberately ignores.
    """
    start = time.monotonic()
    cache = cache if cache is not None else OracleCache()
    graphs = checks = 0
    violations = []
    counters = {"classifier_gorenstein": 0, "classifier_not": 0}
    for g in iter_graphs_up_to(max_n, max_m=max_m, connected_only=True):
        graphs += 1
        verdict, _ = classify_verdict(g)
        counters["classifier_gorenstein" if verdict == GORENSTEIN else "classifier_not"] += 1
        rep = cache.report(g)
        if rep.verdict == UNDECIDED:
            raise BoundExceededError(
                f"oracle cannot decide n={g.n}, m={g.m}; shrink the sweep bounds"
            )
        checks += 1
        if rep.verdict != verdict:
            violations.append(("verdict_mismatch", g.n, g.edges, verdict, rep.verdict))
    return _report("theorem_equivalence", start, graphs, checks, violations, counters)


def sweep_special_simplices(max_n=5):
    """Search-versus-classifier equivalence plus the dimension laws.

    Over compressed connected graphs with n <= max_n: the exhaustive
    special-simplex search succeeds exactly on classifier positives; found
    and constructed simplices verify against both facet systems; a graph
    with a triangle forces d = 3 and a graph with an untriangled edge or a
    chordless 4-cycle forces d = 1.
    """
    start = time.monotonic()
    graphs = checks = 0
    violations = []
    counters = {"found": 0, "absent": 0, "d1": 0, "d3": 0, "d0": 0}
    for g in iter_graphs_up_to(max_n, connected_only=True):
        if not is_compressed_graph(g):
            continue
        graphs += 1
        verdict, _ = classify_verdict(g)
        found = special_simplex_search(g)
        checks += 1
        if (found is not None) != (verdict == GORENSTEIN):
            violations.append(
                ("search_classifier_mismatch", g.n, g.edges, verdict, found is not None)
            )
            continue
        if found is None:
            counters["absent"] += 1
            continue
        counters["found"] += 1
        built = construct_special_simplex(g)
        verts = cut_vertices(g)
        short = compressed_facets(g)
        full = barahona_facets(g)
        for label, simplex in (("search", found), ("construction", built)):
            for system_label, system in (("short", short), ("cycle", full)):
                checks += 1
                ok, reason = verify_special_simplex(system, simplex, verts)
                if not ok:
                    violations.append(
                        ("simplex_rejected", g.n, g.edges, label, system_label, reason)
                    )
        in_triangle = set()
        for triple in triangles(g):
            in_triangle.update(triple)
        has_triangle = bool(in_triangle)
        has_untriangled = any(i not in in_triangle for i in range(g.m))
        has_square = max_induced_cycle_at_least(g, 4)[0]
        forced = []
        if has_triangle:
            forced.append(3)
        if has_untriangled or has_square:
            forced.append(1)
        if forced:
            counters[f"d{forced[0]}"] += 1
        else:
            counters["d0"] += 1
        for want in forced:
            for label, simplex in (("search", found), ("construction", built)):
                checks += 1
                if simplex.d != want:
                    violations.append(
                        ("dimension_law", g.n, g.edges, label, simplex.d, want)
                    )
    return _report("special_simplices", start, graphs, checks, violations, counters)


def sweep_compressed_implication(max_n=7):
    """Every classifier positive is compressed, over all labeled graphs.

    Purely graph-theoretic: no polytopes are touched, so this suite covers
    n <= 7 including disconnected graphs.
    """
    start = time.monotonic()
    graphs = checks = 0
    violations = []
    counters = {"gorenstein": 0}
    for g in iter_graphs_up_to(max_n):
        graphs += 1
        verdict, _ = classify_verdict(g)
        if verdict != GORENSTEIN:
            continue
        counters["gorenstein"] += 1
        checks += 1
        if not is_compressed_graph(g):
            violations.append(("gorenstein_not_compressed", g.n, g.edges))
    return _report("compressed_implication", start, graphs, checks, violations, counters)


def sweep_decomposition(max_n=7):
    """Clique-sum decomposition against its predicate characterization.

    Connected labeled graphs with n <= max_n: decomposition succeeds exactly
    when the graph is bridgeless, chordal, and has no K5 minor; every
    produced tree reassembles to the input edge set and uses only K3/K4
    blocks glued along 1, 2, or 3 shared vertices.
    """
    start = time.monotonic()
    graphs = checks = 0
    violations = []
    counters = {"decomposed": 0, "rejected": 0}
    for g in iter_graphs_up_to(max_n, connected_only=True):
        graphs += 1
        tree = clique_sum_decompose(g)
        expected = (
            not bridges(g)
            and _check_peo(g, list(reversed(_mcs_order(g))))
            and not has_k5_minor(g)
        )
        checks += 1
        if (tree is not None) != expected:
            violations.append(
                ("decompose_predicate_mismatch", g.n, g.edges, tree is not None, expected)
            )
            continue
        if tree is None:
            counters["rejected"] += 1
            continue
        counters["decomposed"] += 1
        checks += 1
        want = {tuple(sorted(e)) for e in g.edges}
        if tree.edge_set() != want:
            violations.append(("reassembly_mismatch", g.n, g.edges))
        for blk in tree.blocks:
            if blk.kind not in ("K3", "K4") or len(blk.vertices) != {"K3": 3, "K4": 4}[blk.kind]:
                violations.append(("bad_block", g.n, g.edges, blk.kind, sorted(blk.vertices)))
        for glue in tree.gluings:
            if len(glue.shared) not in (1, 2, 3):
                violations.append(("bad_gluing", g.n, g.edges, sorted(glue.shared)))
    return _report("decomposition", start, graphs, checks, violations, counters)


def _components_without(g, banned_mask):
    # Connected components of g minus a banned vertex set, as bitmasks.
    remaining = g.vertex_mask & ~banned_mask
    comps = []
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            grown = 0
            f = frontier
            while f:
                low = f & -f
                grown |= g.adj[low.bit_length()]
                f ^= low
            frontier = grown & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def _mask_to_vertices(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def clique_separations(g):
    """Ways to split g as a clique sum along 1, 2, or 3 shared vertices.

    Yields (shared, side_a, side_b) vertex tuples: shared is a clique whose
    removal disconnects g, and the sides partition the rest.  With three or
    more components every component-versus-rest split is yielded; with two,
    just the one split.
    """
    for size in (1, 2, 3):
        if size > g.n:
            return
        for T in itertools.combinations(range(1, g.n + 1), size):
            ok = True
            for a, b in itertools.combinations(T, 2):
                if not g.adj[a] >> (b - 1) & 1:
                    ok = False
                    break
            if not ok:
                continue
            banned = 0
            for v in T:
                banned |= 1 << (v - 1)
            comps = _components_without(g, banned)
            if len(comps) < 2:
                continue
            picks = range(len(comps)) if len(comps) > 2 else range(1)
            for i in picks:
                side = comps[i]
                rest = 0
                for j, c in enumerate(comps):
                    if j != i:
                        rest |= c
                yield (
                    T,
                    tuple(sorted(_mask_to_vertices(side | banned))),
                    tuple(sorted(_mask_to_vertices(rest | banned))),
                )


def sweep_normality_closure(max_n=5, max_m=7, cache=None):
    """Normality under minors and under clique sums, at desk scale.

    Over connected labeled graphs within bounds: when the graph counts as
    normal up to its degree bound, so must every single edge deletion and
    contraction; and for every split along a separating clique of at most
    three vertices, the whole is normal exactly when both sides are.
    """
    start = time.monotonic()
    cache = cache if cache is not None else OracleCache()
    graphs = checks = 0
    violations = []
    counters = {"normal": 0, "not_normal": 0, "splits": 0, "minors": 0}
    for g in iter_graphs_up_to(max_n, max_m=max_m, connected_only=True):
        graphs += 1
        base = cache.normal_up_to(g)
        counters["normal" if base else "not_normal"] += 1
        if base:
            for i in range(g.m):
                counters["minors"] += 1
                checks += 1
                if not cache.normal_up_to(delete_edge(g, i)):
                    violations.append(("deletion_not_normal", g.n, g.edges, i))
                checks += 1
                if not cache.normal_up_to(contract_edge(g, i).graph):
                    violations.append(("contraction_not_normal", g.n, g.edges, i))
        for shared, side_a, side_b in clique_separations(g):
            counters["splits"] += 1
            checks += 1
            part_a = induced_subgraph(g, side_a)
            part_b = induced_subgraph(g, side_b)
            sides_normal = cache.normal_up_to(part_a) and cache.normal_up_to(part_b)
            if sides_normal != base:
                violations.append(
                    ("sum_equivalence", g.n, g.edges, shared, sides_normal, base)
                )
    return _report("normality_closure", start, graphs, checks, violations, counters)


SUITES = {
    "equivalence": (sweep_theorem_equivalence, {"max_n": 5, "max_m": 7}),
    "simplices": (sweep_special_simplices, {"max_n": 5}),
    "compressed": (sweep_compressed_implication, {"max_n": 7}),
    "decomposition": (sweep_decomposition, {"max_n": 7}),
    "normality": (sweep_normality_closure, {"max_n": 5, "max_m": 7}),
}


def run_suite(name, max_n=None, max_m=None, cache=None):
    """Run one named suite, with bound overrides where the suite takes them."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    fn, defaults = SUITES[name]
    kwargs = dict(defaults)
    if max_n is not None:
        kwargs["max_n"] = max_n
    if max_m is not None and "max_m" in defaults:
        kwargs["max_m"] = max_m
    if cache is not None and fn in (sweep_theorem_equivalence, sweep_normality_closure):
        kwargs["cache"] = cache
    return fn(**kwargs)
