"""Cut polytopes: vertices, lattice, facet systems, codegree.

The cut polytope of a graph with m edges lives in R^m: its vertices are the
0/1 cut vectors, one per vertex subset up to complementation, so canonical
source sets never contain vertex 1.  The vertex lattice is characterized by
parity: an integer vector lies in it exactly when its coordinate sum over
every cycle is even, and fundamental cycles of a spanning forest suffice.

Two facet constructions are provided, plus a brute-force convex hull oracle
that is deliberately independent of both:

* the odd-subset cycle description, complete for graphs with no K5 minor:
  box inequalities for edges on no triangle, and for every chordless cycle C
  and odd F inside it, sum(F) - sum(C-F) <= |F| - 1;
* the short system available when additionally no chordless cycle has five
  or more edges: boxes, four inequalities per triangle, eight per chordless
  4-cycle.

All coefficients are integers and every containment test is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from . import kernels
from ._linalg import affine_rank, primitive_normal
from .errors import BoundExceededError, InvalidInputError, PreconditionError
from .graphs import (
    Graph,
    bipartition,
    chordless_cycles,
    has_k5_minor,
    is_connected,
    max_induced_cycle_at_least,
    triangles,
)


@dataclass(frozen=True)
class CutVector:
    """A vertex of the cut polytope: coordinates plus its canonical source set."""

    source_set: frozenset
    coords: tuple

    def to_json(self):
        return {"S": sorted(self.source_set), "x": list(self.coords)}


def cut_vector(g, source):
    """Cut vector of a vertex subset; coordinate i is 1 iff edge i crosses.

    The source set is canonicalized to the side not containing vertex 1,
    since complementary subsets cut the same edges.
    """
    s = set(source)
    for v in s:
        if not 1 <= v <= g.n:
            raise InvalidInputError(f"vertex {v} out of range for n={g.n}")
    if 1 in s:
        s = set(range(1, g.n + 1)) - s
    coords = tuple(1 if (u in s) != (v in s) else 0 for u, v in g.edges)
    return CutVector(frozenset(s), coords)


def canonical_source_sets(n):
    """All subsets of {2..n} as sorted tuples, in lexicographic order."""

    def rec(prefix, start):
        yield tuple(prefix)
        for v in range(start, n + 1):
            prefix.append(v)
            yield from rec(prefix, v + 1)
            prefix.pop()

    yield from rec([], 2)


def cut_vertices(g, max_n=24):
    """The 2^(n-1) cut vectors in canonical source-set order."""
    if g.n > max_n:
        raise BoundExceededError(
            f"vertex enumeration needs 2^(n-1) sets; n={g.n} exceeds the bound {max_n}"
        )
    return tuple(cut_vector(g, s) for s in canonical_source_sets(g.n))


@dataclass(frozen=True)
class CutPolytope:
    graph: Graph
    vertices: tuple

    @property
    def m(self):
        return self.graph.m


def cut_polytope(g, max_n=24):
    """Build the polytope and check its structural invariants.

    The vertex count is always 2^(n-1); vertices are pairwise distinct when
    the graph is connected; and for m <= 12 the affine span is verified to
    be all of R^m, so the polytope is full-dimensional.
    """
    verts = cut_vertices(g, max_n=max_n)
    if len(verts) != 1 << (g.n - 1):
        raise AssertionError("cut vector enumeration produced a wrong count")
    if is_connected(g) and len({v.coords for v in verts}) != len(verts):
        raise AssertionError("cut vectors of a connected graph must be distinct")
    if g.m <= 12:
        if affine_rank([v.coords for v in verts]) != g.m + 1:
            raise AssertionError("cut polytope is not full-dimensional")
    return CutPolytope(g, verts)


# ---------------------------------------------------------------------------
# lattice membership


@dataclass(frozen=True)
class LatticeBasis:
    """Spanning forest edge indices and the fundamental cycle of each chord."""

    forest: tuple
    cycles: tuple  # tuples of edge indices; parity over each decides membership


def lattice_basis(g):
    parent = [0] * (g.n + 1)
    parent_edge = [-1] * (g.n + 1)
    depth = [0] * (g.n + 1)
    seen = [False] * (g.n + 1)
    forest = []
    tree_edge = set()
    for root in range(1, g.n + 1):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            nxt = []
            for v in queue:
                for u, idx in g.incidence[v]:
                    if not seen[u]:
                        seen[u] = True
                        parent[u] = v
                        parent_edge[u] = idx
                        depth[u] = depth[v] + 1
                        forest.append(idx)
                        tree_edge.add(idx)
                        nxt.append(u)
            queue = nxt
    cycles = []
    for idx, (u, v) in enumerate(g.edges):
        if idx in tree_edge:
            continue
        path = [idx]
        a, b = u, v
        while depth[a] > depth[b]:
            path.append(parent_edge[a])
            a = parent[a]
        while depth[b] > depth[a]:
            path.append(parent_edge[b])
            b = parent[b]
        while a != b:
            path.append(parent_edge[a])
            path.append(parent_edge[b])
            a = parent[a]
            b = parent[b]
        cycles.append(tuple(sorted(path)))
    return LatticeBasis(tuple(sorted(forest)), tuple(cycles))


def lattice_contains(g, x):
    """Whether an integer vector lies in the lattice spanned by the cut vectors.

    Membership is parity of the coordinate sum over every fundamental cycle.
    """
    x = tuple(x)
    if len(x) != g.m:
        raise InvalidInputError(f"vector length {len(x)} does not match m={g.m}")
    basis = lattice_basis(g)
    return all(sum(x[i] for i in cycle) % 2 == 0 for cycle in basis.cycles)


# ---------------------------------------------------------------------------
# facet systems


@dataclass(frozen=True)
class Inequality:
    """a . x <= b at dilation 1; the right side scales with the dilation."""

    a: tuple
    b: int
    origin: tuple

    def to_json(self):
        return {"a": list(self.a), "b": self.b, "origin": _origin_json(self.origin)}


def _origin_json(origin):
    return [list(part) if isinstance(part, tuple) else part for part in origin]


@dataclass(frozen=True)
class FacetSystem:
    m: int
    inequalities: tuple

    def contains(self, x, r=1, strict=False):
        x = tuple(x)
        if len(x) != self.m:
            raise InvalidInputError(f"vector length {len(x)} does not match m={self.m}")
        for ineq in self.inequalities:
            value = sum(c * xi for c, xi in zip(ineq.a, x))
            bound = r * ineq.b
            if value > bound or (strict and value >= bound):
                return False
        return True

    def normalized(self):
        """Primitive (a, b) pairs as a set, for comparing descriptions."""
        out = set()
        for ineq in self.inequalities:
            g = 0
            for c in ineq.a:
                g = gcd(g, c)
            g = gcd(g, ineq.b)
            g = g or 1
            out.add((tuple(c // g for c in ineq.a), ineq.b // g))
        return frozenset(out)

    def to_json(self):
        return {"m": self.m, "inequalities": [q.to_json() for q in self.inequalities]}


def _cycle_edge_indices(g, cycle):
    ids = []
    for t, u in enumerate(cycle):
        v = cycle[(t + 1) % len(cycle)]
        ids.append(g.edge_index[(u, v) if u < v else (v, u)])
    return tuple(ids)


def _box_inequalities(g):
    out = []
    for i in range(g.m):
        u, v = g.edges[i]
        if g.adj[u] & g.adj[v]:
            continue  # edge on a triangle: its box planes are not facets
        lower = tuple(-1 if t == i else 0 for t in range(g.m))
        upper = tuple(1 if t == i else 0 for t in range(g.m))
        out.append(Inequality(lower, 0, ("box_lower", i)))
        out.append(Inequality(upper, 1, ("box_upper", i)))
    return out


def barahona_facets(g):
    """Complete facet description for graphs with no K5 minor.

    Boxes for triangle-free edges; for every chordless cycle C and every
    odd-cardinality F inside it, sum over F minus sum over C-F is at most
    |F| - 1.  Each listed inequality is facet-defining and the system is
    complete, which only holds without a K5 minor.
    """
    if has_k5_minor(g):
        raise PreconditionError(
            "the cycle facet description is incomplete for graphs with a K5 minor; "
            "use hull_facet_oracle on the vertex list instead"
        )
    ineqs = _box_inequalities(g)
    for cycle in chordless_cycles(g, 3):
        edge_ids = _cycle_edge_indices(g, cycle)
        for f_size in range(1, len(edge_ids) + 1, 2):
            for f_pos in itertools.combinations(range(len(edge_ids)), f_size):
                coeff = [0] * g.m
                chosen = set(f_pos)
                for pos, idx in enumerate(edge_ids):
                    coeff[idx] = 1 if pos in chosen else -1
                f_edges = tuple(edge_ids[p] for p in f_pos)
                ineqs.append(
                    Inequality(tuple(coeff), f_size - 1, ("cycle_odd", edge_ids, f_edges))
                )
    return FacetSystem(g.m, tuple(ineqs))


def is_compressed_graph(g):
    """No K5 minor and no chordless cycle of length five or more."""
    if max_induced_cycle_at_least(g, 5)[0]:
        return False
    return not has_k5_minor(g)


def compressed_facets(g):
    """Short facet description for compressed cut polytopes.

    Requires no K5 minor and no chordless cycle of length >= 5.  Boxes for
    triangle-free edges; per triangle the three homogeneous inequalities and
    one sum inequality; per chordless 4-cycle the eight inequalities
    0 <= x_i + x_j + x_k - x_l <= 2 over choices of the negated edge.
    """
    if not is_compressed_graph(g):
        raise PreconditionError(
            "the short facet description needs a compressed polytope: "
            "no K5 minor and no chordless cycle of length five or more"
        )
    ineqs = _box_inequalities(g)
    for triple in triangles(g):
        for top in triple:
            coeff = [0] * g.m
            for idx in triple:
                coeff[idx] = 1 if idx == top else -1
            ineqs.append(Inequality(tuple(coeff), 0, ("triangle_hom", triple, top)))
        coeff = [0] * g.m
        for idx in triple:
            coeff[idx] = 1
        ineqs.append(Inequality(tuple(coeff), 2, ("triangle_sum", triple)))
    for cycle in chordless_cycles(g, 4):
        if len(cycle) != 4:
            continue
        edge_ids = _cycle_edge_indices(g, cycle)
        for neg in edge_ids:
            lower = [0] * g.m
            upper = [0] * g.m
            for idx in edge_ids:
                lower[idx] = 1 if idx == neg else -1
                upper[idx] = -1 if idx == neg else 1
            ineqs.append(Inequality(tuple(lower), 0, ("square", edge_ids, neg, "lower")))
            ineqs.append(Inequality(tuple(upper), 2, ("square", edge_ids, neg, "upper")))
    system = FacetSystem(g.m, tuple(ineqs))
    if system.normalized() != barahona_facets(g).normalized():
        raise AssertionError("short facet system disagrees with the cycle description")
    return system


# ---------------------------------------------------------------------------
# codegree


def _kernel_args(g, fs):
    A = [q.a for q in fs.inequalities]
    b = [q.b for q in fs.inequalities]
    parity = lattice_basis(g).cycles
    return A, b, parity


def codegree(g, max_m=10):
    """Smallest k whose k-th dilation has an interior lattice point.

    Returns (k, witness).  Searches k = 1, 2, ... by exhaustive enumeration
    over [0, k]^m; for any graph without a K5 minor the doubled all-ones
    vector is interior at k = 4, so the search always stops by 4.  The
    zero-dimensional polytope (m = 0) has codegree 1 by convention.
    """
    if g.m > max_m:
        raise BoundExceededError(
            f"codegree enumeration is bounded at m={max_m}, got m={g.m}"
        )
    if g.m == 0:
        return 1, ()
    fs = barahona_facets(g)
    A, b, parity = _kernel_args(g, fs)
    for k in range(1, 5):
        witness = kernels.first_lattice_point(A, b, parity, k, strict=True)
        if witness is not None:
            return k, witness
    raise AssertionError("no interior lattice point up to dilation 4")


def codegree_formula(g):
    """Closed form: 2 if bipartite, 4 if some triangle exists, else 3."""
    if bipartition(g) is not None:
        return 2
    if triangles(g):
        return 4
    return 3


# ---------------------------------------------------------------------------
# hull oracle


def hull_facet_oracle(points, m, max_m=7):
    """Facets of the convex hull of full-dimensional integer points, by brute force.

    Every hyperplane spanned by m affinely independent input points is
    tested for being supporting; supporting ones are kept as primitive,
    outward-oriented inequalities.  Exponential in m and deliberately
    independent of the structured facet constructions, which it exists to
    cross-check.  Bounded at m <= 7.
    """
    if m > max_m:
        raise BoundExceededError(f"hull oracle is bounded at m={max_m}, got m={m}")
    pts = []
    seen = set()
    for p in points:
        t = tuple(p)
        if len(t) != m:
            raise InvalidInputError(f"point length {len(t)} does not match m={m}")
        if t not in seen:
            seen.add(t)
            pts.append(t)
    if m == 0:
        return FacetSystem(0, ())
    if affine_rank(pts) != m + 1:
        raise PreconditionError("hull oracle needs points spanning the full space")
    found = {}
    for combo in itertools.combinations(range(len(pts)), m):
        normal = primitive_normal([pts[i] for i in combo])
        if normal is None:
            continue
        base = sum(c * x for c, x in zip(normal, pts[combo[0]]))
        above = below = False
        for p in pts:
            value = sum(c * x for c, x in zip(normal, p))
            if value > base:
                above = True
            elif value < base:
                below = True
            if above and below:
                break
        if above and below:
            continue
        if above:
            key = (tuple(-c for c in normal), -base)
        else:
            key = (normal, base)
        if key not in found:
            found[key] = Inequality(key[0], key[1], ("hull",))
    return FacetSystem(m, tuple(found.values()))
