"""Finite simple graphs with labeled vertices and ordered edges.

Vertices are labeled 1..n.  Edges are stored as (u, v) pairs with u < v in a
fixed order; the 0-based position of a pair in ``Graph.edges`` is its edge
index, and every cut vector and facet inequality downstream addresses
coordinates by that index.  All predicates here are exact and deterministic:
ties break toward the lowest vertex label, witnesses are the first found in
a fixed enumeration order.

The module covers the combinatorial side of the classification: bipartitions,
chordality with elimination orderings, bridges, triangles, chordless cycle
enumeration, K5 minors by exhaustive branch-set search, minor operations,
greedy clique colorings, and clique-sum decompositions into K3/K4 blocks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import InvalidInputError, PreconditionError


def _bit(v):
    return 1 << (v - 1)


@dataclass(frozen=True)
class Graph:
    """Simple graph; construct through :func:`build_graph` for validation."""

    n: int
    edges: tuple

    @cached_property
    def m(self):
        return len(self.edges)

    @cached_property
    def adj(self):
        """Neighbor bitmasks indexed by vertex label; bit u-1 means u is adjacent."""
        masks = [0] * (self.n + 1)
        for u, v in self.edges:
            masks[u] |= _bit(v)
            masks[v] |= _bit(u)
        return tuple(masks)

    @cached_property
    def incidence(self):
        """Per-vertex tuples of (neighbor, edge index), in edge order."""
        inc = [[] for _ in range(self.n + 1)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return tuple(tuple(entries) for entries in inc)

    @cached_property
    def edge_index(self):
        return {pair: i for i, pair in enumerate(self.edges)}

    @cached_property
    def vertex_mask(self):
        return (1 << self.n) - 1

    def has_edge(self, u, v):
        return bool(self.adj[u] & _bit(v))

    def degree(self, v):
        return self.adj[v].bit_count()


def build_graph(n, edges):
    """Validate and build a :class:`Graph`.

    Rejects loops, duplicate edges, and out-of-range labels, naming the
    offending pair in the error.  Edge order is preserved; each pair is
    normalized to (min, max).
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidInputError(f"vertex count must be a positive integer, got {n!r}")
    normalized = []
    seen = set()
    for pair in edges:
        u, v = pair
        if not (1 <= u <= n and 1 <= v <= n):
            raise InvalidInputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InvalidInputError(f"loop ({u}, {v}) not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise InvalidInputError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        normalized.append(key)
    return Graph(n, tuple(normalized))


def complete_graph(k):
    return build_graph(k, list(itertools.combinations(range(1, k + 1), 2)))


def cycle_graph(k):
    edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]
    return build_graph(k, edges)


def path_graph(k):
    return build_graph(k, [(i, i + 1) for i in range(1, k)])


def parse_graph_text(text):
    """Parse the plain text format: first line ``n m``, then m lines ``u v``.

    ``#`` starts a comment; semicolons may replace newlines so a graph fits
    on a command line.  Edge index equals order of appearance.
    """
    tokens = []
    for raw_line in text.replace(";", "\n").splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if line:
            tokens.append(line.split())
    if not tokens:
        raise InvalidInputError("empty graph description")
    header = tokens[0]
    if len(header) != 2:
        raise InvalidInputError(f"header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise InvalidInputError(f"header must be two integers, got {' '.join(header)!r}") from None
    body = tokens[1:]
    if len(body) != m:
        raise InvalidInputError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for fields in body:
        if len(fields) != 2:
            raise InvalidInputError(f"edge line must be 'u v', got {' '.join(fields)!r}")
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise InvalidInputError(f"edge line must be two integers, got {' '.join(fields)!r}") from None
    return build_graph(n, edges)


def format_graph_text(g):
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# connectivity


def components(g):
    """Connected components as frozensets of vertices, by lowest label."""
    seen = 0
    out = []
    for start in range(1, g.n + 1):
        if seen & _bit(start):
            continue
        comp = _flood(g.adj, _bit(start))
        seen |= comp
        out.append(frozenset(_mask_vertices(comp)))
    return out


def is_connected(g):
    return _flood(g.adj, 1) == g.vertex_mask


def _flood(adj, start_mask):
    # Expand a vertex mask to its union of components.
    comp = start_mask
    frontier = start_mask
    while frontier:
        grown = 0
        f = frontier
        while f:
            low = f & -f
            grown |= adj[low.bit_length()]
            f ^= low
        frontier = grown & ~comp
        comp |= frontier
    return comp


def _mask_vertices(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return out


def _mask_connected(adj, mask):
    if mask == 0:
        return False
    low = mask & -mask
    comp = low
    frontier = low
    while frontier:
        grown = 0
        f = frontier
        while f:
            b = f & -f
            grown |= adj[b.bit_length()]
            f ^= b
        frontier = grown & mask & ~comp
        comp |= frontier
    return comp == mask


# ---------------------------------------------------------------------------
# bipartitions


@dataclass(frozen=True)
class VertexPartition:
    """Partition of the vertex set into at most four classes, some possibly empty."""

    classes: tuple

    def __post_init__(self):
        if not (1 <= len(self.classes) <= 4):
            raise InvalidInputError("a vertex partition has between 1 and 4 classes")
        seen = set()
        for cls in self.classes:
            if seen & cls:
                raise InvalidInputError("partition classes must be pairwise disjoint")
            seen |= cls

    def covers(self, g):
        union = set()
        for cls in self.classes:
            union |= cls
        return union == set(range(1, g.n + 1))

    def is_proper(self, g):
        """No edge inside a class."""
        masks = [sum(_bit(v) for v in cls) for cls in self.classes]
        for u, v in g.edges:
            for mask in masks:
                if mask & _bit(u) and mask & _bit(v):
                    return False
        return True


def _two_color(g):
    # BFS two-coloring; returns (colors, None) or (None, odd cycle witness).
    colors = [None] * (g.n + 1)
    parent = [0] * (g.n + 1)
    for root in range(1, g.n + 1):
        if colors[root] is not None:
            continue
        colors[root] = 0
        queue = [root]
        while queue:
            nxt = []
            for v in queue:
                for u, _ in g.incidence[v]:
                    if colors[u] is None:
                        colors[u] = colors[v] ^ 1
                        parent[u] = v
                        nxt.append(u)
                    elif colors[u] == colors[v]:
                        return None, _bfs_odd_cycle(parent, u, v)
            queue = nxt
    return colors, None


def _bfs_odd_cycle(parent, u, v):
    # Join the two tree paths at their lowest common ancestor.
    path_u = [u]
    while parent[path_u[-1]]:
        path_u.append(parent[path_u[-1]])
    on_u = {w: i for i, w in enumerate(path_u)}
    path_v = [v]
    while path_v[-1] not in on_u:
        path_v.append(parent[path_v[-1]])
    lca = path_v[-1]
    cycle = path_u[: on_u[lca] + 1] + path_v[-2::-1]
    return tuple(cycle)


def bipartition(g):
    """Bipartition with the lowest-labeled vertex of each component in class one.

    Returns a two-class :class:`VertexPartition`, or None when some component
    contains an odd cycle.
    """
    colors, _ = _two_color(g)
    if colors is None:
        return None
    one = frozenset(v for v in range(1, g.n + 1) if colors[v] == 0)
    two = frozenset(v for v in range(1, g.n + 1) if colors[v] == 1)
    return VertexPartition((one, two))


def odd_cycle_witness(g):
    """An odd cycle as a vertex tuple, or None when the graph is bipartite."""
    _, cycle = _two_color(g)
    return cycle


# ---------------------------------------------------------------------------
# chordality


def _mcs_order(g):
    # Maximum cardinality search; ties go to the lowest label.
    n = g.n
    weights = [0] * (n + 1)
    visited = 0
    order = []
    for _ in range(n):
        best = -1
        best_v = 0
        for v in range(1, n + 1):
            if not visited & _bit(v) and weights[v] > best:
                best = weights[v]
                best_v = v
        order.append(best_v)
        visited |= _bit(best_v)
        for u in _mask_vertices(g.adj[best_v] & ~visited):
            weights[u] += 1
    return order


def _check_peo(g, order):
    # order[k] is eliminated k-th; later neighbors of each vertex must form a clique.
    n = g.n
    pos = [0] * (n + 1)
    for k, v in enumerate(order):
        pos[v] = k
    later_mask = [0] * (n + 1)
    running = 0
    for v in reversed(order):
        later_mask[v] = running
        running |= _bit(v)
    for v in order:
        nbrs = g.adj[v] & later_mask[v]
        if not nbrs:
            continue
        u = min(_mask_vertices(nbrs), key=lambda w: pos[w])
        if (nbrs & ~_bit(u)) & ~g.adj[u]:
            return False
    return True


def is_chordal(g):
    """Chordality with a witness.

    Returns ``(True, peo)`` where ``peo`` is a perfect elimination ordering,
    or ``(False, cycle)`` with a chordless cycle of length at least 4.  The
    ordering is the reversed maximum cardinality search order with
    lowest-label tie-breaking, so it is deterministic.
    """
    order = list(reversed(_mcs_order(g)))
    if _check_peo(g, order):
        return True, tuple(order)
    for cycle in chordless_cycles(g, 4):
        return False, cycle
    raise AssertionError("elimination order rejected but no chordless cycle found")


def chordless_cycles(g, min_len=3):
    """Yield every chordless cycle of length >= min_len exactly once.

    Cycles come out as vertex tuples starting at their lowest vertex; the
    second entry is smaller than the last, which fixes one of the two
    traversal directions.  Enumeration grows chordless paths depth-first in
    ascending label order, so the output order is deterministic.
    """
    adj = g.adj
    n = g.n

    def extend(path, path_mask, a_bit):
        last = path[-1]
        for x in _mask_vertices(adj[last] & ~path_mask):
            xbit = _bit(x)
            if xbit < a_bit:
                continue
            inside = adj[x] & path_mask
            if inside == _bit(last):
                path.append(x)
                yield from extend(path, path_mask | xbit, a_bit)
                path.pop()
            elif inside == (_bit(last) | a_bit) and len(path) + 1 >= min_len:
                if path[1] < x:
                    yield tuple(path) + (x,)

    for a in range(1, n + 1):
        a_bit = _bit(a)
        for v1 in _mask_vertices(adj[a]):
            if v1 < a:
                continue
            yield from extend([a, v1], a_bit | _bit(v1), a_bit)


def max_induced_cycle_at_least(g, k):
    """Whether some chordless cycle has length >= k; with the first witness."""
    if k < 3:
        raise InvalidInputError(f"cycle length threshold must be at least 3, got {k}")
    for cycle in chordless_cycles(g, k):
        return True, cycle
    return False, None


# ---------------------------------------------------------------------------
# bridges and triangles


def bridges(g):
    """Edge indices of all bridges, as a frozenset (iterative lowlink DFS)."""
    n = g.n
    disc = [0] * (g.n + 1)
    low = [0] * (g.n + 1)
    timer = 1
    out = []
    for root in range(1, n + 1):
        if disc[root]:
            continue
        stack = [(root, -1, iter(g.incidence[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, pedge, it = stack[-1]
            advanced = False
            for u, idx in it:
                if idx == pedge:
                    continue
                if disc[u]:
                    if disc[u] < low[v]:
                        low[v] = disc[u]
                    continue
                disc[u] = low[u] = timer
                timer += 1
                stack.append((u, idx, iter(g.incidence[u])))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                    if low[v] > disc[parent]:
                        out.append(pedge)
    return frozenset(out)


def triangles(g):
    """All triangles as sorted edge-index triples, in lexicographic order."""
    out = []
    for u in range(1, g.n + 1):
        for v in _mask_vertices(g.adj[u]):
            if v <= u:
                continue
            common = g.adj[u] & g.adj[v]
            for w in _mask_vertices(common):
                if w <= v:
                    continue
                triple = tuple(sorted((
                    g.edge_index[(u, v)],
                    g.edge_index[(u, w)],
                    g.edge_index[(v, w)],
                )))
                out.append(triple)
    out.sort()
    return tuple(out)


def edge_in_triangle(g, i):
    if not 0 <= i < g.m:
        raise InvalidInputError(f"edge index {i} out of range")
    u, v = g.edges[i]
    return bool(g.adj[u] & g.adj[v])


# ---------------------------------------------------------------------------
# K5 minors


@lru_cache(maxsize=None)
def _partition_shapes(n):
    # All ways to place 5 disjoint nonempty blocks (as bitmasks) inside [n],
    # vertices considered in label order with a skip option.  Graph-independent,
    # so cached and shared across queries of the same n.
    shapes = []

    def rec(v, blocks):
        if v > n:
            if len(blocks) == 5:
                shapes.append(tuple(blocks))
            return
        if len(blocks) + (n - v + 1) < 5:
            return
        vb = 1 << (v - 1)
        for i in range(len(blocks)):
            blocks[i] |= vb
            rec(v + 1, blocks)
            blocks[i] &= ~vb
        if len(blocks) < 5:
            blocks.append(vb)
            rec(v + 1, blocks)
            blocks.pop()
        rec(v + 1, blocks)

    rec(1, [])
    return tuple(shapes)


def _k5_shape_ok(g, blocks):
    adj = g.adj
    nbhd = []
    for blk in blocks:
        reach = 0
        b = blk
        while b:
            low = b & -b
            reach |= adj[low.bit_length()]
            b ^= low
        nbhd.append(reach)
    for i in range(5):
        for j in range(i + 1, 5):
            if not nbhd[i] & blocks[j]:
                return False
    for blk in blocks:
        if not _mask_connected(adj, blk):
            return False
    return True


def k5_minor_witness(g):
    """Five disjoint connected branch sets, pairwise joined by an edge.

    Returns them as a tuple of frozensets, or None.  A K5 minor needs at
    least 10 edges and 5 vertices, so small graphs are dismissed without
    search.  For n <= 8 the candidate block placements are precomputed once
    and reused; larger graphs walk the same recursion lazily and stop at the
    first witness.
    """
    if g.n < 5 or g.m < 10:
        return None
    if g.n <= 8:
        for blocks in _partition_shapes(g.n):
            if _k5_shape_ok(g, blocks):
                return tuple(frozenset(_mask_vertices(b)) for b in blocks)
        return None

    n = g.n

    def rec(v, blocks):
        if v > n:
            if len(blocks) == 5 and _k5_shape_ok(g, tuple(blocks)):
                return tuple(blocks)
            return None
        if len(blocks) + (n - v + 1) < 5:
            return None
        vb = 1 << (v - 1)
        for i in range(len(blocks)):
            blocks[i] |= vb
            found = rec(v + 1, blocks)
            if found:
                return found
            blocks[i] &= ~vb
        if len(blocks) < 5:
            blocks.append(vb)
            found = rec(v + 1, blocks)
            if found:
                return found
            blocks.pop()
        return rec(v + 1, blocks)

    found = rec(1, [])
    if found is None:
        return None
    return tuple(frozenset(_mask_vertices(b)) for b in found)


def has_k5_minor(g):
    return k5_minor_witness(g) is not None


# ---------------------------------------------------------------------------
# minor operations


def delete_edge(g, i):
    """Remove edge i; remaining edges keep their relative order."""
    if not 0 <= i < g.m:
        raise InvalidInputError(f"edge index {i} out of range")
    return Graph(g.n, g.edges[:i] + g.edges[i + 1:])


@dataclass(frozen=True)
class EdgeContraction:
    graph: Graph
    edge_map: tuple
    """Old edge index -> new index; None for the contracted edge.  Parallel
    edges merged by the contraction share the surviving index."""


def contract_edge(g, i):
    """Contract edge i, merging its endpoints into the smaller label.

    Vertices above the vanished label shift down by one so the result is
    labeled 1..n-1 with relative order preserved.
    """
    if not 0 <= i < g.m:
        raise InvalidInputError(f"edge index {i} out of range")
    if g.n < 2:
        raise InvalidInputError("cannot contract an edge of a single-vertex graph")
    u, v = g.edges[i]

    def relabel(w):
        w = u if w == v else w
        return w - 1 if w > v else w

    new_edges = []
    position = {}
    mapping = []
    for j, (a, b) in enumerate(g.edges):
        if j == i:
            mapping.append(None)
            continue
        a2, b2 = relabel(a), relabel(b)
        pair = (a2, b2) if a2 < b2 else (b2, a2)
        if pair in position:
            mapping.append(position[pair])
        else:
            position[pair] = len(new_edges)
            mapping.append(len(new_edges))
            new_edges.append(pair)
    return EdgeContraction(Graph(g.n - 1, tuple(new_edges)), tuple(mapping))


def induced_subgraph(g, vertices):
    """Subgraph on a vertex subset, relabeled to 1..k preserving label order."""
    keep = sorted(set(vertices))
    if not keep:
        raise InvalidInputError("induced subgraph needs at least one vertex")
    for v in keep:
        if not 1 <= v <= g.n:
            raise InvalidInputError(f"vertex {v} out of range for n={g.n}")
    relabel = {v: i + 1 for i, v in enumerate(keep)}
    kept = set(keep)
    edges = tuple(
        (relabel[u], relabel[v]) for u, v in g.edges if u in kept and v in kept
    )
    return Graph(len(keep), edges)


# ---------------------------------------------------------------------------
# colorings and clique sums


def _greedy_clique_coloring(g):
    # MCS-order greedy; correct (at most 4 colors) only under the
    # preconditions chordal_four_coloring enforces.
    order = _mcs_order(g)
    color = {}
    for v in order:
        used = {color[u] for u in _mask_vertices(g.adj[v]) if u in color}
        c = 0
        while c in used:
            c += 1
        if c > 3:
            raise AssertionError("greedy coloring exceeded four colors on a chordal graph")
        color[v] = c
    classes = [set(), set(), set(), set()]
    for v, c in color.items():
        classes[c].add(v)
    return VertexPartition(tuple(frozenset(cls) for cls in classes))


def chordal_four_coloring(g):
    """Greedy proper coloring into at most four classes.

    Requires chordality and no K5 minor.  Coloring follows the maximum
    cardinality search order (the reverse of the elimination ordering), where
    each vertex's already-colored neighborhood is a clique, so at most four
    colors appear.  Returns a four-class partition, trailing classes empty.
    """
    ok, _ = is_chordal(g)
    if not ok:
        raise PreconditionError("four-coloring requires a chordal graph")
    if has_k5_minor(g):
        raise PreconditionError("four-coloring requires no K5 minor")
    return _greedy_clique_coloring(g)


@dataclass(frozen=True)
class CliqueBlock:
    kind: str  # "K3" or "K4"
    vertices: frozenset


@dataclass(frozen=True)
class Gluing:
    parent: int
    child: int
    shared: frozenset


@dataclass(frozen=True)
class CliqueSumTree:
    blocks: tuple
    gluings: tuple

    def edge_set(self):
        out = set()
        for blk in self.blocks:
            out.update(itertools.combinations(sorted(blk.vertices), 2))
        return out


def _maximal_cliques_chordal(g, peo):
    pos = {v: k for k, v in enumerate(peo)}
    later = [0] * (g.n + 1)
    running = 0
    for v in reversed(peo):
        later[v] = running
        running |= _bit(v)
    candidates = []
    for v in peo:
        candidates.append(_bit(v) | (g.adj[v] & later[v]))
    maximal = []
    for c in candidates:
        if not any(c != d and c & ~d == 0 for d in candidates):
            if c not in maximal:
                maximal.append(c)
    return maximal


def clique_sum_decompose(g):
    """Decompose into K3/K4 blocks glued along shared cliques, if possible.

    Succeeds exactly when the connected input is bridgeless, chordal, and has
    no K5 minor; returns None otherwise.  For chordal graphs the K5 condition
    collapses to clique number at most 4, since a K5 minor in a chordal graph
    forces a K5 subgraph.  Blocks are the maximal cliques; gluings are the
    edges of a maximum-weight clique tree (weight = intersection size), which
    gives each block a single attachment clique of 1, 2, or 3 shared vertices,
    i.e. a 0-, 1-, or 2-sum.

    Raises on disconnected input.  The single-vertex graph decomposes into an
    empty block list.
    """
    if not is_connected(g):
        raise PreconditionError("clique-sum decomposition requires a connected graph")
    if g.n == 1:
        return CliqueSumTree((), ())
    ok, witness = is_chordal(g)
    if not ok:
        return None
    if bridges(g):
        return None
    clique_masks = _maximal_cliques_chordal(g, list(witness))
    if any(c.bit_count() > 4 for c in clique_masks):
        return None
    # Bridgeless + chordal leaves every edge on a triangle, so no maximal
    # clique can be a bare edge, and connectivity rules out singletons.
    if any(c.bit_count() < 3 for c in clique_masks):
        raise AssertionError("unexpected small maximal clique in a bridgeless chordal graph")

    blocks = tuple(
        CliqueBlock("K3" if c.bit_count() == 3 else "K4", frozenset(_mask_vertices(c)))
        for c in clique_masks
    )
    if len(blocks) == 1:
        return CliqueSumTree(blocks, ())

    # Prim on intersection weights; max-weight clique trees satisfy the
    # running intersection property, so each attachment is a genuine clique sum.
    count = len(clique_masks)
    in_tree = {0}
    gluings = []
    while len(in_tree) < count:
        best = None
        for i in sorted(in_tree):
            for j in range(count):
                if j in in_tree:
                    continue
                weight = (clique_masks[i] & clique_masks[j]).bit_count()
                if best is None or weight > best[0]:
                    best = (weight, i, j)
        weight, i, j = best
        if weight == 0:
            raise AssertionError("clique graph of a connected chordal graph must be connected")
        shared = frozenset(_mask_vertices(clique_masks[i] & clique_masks[j]))
        gluings.append(Gluing(i, j, shared))
        in_tree.add(j)
    return CliqueSumTree(blocks, tuple(gluings))
