"""Timing comparison of the compiled and pure enumeration backends.

Run as a script:

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is a realistic call from the counting layer: dilation counts
against a facet system with cycle parity, semigroup layer growth, and the
strict interior-point search the codegree routine performs.  Times are the
best of N runs; the speedup column is pure time over compiled time.
"""

import argparse
import time

from cutgor.graphs import build_graph, cycle_graph
from cutgor.kernels import available_backends, backend_module
from cutgor.polytope import barahona_facets, cut_vertices, lattice_basis


def bowtie():
    return build_graph(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])


def facet_args(g):
    fs = barahona_facets(g)
    A = [q.a for q in fs.inequalities]
    b = [q.b for q in fs.inequalities]
    return A, b, lattice_basis(g).cycles


def workloads():
    hexagon = cycle_graph(6)
    double_triangle = bowtie()
    A6, b6, par6 = facet_args(hexagon)
    Ab, bb, parb = facet_args(double_triangle)
    hex_verts = [v.coords for v in cut_vertices(hexagon)]
    return [
        (
            "count r=4, hexagon facets",
            lambda impl: impl.count_lattice_points(A6, b6, par6, 4),
        ),
        (
            "count r=6, double-triangle facets",
            lambda impl: impl.count_lattice_points(Ab, bb, parb, 6),
        ),
        (
            "interior count r=4, double triangle",
            lambda impl: impl.count_lattice_points(Ab, bb, parb, 4, strict=True),
        ),
        (
            "semigroup layers to r=8, hexagon",
            lambda impl: impl.semigroup_layer_counts(hex_verts, 8),
        ),
    ]


def best_time(fn, impl, repeat):
    best = None
    value = None
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn(impl)
        elapsed = time.perf_counter() - start
        if best is None or elapsed < best:
            best = elapsed
    return best, value


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="runs per cell, best kept")
    args = parser.parse_args()

    backends = available_backends()
    impls = {name: backend_module(name) for name in backends}
    print(f"backends: {', '.join(backends)}")
    header = f"{'workload':<40} " + " ".join(f"{name:>12}" for name in backends)
    if len(backends) > 1:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, fn in workloads():
        times = {}
        values = set()
        for name in backends:
            elapsed, value = best_time(fn, impls[name], args.repeat)
            times[name] = elapsed
            values.add(repr(value))
        if len(values) != 1:
            raise AssertionError(f"backends disagree on {label}: {values}")
        row = f"{label:<40} " + " ".join(f"{times[name] * 1e3:>10.2f}ms" for name in backends)
        if len(backends) > 1 and "compiled" in times and times["compiled"] > 0:
            row += f" {times['pure'] / times['compiled']:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
