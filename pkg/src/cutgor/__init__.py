"""Exact classification of graphs whose cut polytopes are Gorenstein.

The package decides the Gorenstein property from graph structure alone (no
K5 minor, plus either bipartite without long chordless cycles or bridgeless
chordal), constructs the certifying special simplex, and cross-checks the
classifier at desk scale against independent polyhedral and algebraic
oracles: brute-force facet enumeration, dilation lattice-point counts, and
h-vector symmetry.
"""

__version__ = "0.1.0"
