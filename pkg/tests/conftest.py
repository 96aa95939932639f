"""Shared test helpers: an independent brute-force oracle and graph generators.

The oracle re-implements the domination conditions directly from their
definition, on purpose sharing no code with the package verifiers, so the
two can meaningfully cross-check each other.
"""

from __future__ import annotations

import itertools
import random

from sierpdom import Graph, build_from_edges

ALL_WEIGHTS = (0, 1, 2)


def oracle_valid(g: Graph, weights, variant: str) -> bool:
    """Domination check straight from the definition (open neighborhoods)."""
    for v in range(g.n_vertices):
        if weights[v] != 0:
            continue
        s = sum(weights[u] for u in g.neighbors(v))
        if variant == "perfect":
            if s != 2:
                return False
        else:
            if s < 2:
                return False
    return True


def oracle_solve(g: Graph, variant: str):
    """(optimum, lexicographically least witness) by scanning all 3**n vectors."""
    best = None
    witness = None
    for w in itertools.product(ALL_WEIGHTS, repeat=g.n_vertices):
        if (best is None or sum(w) < best) and oracle_valid(g, w, variant):
            best = sum(w)
            witness = list(w)
    return best, witness


def oracle_optima(g: Graph, variant: str):
    """(optimum, all optimal vectors in lexicographic order) by full scan."""
    best, _ = oracle_solve(g, variant)
    if best is None:
        return None, []
    sols = [
        list(w)
        for w in itertools.product(ALL_WEIGHTS, repeat=g.n_vertices)
        if sum(w) == best and oracle_valid(g, w, variant)
    ]
    return best, sols


def random_connected_graph(rng: random.Random, lo: int = 3, hi: int = 12) -> Graph:
    """Random spanning tree plus a few extra edges; always connected."""
    n = rng.randint(lo, hi)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for _ in range(rng.randint(0, n)):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return build_from_edges(n, sorted(edges))
