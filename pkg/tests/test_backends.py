"""Pure-Python and compiled kernels must be bit-for-bit interchangeable.

Every kernel is run through both backends on the same inputs; optima,
witnesses, enumerations, abort flags, and node counts must all match
exactly, otherwise backend selection would silently change results.
"""

import random

import pytest

from sierpdom import build_complete, build_path, build_sierpinski
from sierpdom.solvers import _pure
from sierpdom.solvers._backend import backend_name
from tests.conftest import random_connected_graph

_core = pytest.importorskip("sierpdom.solvers._core")


def kernel_inputs():
    rng = random.Random(321)
    graphs = [
        build_sierpinski(3, 2),
        build_sierpinski(2, 3),
        build_path(7),
        build_complete(5),
    ]
    graphs += [random_connected_graph(rng, 3, 9) for _ in range(8)]
    for g in graphs:
        indptr, indices = g.csr()
        for perfect in (0, 1):
            yield g, indptr, indices, perfect


def degree_order(g):
    return sorted(range(g.n_vertices), key=lambda v: (-g.degree(v), v))


def test_backend_names():
    assert _pure.BACKEND_NAME == "pure-python"
    assert _core.BACKEND_NAME == "compiled"
    assert backend_name() in (_pure.BACKEND_NAME, _core.BACKEND_NAME)


def test_exhaustive_backends_identical():
    for g, indptr, indices, perfect in kernel_inputs():
        a = _pure.exhaustive(g.n_vertices, indptr, indices, perfect)
        b = _core.exhaustive(g.n_vertices, indptr, indices, perfect)
        assert a == b


def test_branch_bound_backends_identical():
    for g, indptr, indices, perfect in kernel_inputs():
        order = degree_order(g)
        a = _pure.branch_bound(g.n_vertices, indptr, indices, perfect, order, 10**8, -1, None)
        b = _core.branch_bound(g.n_vertices, indptr, indices, perfect, order, 10**8, -1, None)
        assert a == b


def test_lex_witness_and_enumeration_backends_identical():
    for g, indptr, indices, perfect in kernel_inputs():
        n = g.n_vertices
        best, _, _ = _pure.exhaustive(n, indptr, indices, perfect)
        if best > 2 * n:
            continue
        a = _pure.lex_min_witness(n, indptr, indices, perfect, best, 10**8)
        b = _core.lex_min_witness(n, indptr, indices, perfect, best, 10**8)
        assert a == b
        a = _pure.enumerate_exact(n, indptr, indices, perfect, best, 500, 10**8)
        b = _core.enumerate_exact(n, indptr, indices, perfect, best, 500, 10**8)
        assert a == b


def test_budget_abort_backends_identical():
    g = build_sierpinski(3, 3)
    indptr, indices = g.csr()
    order = degree_order(g)
    for budget in (1, 10, 1000, 20000):
        a = _pure.branch_bound(g.n_vertices, indptr, indices, 0, order, budget, -1, None)
        b = _core.branch_bound(g.n_vertices, indptr, indices, 0, order, budget, -1, None)
        assert a == b
        assert a[3] is True  # aborted


def test_seeded_search_backends_identical():
    g = build_sierpinski(4, 2)
    indptr, indices = g.csr()
    order = degree_order(g)
    seed = [0] * g.n_vertices
    for v in range(0, g.n_vertices, 2):
        seed[v] = 1
    a = _pure.branch_bound(g.n_vertices, indptr, indices, 0, order, 10**8, sum(seed), seed)
    b = _core.branch_bound(g.n_vertices, indptr, indices, 0, order, 10**8, sum(seed), seed)
    assert a == b
