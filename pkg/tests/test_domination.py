"""Weight-function validation and the two domination verifiers."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sierpdom import (
    InvalidInputError,
    build_complete,
    build_path,
    build_sierpinski,
    construct_level2,
    construct_level3plus,
    neighbor_sums,
    total_weight,
    verify,
    verify_idf,
    verify_pid,
)
from tests.conftest import oracle_valid, random_connected_graph


def test_total_weight_examples():
    assert total_weight([0] * 9) == 0
    assert total_weight([2] * 9) == 18
    assert total_weight(construct_level2(3)) == 5


def test_all_two_function_is_valid_everywhere():
    g = build_sierpinski(3, 2)
    w = [2] * g.n_vertices
    assert verify_idf(g, w).valid
    assert verify_pid(g, w).valid


def test_k3_all_zero_has_three_deficits():
    g = build_complete(3)
    report = verify_idf(g, [0, 0, 0])
    assert not report.valid
    assert len(report.violations) == 3
    assert all(v.kind == "deficit" and v.neighbor_sum == 0 for v in report.violations)


def test_level3_construction_is_valid_idf_of_weight_12():
    g = build_sierpinski(3, 3)
    w = construct_level3plus(3, 3)
    report = verify_idf(g, w)
    assert report.valid
    assert report.total_weight == 12


def test_pid_examples_on_small_complete_graphs():
    k3 = build_complete(3)
    assert verify_pid(k3, [2, 0, 0]).valid
    report = verify_pid(k3, [1, 1, 1])
    assert report.valid and report.total_weight == 3

    k4 = build_complete(4)
    report = verify_pid(k4, [2, 1, 0, 0])
    assert not report.valid
    assert [v.kind for v in report.violations] == ["inexact", "inexact"]
    assert [v.neighbor_sum for v in report.violations] == [3, 3]
    assert [v.vertex for v in report.violations] == [2, 3]


def test_pid_deficit_and_inexact_are_distinguished():
    p3 = build_path(3)
    report = verify_pid(p3, [0, 1, 0])
    kinds = {v.vertex: v.kind for v in report.violations}
    assert kinds == {0: "deficit", 2: "deficit"}
    report = verify_pid(p3, [2, 0, 2])
    assert [v.kind for v in report.violations] == ["inexact"]


def test_isolated_zero_vertex_reports_deficit_sum_zero():
    p1 = build_path(1)
    report = verify_idf(p1, [0])
    assert not report.valid
    assert report.violations[0].neighbor_sum == 0


def test_weight_vector_validation():
    g = build_complete(3)
    with pytest.raises(InvalidInputError):
        verify_idf(g, [0, 0])
    with pytest.raises(InvalidInputError):
        verify_idf(g, [0, 0, 3])
    with pytest.raises(InvalidInputError):
        verify_idf(g, [0, 0, -1])


def test_variant_dispatch():
    g = build_complete(4)
    assert verify(g, [2, 1, 0, 0], "italian").valid
    assert not verify(g, [2, 1, 0, 0], "perfect").valid
    with pytest.raises(InvalidInputError):
        verify(g, [2, 1, 0, 0], "roman")


def test_neighbor_sums_open_neighborhood():
    # Own weight never counts toward a vertex's sum.
    p3 = build_path(3)
    assert neighbor_sums(p3, [2, 1, 0]) == [1, 2, 1]


def test_report_dict_shape():
    g = build_complete(3)
    d = verify_pid(g, [2, 1, 0]).to_dict()
    assert d["valid"] is False
    assert d["total_weight"] == 3
    assert d["violations"] == [{"vertex": 2, "neighbor_sum": 3, "kind": "inexact"}]


# ---------------------------------------------------------------------------
# Properties
# ---------------------------------------------------------------------------

@given(st.integers(0, 10_000), st.integers(3, 9))
def test_verifiers_match_definition_oracle(seed, size):
    rng = random.Random(seed)
    g = random_connected_graph(rng, 3, size)
    w = [rng.randint(0, 2) for _ in range(g.n_vertices)]
    assert verify_idf(g, w).valid == oracle_valid(g, w, "italian")
    assert verify_pid(g, w).valid == oracle_valid(g, w, "perfect")


@given(st.integers(0, 10_000))
def test_pid_implies_idf(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, 3, 9)
    w = [rng.choice((0, 0, 1, 2)) for _ in range(g.n_vertices)]
    if verify_pid(g, w).valid:
        assert verify_idf(g, w).valid


@given(st.integers(0, 10_000))
def test_raising_one_entry_keeps_idf_valid(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, 3, 9)
    w = construct_weights_somewhere_valid(g, rng)
    v = rng.randrange(g.n_vertices)
    if w[v] < 2:
        w[v] += 1
        assert verify_idf(g, w).valid


def construct_weights_somewhere_valid(g, rng):
    # The all-two vector is always valid; lower random entries while the
    # function stays valid to get a non-trivial starting point.
    w = [2] * g.n_vertices
    for _ in range(g.n_vertices):
        v = rng.randrange(g.n_vertices)
        if w[v] > 0:
            w[v] -= 1
            if not verify_idf(g, w).valid:
                w[v] += 1
    assert verify_idf(g, w).valid
    return w


@given(st.integers(0, 10_000))
def test_reports_only_zero_weight_vertices(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, 3, 9)
    w = [rng.randint(0, 2) for _ in range(g.n_vertices)]
    for variant in ("italian", "perfect"):
        report = verify(g, w, variant)
        assert report.valid == (not report.violations)
        for violation in report.violations:
            assert w[violation.vertex] == 0


def test_no_zero_entries_is_always_valid():
    g = build_sierpinski(3, 2)
    w = [1 + (v % 2) for v in range(g.n_vertices)]
    assert verify_idf(g, w).valid
    assert verify_pid(g, w).valid
