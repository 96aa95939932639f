"""Graph construction, the word codec, and structural invariants."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sierpdom import (
    CapacityError,
    InvalidInputError,
    adjacent_by_rule,
    build_complete,
    build_from_edges,
    build_path,
    build_sierpinski,
    extreme_ranks,
    extreme_vertices,
    parse_label,
    rank_word,
    word_label,
    word_rank,
)
from sierpdom.graphs import CAPACITY_ENV, max_vertices_limit


# ---------------------------------------------------------------------------
# Word codec
# ---------------------------------------------------------------------------

def test_word_rank_extremes():
    assert word_rank((1, 1, 1), 3) == 0
    assert word_rank((3, 3), 3) == 8


def test_rank_word_value_fixed_from_codec():
    # 5 = 101 in base 2, digits (1,0,1), letters digit+1.
    assert rank_word(5, 2, 3) == (2, 1, 2)
    assert word_rank((2, 1, 2), 2) == 5


@given(st.integers(2, 12), st.integers(1, 5), st.data())
def test_codec_roundtrip(n, t, data):
    r = data.draw(st.integers(0, n**t - 1))
    w = rank_word(r, n, t)
    assert len(w) == t
    assert all(1 <= c <= n for c in w)
    assert word_rank(w, n) == r
    assert parse_label(word_label(w, n), n) == w


@given(st.integers(2, 9), st.integers(1, 4), st.data())
def test_rank_order_is_lexicographic(n, t, data):
    r = data.draw(st.integers(0, n**t - 2))
    assert rank_word(r, n, t) < rank_word(r + 1, n, t)


def test_labels_concatenated_below_ten_commas_above():
    assert word_label((1, 2, 3), 3) == "123"
    assert word_label((10, 2), 12) == "10,2"
    assert parse_label("10,2", 12) == (10, 2)


def test_codec_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        word_rank((0, 1), 3)
    with pytest.raises(InvalidInputError):
        word_rank((1, 4), 3)
    with pytest.raises(InvalidInputError):
        rank_word(9, 3, 2)
    with pytest.raises(InvalidInputError):
        rank_word(-1, 3, 2)


# ---------------------------------------------------------------------------
# Pairwise adjacency rule
# ---------------------------------------------------------------------------

def test_rule_examples():
    assert adjacent_by_rule((1, 2), (2, 1), 5)
    assert adjacent_by_rule((1, 2, 3), (1, 3, 2), 3)
    assert not adjacent_by_rule((1, 2, 3), (2, 1, 3), 3)


def test_rule_is_irreflexive_and_needs_equal_length():
    assert not adjacent_by_rule((1, 2), (1, 2), 3)
    with pytest.raises(InvalidInputError):
        adjacent_by_rule((1, 2), (1, 2, 1), 3)


@given(st.integers(2, 4), st.integers(1, 4), st.data())
def test_rule_symmetric(n, t, data):
    u = tuple(data.draw(st.integers(1, n)) for _ in range(t))
    v = tuple(data.draw(st.integers(1, n)) for _ in range(t))
    assert adjacent_by_rule(u, v, n) == adjacent_by_rule(v, u, n)


# ---------------------------------------------------------------------------
# Sierpinski construction vs the rule oracle
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_constructor_agrees_with_rule_oracle(n, t):
    g = build_sierpinski(n, t)
    words = [rank_word(r, n, t) for r in range(n**t)]
    expected = {
        (u, v)
        for u in range(len(words))
        for v in range(u + 1, len(words))
        if adjacent_by_rule(words[u], words[v], n)
    }
    assert set(g.edges()) == expected


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_counts_degrees_extremes(n, t):
    g = build_sierpinski(n, t)
    assert g.n_vertices == n**t
    assert g.n_edges == n * (n**t - 1) // 2
    assert g.is_connected()
    ext = extreme_ranks(g)
    assert len(ext) == n
    assert [g.word(v) for v in ext] == extreme_vertices(g)
    assert extreme_vertices(g) == [(c,) * t for c in range(1, n + 1)]
    ext_set = set(ext)
    for v in range(g.n_vertices):
        assert g.degree(v) == (n - 1 if v in ext_set else n)


def test_base_case_is_complete_graph():
    g = build_sierpinski(3, 1)
    assert g.n_vertices == 3 and g.n_edges == 3


def test_s52_edge_count():
    g = build_sierpinski(5, 2)
    assert (g.n_vertices, g.n_edges) == (25, 60)


@pytest.mark.parametrize("t", [1, 2, 3, 4, 5, 6])
def test_n2_is_path_in_line_order(t):
    g = build_sierpinski(2, t)
    m = 2**t
    assert g.edges() == [(i, i + 1) for i in range(m - 1)]
    assert extreme_ranks(g) == [0, m - 1]


def test_neighbors_sorted_and_symmetric():
    g = build_sierpinski(4, 2)
    for v in range(g.n_vertices):
        nbrs = g.neighbors(v)
        assert list(nbrs) == sorted(nbrs)
        assert all(v in g.neighbors(u) for u in nbrs)


def test_sierpinski_rejects_bad_parameters():
    with pytest.raises(InvalidInputError):
        build_sierpinski(1, 2)
    with pytest.raises(InvalidInputError):
        build_sierpinski(3, 0)


# ---------------------------------------------------------------------------
# Generic graphs
# ---------------------------------------------------------------------------

def test_complete_and_path_shapes():
    k4 = build_complete(4)
    assert (k4.n_vertices, k4.n_edges) == (4, 6)
    assert k4.family == "complete"
    p1 = build_path(1)
    assert (p1.n_vertices, p1.n_edges) == (1, 0)
    p5 = build_path(5)
    assert (p5.n_vertices, p5.n_edges) == (5, 4)
    assert sorted(v for v in range(5) if p5.degree(v) == 1) == [0, 4]
    assert p5.labels() == ["1", "2", "3", "4", "5"]


def test_build_from_edges_dedupes_and_validates():
    g = build_from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g.n_edges == 2
    assert g.family == "custom"
    with pytest.raises(InvalidInputError):
        build_from_edges(3, [(0, 0)])
    with pytest.raises(InvalidInputError):
        build_from_edges(3, [(0, 3)])
    with pytest.raises(InvalidInputError):
        build_from_edges(2, [], labels=["a"])
    with pytest.raises(InvalidInputError):
        build_from_edges(2, [], labels=["a", "a"])


def test_disconnected_graph_detected():
    g = build_from_edges(4, [(0, 1), (2, 3)])
    assert not g.is_connected()


# ---------------------------------------------------------------------------
# Capacity limit
# ---------------------------------------------------------------------------

def test_capacity_default_blocks_huge_instances():
    with pytest.raises(CapacityError):
        build_sierpinski(10, 7)  # 10**7 > default limit


def test_capacity_env_override(monkeypatch):
    monkeypatch.setenv(CAPACITY_ENV, "10")
    assert max_vertices_limit() == 10
    with pytest.raises(CapacityError):
        build_path(11)
    build_path(10)
    monkeypatch.setenv(CAPACITY_ENV, "abc")
    with pytest.raises(InvalidInputError):
        max_vertices_limit()
    monkeypatch.setenv(CAPACITY_ENV, "0")
    with pytest.raises(InvalidInputError):
        max_vertices_limit()


def test_capacity_argument_beats_default():
    with pytest.raises(CapacityError):
        build_sierpinski(3, 3, max_vertices=26)
    assert build_sierpinski(3, 3, max_vertices=27).n_vertices == 27
