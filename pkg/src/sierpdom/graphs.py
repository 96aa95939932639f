"""Sierpinski graphs S(K_n, t) and companion families (complete graphs, paths).

A vertex of S(K_n, t) is a word of length t over the alphabet {1, ..., n}.
Words are indexed by their rank under base-n positional encoding (letter k is
digit k-1), so rank order coincides with lexicographic word order.  Two
independent edge definitions are implemented: the recursive constructor used
in production (n copies of the previous level joined by one bridge edge per
alphabet pair) and the pairwise word rule ``adjacent_by_rule``, kept as a
test oracle.

Adjacency is stored in CSR form (flat ``array('i')`` buffers) so the exact
solvers can consume it without copying.  Graphs are immutable once built and
safe to share across threads.
"""

from __future__ import annotations

import os
from array import array
from collections import deque
from typing import Iterable, Sequence

from .errors import CapacityError, InvalidInputError

DEFAULT_MAX_VERTICES = 1_000_000
CAPACITY_ENV = "SIERPDOM_MAX_VERTICES"

Word = tuple[int, ...]


def max_vertices_limit() -> int:
    """Vertex capacity limit, overridable via the SIERPDOM_MAX_VERTICES env var."""
    raw = os.environ.get(CAPACITY_ENV, "")
    if not raw:
        return DEFAULT_MAX_VERTICES
    try:
        value = int(raw)
    except ValueError as exc:
        raise InvalidInputError(f"{CAPACITY_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise InvalidInputError(f"{CAPACITY_ENV} must be positive, got {value}")
    return value


# ---------------------------------------------------------------------------
# Word codec: rank <-> word bijection, labels
# ---------------------------------------------------------------------------

def _check_word(word: Sequence[int], n: int) -> None:
    if n < 1:
        raise InvalidInputError(f"alphabet size must be >= 1, got {n}")
    if len(word) < 1:
        raise InvalidInputError("word must have length >= 1")
    for letter in word:
        if not 1 <= letter <= n:
            raise InvalidInputError(f"letter {letter} outside alphabet 1..{n}")


def word_rank(word: Sequence[int], n: int) -> int:
    """Rank of a word under base-n encoding; inverse of :func:`rank_word`."""
    _check_word(word, n)
    rank = 0
    for letter in word:
        rank = rank * n + (letter - 1)
    return rank


def rank_word(rank: int, n: int, t: int) -> Word:
    """Word of length t with the given rank (0 .. n**t - 1)."""
    if n < 1 or t < 1:
        raise InvalidInputError(f"need n >= 1 and t >= 1, got n={n}, t={t}")
    if not 0 <= rank < n**t:
        raise InvalidInputError(f"rank {rank} outside 0..{n**t - 1}")
    letters = [0] * t
    for i in range(t - 1, -1, -1):
        rank, digit = divmod(rank, n)
        letters[i] = digit + 1
    return tuple(letters)


def word_label(word: Sequence[int], n: int) -> str:
    """Label string: concatenated digits for n <= 9, comma-separated otherwise."""
    _check_word(word, n)
    if n <= 9:
        return "".join(str(letter) for letter in word)
    return ",".join(str(letter) for letter in word)


def parse_label(label: str, n: int) -> Word:
    """Inverse of :func:`word_label`."""
    if n <= 9:
        word = tuple(int(ch) for ch in label)
    else:
        word = tuple(int(part) for part in label.split(","))
    _check_word(word, n)
    return word


# ---------------------------------------------------------------------------
# The word adjacency rule (test oracle)
# ---------------------------------------------------------------------------

def adjacent_by_rule(u: Sequence[int], v: Sequence[int], n: int) -> bool:
    """Word rule for S(K_n, t) edges.

    u and v are adjacent iff at the first position i where they differ,
    every later letter of u equals v_i and every later letter of v equals
    u_i.  Symmetric, and false for u == v.
    """
    _check_word(u, n)
    _check_word(v, n)
    if len(u) != len(v):
        raise InvalidInputError(f"word lengths differ: {len(u)} vs {len(v)}")
    t = len(u)
    i = 0
    while i < t and u[i] == v[i]:
        i += 1
    if i == t:
        return False
    ui, vi = u[i], v[i]
    for j in range(i + 1, t):
        if u[j] != vi or v[j] != ui:
            return False
    return True


# ---------------------------------------------------------------------------
# Graph containers
# ---------------------------------------------------------------------------

class Graph:
    """Immutable undirected graph with CSR adjacency and optional labels."""

    family = "custom"

    __slots__ = ("_indptr", "_indices", "_labels")

    def __init__(self, indptr: array, indices: array, labels: tuple[str, ...] | None = None):
        self._indptr = indptr
        self._indices = indices
        self._labels = labels

    @property
    def n_vertices(self) -> int:
        return len(self._indptr) - 1

    @property
    def n_edges(self) -> int:
        return len(self._indices) // 2

    def csr(self) -> tuple[array, array]:
        """(indptr, indices) buffers; treat as read-only."""
        return self._indptr, self._indices

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self._indices[self._indptr[v]:self._indptr[v + 1]])

    def degree(self, v: int) -> int:
        return self._indptr[v + 1] - self._indptr[v]

    def max_degree(self) -> int:
        n = self.n_vertices
        return max((self.degree(v) for v in range(n)), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as (u, v) pairs with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n_vertices):
            for v in self.neighbors(u):
                if v > u:
                    out.append((u, v))
        return out

    def label(self, v: int) -> str:
        if self._labels is not None:
            return self._labels[v]
        return str(v + 1)

    def labels(self) -> list[str]:
        return [self.label(v) for v in range(self.n_vertices)]

    def is_connected(self) -> bool:
        n = self.n_vertices
        if n <= 1:
            return True
        seen = bytearray(n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self.neighbors(u):
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    queue.append(v)
        return count == n

    def __repr__(self) -> str:
        return f"<{type(self).__name__} family={self.family} |V|={self.n_vertices} |E|={self.n_edges}>"


class SierpinskiGraph(Graph):
    """S(K_n, t): n**t word vertices in rank order."""

    family = "sierpinski"

    __slots__ = ("n", "t")

    def __init__(self, n: int, t: int, indptr: array, indices: array):
        super().__init__(indptr, indices, labels=None)
        self.n = n
        self.t = t

    def word(self, v: int) -> Word:
        return rank_word(v, self.n, self.t)

    def rank(self, word: Sequence[int]) -> int:
        if len(word) != self.t:
            raise InvalidInputError(f"word length {len(word)} != t={self.t}")
        return word_rank(word, self.n)

    def label(self, v: int) -> str:
        return word_label(self.word(v), self.n)


def _adj_to_csr(adj: Sequence[Iterable[int]]) -> tuple[array, array]:
    indptr = array("i", [0])
    indices = array("i")
    total = 0
    for nbrs in adj:
        nbrs = sorted(nbrs)
        indices.extend(nbrs)
        total += len(nbrs)
        indptr.append(total)
    return indptr, indices


def build_from_edges(
    n_vertices: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
    family: str = "custom",
) -> Graph:
    """Undirected loop-free graph from an edge list over vertices 0..n-1."""
    if n_vertices < 0:
        raise InvalidInputError(f"vertex count must be >= 0, got {n_vertices}")
    seen: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n_vertices)]
    for u, v in edges:
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise InvalidInputError(f"edge ({u},{v}) outside 0..{n_vertices - 1}")
        if u == v:
            raise InvalidInputError(f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    if labels is not None:
        if len(labels) != n_vertices:
            raise InvalidInputError("label count does not match vertex count")
        if len(set(labels)) != n_vertices:
            raise InvalidInputError("labels must be unique")
        labels = tuple(labels)
    indptr, indices = _adj_to_csr(adj)
    graph = Graph(indptr, indices, labels)
    return _with_family(graph, family)


def build_complete(n: int) -> Graph:
    """K_n with vertices labeled "1" .. "n"."""
    if n < 1:
        raise InvalidInputError(f"complete graph needs n >= 1, got {n}")
    _check_capacity(n)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return build_from_edges(n, edges, labels=[str(i + 1) for i in range(n)], family="complete")


def build_path(m: int) -> Graph:
    """P_m with vertices labeled "1" .. "m" in line order."""
    if m < 1:
        raise InvalidInputError(f"path needs m >= 1, got {m}")
    _check_capacity(m)
    edges = [(i, i + 1) for i in range(m - 1)]
    return build_from_edges(m, edges, labels=[str(i + 1) for i in range(m)], family="path")


class _FamilyGraph(Graph):
    __slots__ = ("_family",)

    def __init__(self, indptr, indices, labels, family):
        super().__init__(indptr, indices, labels)
        self._family = family

    @property
    def family(self) -> str:  # type: ignore[override]
        return self._family


def _with_family(g: Graph, family: str) -> Graph:
    if family == "custom":
        return g
    indptr, indices = g.csr()
    return _FamilyGraph(indptr, indices, tuple(g.labels()), family)


def _check_capacity(n_vertices: int, limit: int | None = None) -> None:
    cap = max_vertices_limit() if limit is None else limit
    if n_vertices > cap:
        raise CapacityError(
            f"instance has {n_vertices} vertices, exceeding the limit of {cap}"
            f" (raise {CAPACITY_ENV} to override)"
        )


def build_sierpinski(n: int, t: int, max_vertices: int | None = None) -> SierpinskiGraph:
    """S(K_n, t) via the recursive construction.

    Level 1 is K_n.  Each further level takes n prefixed copies of the
    previous level and adds one bridge edge per alphabet pair {x, y},
    joining the copy-x vertex x y...y to the copy-y vertex y x...x.
    """
    if n < 2:
        raise InvalidInputError(f"alphabet size must be >= 2, got {n}")
    if t < 1:
        raise InvalidInputError(f"level must be >= 1, got {t}")
    _check_capacity(n**t, max_vertices)

    adj: list[list[int]] = [[j for j in range(n) if j != i] for i in range(n)]
    size = n
    for _ in range(2, t + 1):
        new_adj: list[list[int]] = [None] * (size * n)  # type: ignore[list-item]
        for x in range(n):
            off = x * size
            for v in range(size):
                nbrs = adj[v]
                new_adj[off + v] = [off + u for u in nbrs]
        # Extreme vertex y...y of the previous level has rank y * unit.
        unit = (size - 1) // (n - 1)
        for x in range(n):
            for y in range(x + 1, n):
                u = x * size + y * unit
                v = y * size + x * unit
                new_adj[u].append(v)
                new_adj[v].append(u)
        adj = new_adj
        size *= n

    indptr, indices = _adj_to_csr(adj)
    return SierpinskiGraph(n, t, indptr, indices)


def extreme_vertices(g: SierpinskiGraph) -> list[Word]:
    """The n constant words u...u, in alphabet order."""
    return [(c,) * g.t for c in range(1, g.n + 1)]


def extreme_ranks(g: SierpinskiGraph) -> list[int]:
    unit = (g.n**g.t - 1) // (g.n - 1)
    return [c * unit for c in range(g.n)]
