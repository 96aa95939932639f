"""Exact solvers for the Italian and perfect Italian domination numbers.

Three independent engines:

* ``solve_exhaustive`` scans all 3**|V| weight assignments (desk-scale
  oracle, vertex count capped by ``SearchConfig.exhaustive_limit``).
* ``solve_path_dp`` solves paths by dynamic programming over line order.
* ``solve_branch_bound`` proves optima by depth-first search with sound
  feasibility pruning and an admissible lower bound; budget exhaustion
  yields a best-found result flagged unproven instead of an error.

All engines break ties identically (lexicographically smallest weight
vector in canonical vertex order), so agreeing engines return identical
witnesses, and every witness is re-verified before being returned.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Sequence

from ..domination import ITALIAN, PERFECT, check_variant, check_weights, verify
from ..errors import CapacityError, InvalidInputError, SelfCheckError
from ..graphs import Graph, build_path
from ._backend import backend_name, kernels

ENGINE_EXHAUSTIVE = "exhaustive"
ENGINE_PATH_DP = "path-dp"
ENGINE_BRANCH_BOUND = "branch-bound"

# Recursion-based DFS kernels are desk-scale tools; refuse absurd instances
# before they can exhaust the C or Python stack.
_MAX_SEARCH_VERTICES = 4096

_INF = float("inf")


@dataclass
class SearchConfig:
    """Engine limits; defaults suit interactive desk-scale use."""

    exhaustive_limit: int = 16
    node_budget: int = 50_000_000
    weight_cutoff: int | None = None
    max_solutions: int = 1000

    def __post_init__(self) -> None:
        if self.exhaustive_limit < 1:
            raise InvalidInputError("exhaustive_limit must be positive")
        if self.node_budget < 1:
            raise InvalidInputError("node_budget must be positive")
        if self.weight_cutoff is not None and self.weight_cutoff < 0:
            raise InvalidInputError("weight_cutoff must be non-negative")
        if self.max_solutions < 1:
            raise InvalidInputError("max_solutions must be positive")


@dataclass(frozen=True)
class SolveResult:
    variant: str
    engine: str
    optimum: int | None
    proven: bool
    nodes_explored: int
    witness: list[int] | None

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "engine": self.engine,
            "optimum": self.optimum,
            "proven": self.proven,
            "nodes_explored": self.nodes_explored,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class EnumerationResult:
    variant: str
    optimum: int
    optima: list[list[int]]
    complete: bool
    nodes_explored: int


def _checked(g: Graph, variant: str, witness: list[int] | None) -> None:
    # Unconditional self-check: a returned witness must satisfy its verifier.
    if witness is None:
        return
    if not verify(g, witness, variant).valid:
        raise SelfCheckError(f"solver produced an invalid {variant} witness")


def _guard_search_size(g: Graph) -> None:
    if g.n_vertices > _MAX_SEARCH_VERTICES:
        raise CapacityError(
            f"search engines handle at most {_MAX_SEARCH_VERTICES} vertices, got {g.n_vertices}"
        )
    # Pure-Python kernels recurse one frame per vertex.
    need = 2 * g.n_vertices + 500
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def _degree_order(g: Graph) -> list[int]:
    # Descending degree, rank as tie-break: high-degree vertices constrain
    # the most neighbor sums, and the tie-break keeps runs reproducible.
    return sorted(range(g.n_vertices), key=lambda v: (-g.degree(v), v))


def solve_exhaustive(g: Graph, variant: str, config: SearchConfig | None = None) -> SolveResult:
    """Minimum-weight valid function by full enumeration of 3**|V| assignments."""
    check_variant(variant)
    config = config or SearchConfig()
    n = g.n_vertices
    if n > config.exhaustive_limit:
        raise CapacityError(
            f"exhaustive enumeration limited to {config.exhaustive_limit} vertices, got {n}"
        )
    indptr, indices = g.csr()
    best, witness, nodes = kernels.exhaustive(n, indptr, indices, int(variant == PERFECT))
    if config.weight_cutoff is not None and best > config.weight_cutoff:
        best, witness = None, None
    else:
        witness = list(witness)
    _checked(g, variant, witness)
    return SolveResult(variant, ENGINE_EXHAUSTIVE, best, True, nodes, witness)


def solve_branch_bound(
    g: Graph,
    variant: str,
    config: SearchConfig | None = None,
    incumbent: Sequence[int] | None = None,
) -> SolveResult:
    """Prove the optimum by branch-and-bound; never errors on budget exhaustion.

    ``incumbent`` optionally seeds the search with a known valid function;
    seeding can only sharpen pruning, never worsen the result.
    """
    check_variant(variant)
    config = config or SearchConfig()
    _guard_search_size(g)
    n = g.n_vertices
    indptr, indices = g.csr()
    perfect = int(variant == PERFECT)

    seed_best = -1
    seed_witness = None
    if incumbent is not None:
        check_weights(g, incumbent)
        if not verify(g, incumbent, variant).valid:
            raise InvalidInputError(f"incumbent is not a valid {variant} function")
        seed_witness = list(incumbent)
        seed_best = sum(seed_witness)
    if config.weight_cutoff is not None and (seed_best < 0 or config.weight_cutoff + 1 < seed_best):
        seed_best = config.weight_cutoff + 1
        seed_witness = None

    order = _degree_order(g)
    best, witness, nodes, aborted = kernels.branch_bound(
        n, indptr, indices, perfect, order, config.node_budget, seed_best, seed_witness
    )
    proven = not aborted
    if best < 0 or (config.weight_cutoff is not None and best > config.weight_cutoff):
        # Nothing found (at or below the cutoff); proven means the absence
        # of anything cheaper is certain, not that a value was produced.
        return SolveResult(variant, ENGINE_BRANCH_BOUND, None, proven, nodes, None)
    witness = list(witness) if witness is not None else None

    # Canonicalize the witness: re-search in rank order for the
    # lexicographically least optimal vector.  Skipped when unproven or out
    # of budget; the phase-1 witness (still valid) is returned instead.
    if proven:
        remaining = config.node_budget - nodes
        if remaining > 0:
            lex_witness, lex_nodes, lex_aborted = kernels.lex_min_witness(
                n, indptr, indices, perfect, best, remaining
            )
            nodes += lex_nodes
            if not lex_aborted and lex_witness is not None:
                witness = list(lex_witness)

    _checked(g, variant, witness)
    return SolveResult(variant, ENGINE_BRANCH_BOUND, best, proven, nodes, witness)


def enumerate_optima(
    g: Graph,
    variant: str,
    config: SearchConfig | None = None,
    optimum: int | None = None,
) -> EnumerationResult:
    """All optimal functions in lexicographic order, up to the solution cap.

    The optimum is proven first (exhaustively for small graphs, otherwise by
    branch-and-bound) unless supplied.  A budget- or cap-truncated list is
    flagged ``complete=False``.
    """
    check_variant(variant)
    config = config or SearchConfig()
    _guard_search_size(g)
    if optimum is None:
        if g.n_vertices <= config.exhaustive_limit:
            base = solve_exhaustive(g, variant, config)
        else:
            base = solve_branch_bound(g, variant, config)
        if not base.proven or base.optimum is None:
            raise CapacityError("optimum not provable within budget; cannot enumerate optima")
        optimum = base.optimum
    indptr, indices = g.csr()
    solutions, nodes, aborted, capped = kernels.enumerate_exact(
        g.n_vertices,
        indptr,
        indices,
        int(variant == PERFECT),
        optimum,
        config.max_solutions,
        config.node_budget,
    )
    solutions = [list(s) for s in solutions]
    for s in solutions:
        _checked(g, variant, s)
        if sum(s) != optimum:
            raise SelfCheckError("enumerated function misses the target weight")
    return EnumerationResult(variant, optimum, solutions, not (aborted or capped), nodes)


# ---------------------------------------------------------------------------
# Path dynamic program
# ---------------------------------------------------------------------------

_NO_NEIGHBOR = 3  # placeholder weight for a missing left neighbor


def _path_ok(perfect: bool, left: int, right: int) -> bool:
    s = (left if left != _NO_NEIGHBOR else 0) + (right if right != _NO_NEIGHBOR else 0)
    return s == 2 if perfect else s >= 2


def solve_path_dp(m: int, variant: str) -> SolveResult:
    """Optimal function on P_m by a left-to-right dynamic program.

    DP state is (weight of previous vertex, weight of current vertex); a
    vertex's condition is settled once both its line neighbors are decided.
    The witness is reconstructed greedily from the suffix table, yielding
    the lexicographically least optimal vector.
    """
    check_variant(variant)
    if m < 1:
        raise InvalidInputError(f"path needs m >= 1, got {m}")
    perfect = variant == PERFECT
    nodes = 0

    # suffix[i][(a, b)] = least weight of w_i..w_{m-1} such that vertices
    # i..m-1 all satisfy the condition, given w_{i-1} = a and w_i = b.
    lefts = (0, 1, 2, _NO_NEIGHBOR)
    weights = (0, 1, 2)
    suffix: list[dict[tuple[int, int], float]] = [dict() for _ in range(m)]
    for a in lefts:
        for b in weights:
            nodes += 1
            ok = b != 0 or _path_ok(perfect, a, _NO_NEIGHBOR)
            suffix[m - 1][(a, b)] = b if ok else _INF
    for i in range(m - 2, -1, -1):
        for a in lefts:
            for b in weights:
                best = _INF
                for c in weights:
                    nodes += 1
                    if b == 0 and not _path_ok(perfect, a, c):
                        continue
                    cand = suffix[i + 1][(b, c)]
                    if cand < best:
                        best = cand
                suffix[i][(a, b)] = b + best

    optimum = min(suffix[0][(_NO_NEIGHBOR, b)] for b in weights)
    if optimum == _INF:  # unreachable: the all-ones vector is always valid
        raise SelfCheckError("path DP found no valid assignment")

    # Greedy forward reconstruction: at each position take the least weight
    # that still completes to exactly the remaining optimum.
    a = _NO_NEIGHBOR
    b = next(c for c in weights if suffix[0][(_NO_NEIGHBOR, c)] == optimum)
    witness = [b]
    remaining = optimum
    for i in range(m - 1):
        remaining -= b
        for c in weights:
            if b == 0 and not _path_ok(perfect, a, c):
                continue
            if suffix[i + 1][(b, c)] == remaining:
                a, b = b, c
                witness.append(c)
                break
        else:
            raise SelfCheckError("path DP reconstruction lost the optimum")

    _checked(build_path(m), variant, witness)
    return SolveResult(variant, ENGINE_PATH_DP, int(optimum), True, nodes, witness)
