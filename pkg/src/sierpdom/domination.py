"""Weight functions f: V -> {0, 1, 2} and the two domination verifiers.

An Italian dominating function requires every zero-weight vertex to see
open-neighborhood weight at least 2; the perfect variant requires that sum
to be exactly 2.  A vertex's own weight never counts toward its sum.
Verifiers report every violating vertex rather than failing fast, so the
reports double as CLI diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInputError
from .graphs import Graph

ITALIAN = "italian"
PERFECT = "perfect"
VARIANTS = (ITALIAN, PERFECT)

DEFICIT = "deficit"
INEXACT = "inexact"


def check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise InvalidInputError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    return variant


@dataclass(frozen=True)
class Violation:
    """A zero-weight vertex whose neighbor-weight sum breaks the condition."""

    vertex: int
    neighbor_sum: int
    kind: str  # DEFICIT (sum < 2) or INEXACT (sum > 2, perfect variant only)


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    violations: tuple[Violation, ...]
    total_weight: int

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "total_weight": self.total_weight,
            "violations": [
                {"vertex": v.vertex, "neighbor_sum": v.neighbor_sum, "kind": v.kind}
                for v in self.violations
            ],
        }


def check_weights(g: Graph, weights: Sequence[int]) -> None:
    """Validate that weights is a total {0,1,2} assignment sized to g."""
    if len(weights) != g.n_vertices:
        raise InvalidInputError(
            f"weight vector has {len(weights)} entries for a graph on {g.n_vertices} vertices"
        )
    for v, w in enumerate(weights):
        if w not in (0, 1, 2):
            raise InvalidInputError(f"weight {w!r} at vertex {v} is not in {{0, 1, 2}}")


def total_weight(weights: Sequence[int]) -> int:
    return sum(weights)


def neighbor_sums(g: Graph, weights: Sequence[int]) -> list[int]:
    """Open-neighborhood weight sum for every vertex."""
    indptr, indices = g.csr()
    sums = [0] * g.n_vertices
    for v in range(g.n_vertices):
        s = 0
        for i in range(indptr[v], indptr[v + 1]):
            s += weights[indices[i]]
        sums[v] = s
    return sums


def _verify(g: Graph, weights: Sequence[int], perfect: bool) -> VerificationReport:
    check_weights(g, weights)
    sums = neighbor_sums(g, weights)
    violations = []
    for v, w in enumerate(weights):
        if w != 0:
            continue
        s = sums[v]
        if s < 2:
            violations.append(Violation(v, s, DEFICIT))
        elif perfect and s > 2:
            violations.append(Violation(v, s, INEXACT))
    return VerificationReport(
        valid=not violations,
        violations=tuple(violations),
        total_weight=total_weight(weights),
    )


def verify_idf(g: Graph, weights: Sequence[int]) -> VerificationReport:
    """Check the Italian condition: every zero vertex has neighbor sum >= 2."""
    return _verify(g, weights, perfect=False)


def verify_pid(g: Graph, weights: Sequence[int]) -> VerificationReport:
    """Check the perfect condition: every zero vertex has neighbor sum == 2."""
    return _verify(g, weights, perfect=True)


def verify(g: Graph, weights: Sequence[int], variant: str) -> VerificationReport:
    check_variant(variant)
    return verify_pid(g, weights) if variant == PERFECT else verify_idf(g, weights)
