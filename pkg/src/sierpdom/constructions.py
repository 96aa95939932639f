"""Explicit optimal dominating functions and closed-form domination numbers.

Four parameter regimes cover every (n, t) with n >= 2, t >= 1:

====================  =====================  ==========================
regime                applies to             closed form (both variants)
====================  =====================  ==========================
path                  n = 2 (S(K_2,t)=P_2^t) ceil((2**t + 1) / 2)
kn                    t = 1, n >= 3          2
level2                t = 2, n >= 3          2n - 1
level3plus            t >= 3, n >= 3         n**(t-2) * (2n - 2)
====================  =====================  ==========================

Every constructed function is a perfect Italian dominating function, so the
Italian and perfect closed forms coincide on these families.  Constructors
self-verify through the domination module before returning; a failure there
is an internal error, never a silent bad return.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .domination import verify_pid
from .errors import InvalidInputError, OutOfRegimeError, SelfCheckError
from .graphs import Graph, build_complete, build_path, build_sierpinski, word_rank


class Regime(enum.Enum):
    KN = "kn"
    LEVEL2 = "level2"
    LEVEL3PLUS = "level3plus"
    PATH = "path"


def regime_for(n: int, t: int) -> Regime:
    """The unique regime for (n, t); the path regime wins whenever n = 2."""
    if n < 2 or t < 1:
        raise InvalidInputError(f"need n >= 2 and t >= 1, got n={n}, t={t}")
    if n == 2:
        return Regime.PATH
    if t == 1:
        return Regime.KN
    if t == 2:
        return Regime.LEVEL2
    return Regime.LEVEL3PLUS


def closed_form_italian(n: int, t: int) -> int:
    """Exact Italian domination number of S(K_n, t)."""
    regime = regime_for(n, t)
    if regime is Regime.PATH:
        return (2**t + 2) // 2  # ceil((2**t + 1) / 2)
    if regime is Regime.KN:
        return 2
    if regime is Regime.LEVEL2:
        return 2 * n - 1
    return n ** (t - 2) * (2 * n - 2)


def closed_form_perfect(n: int, t: int) -> int:
    """Exact perfect Italian domination number of S(K_n, t).

    Coincides with the Italian value in every regime: each regime's witness
    below is a perfect function of the same weight.
    """
    return closed_form_italian(n, t)


# ---------------------------------------------------------------------------
# Weight patterns
# ---------------------------------------------------------------------------

def _cyclic_pred(c: int, n: int) -> int:
    return (c - 2) % n + 1


def _cyclic_succ(c: int, n: int) -> int:
    return c % n + 1


def _path_pattern(m: int) -> list[int]:
    # Weight 1 on odd line positions; even m additionally marks the last vertex.
    weights = [1 if i % 2 == 0 else 0 for i in range(m)]
    if m % 2 == 0:
        weights[m - 1] = 1
    return weights


def _kn_pattern(n: int) -> list[int]:
    if n == 1:
        return [1]
    return [2] + [0] * (n - 1)


def _level2_pattern(n: int) -> list[int]:
    # Weight 1 on every word (i, i) and every word (i, 1); the overlap (1, 1)
    # is counted once, leaving 2n - 1 marked vertices.
    weights = [0] * (n * n)
    for i in range(1, n + 1):
        weights[word_rank((i, i), n)] = 1
        weights[word_rank((i, 1), n)] = 1
    return weights


def _level3plus_weight(x: int, y: int, z: int, n: int) -> int:
    # Depends only on the last three letters (x, y, z) of the word: 1 when
    # z is the cyclic predecessor of x, or z is the cyclic successor of x
    # and y is neither neighbor of x on the cycle.
    if z == _cyclic_pred(x, n):
        return 1
    if z == _cyclic_succ(x, n) and y != _cyclic_pred(x, n) and y != _cyclic_succ(x, n):
        return 1
    return 0


def _level3plus_pattern(n: int, t: int) -> list[int]:
    weights = []
    for word in itertools.product(range(1, n + 1), repeat=t):
        x, y, z = word[-3:]
        weights.append(_level3plus_weight(x, y, z, n))
    return weights


# ---------------------------------------------------------------------------
# Public constructors (each self-verifies as a perfect function)
# ---------------------------------------------------------------------------

def _self_check(g: Graph, weights: list[int], expected: int, what: str) -> list[int]:
    report = verify_pid(g, weights)
    if not report.valid:
        raise SelfCheckError(f"{what}: constructed function fails perfect verification")
    if report.total_weight != expected:
        raise SelfCheckError(
            f"{what}: constructed weight {report.total_weight} != expected {expected}"
        )
    return weights


def construct_path(m: int) -> list[int]:
    """Perfect function on P_m of weight ceil((m + 1) / 2)."""
    if m < 1:
        raise InvalidInputError(f"path needs m >= 1, got {m}")
    weights = _path_pattern(m)
    return _self_check(build_path(m), weights, (m + 2) // 2, f"construct_path({m})")


def construct_kn(n: int) -> list[int]:
    """Perfect function on K_n: weight 2 on one vertex (weight 1 for K_1)."""
    if n < 1:
        raise InvalidInputError(f"complete graph needs n >= 1, got {n}")
    weights = _kn_pattern(n)
    expected = 1 if n == 1 else 2
    return _self_check(build_complete(n), weights, expected, f"construct_kn({n})")


def construct_level2(n: int) -> list[int]:
    """Perfect function on S(K_n, 2) of weight 2n - 1, for n >= 3."""
    if n < 3:
        raise OutOfRegimeError(f"level-2 construction needs n >= 3, got {n}")
    weights = _level2_pattern(n)
    return _self_check(build_sierpinski(n, 2), weights, 2 * n - 1, f"construct_level2({n})")


def construct_level3plus(n: int, t: int) -> list[int]:
    """Perfect function on S(K_n, t) of weight n**(t-2) * (2n - 2), for n, t >= 3.

    The level-3 pattern is applied to the last three letters of every word,
    which tiles every level-3 block identically.  Bridge vertices between
    blocks end in three equal letters and carry weight 0, so block validity
    lifts to the whole graph; the verifier re-checks that here at runtime.
    """
    if n < 3 or t < 3:
        raise OutOfRegimeError(f"level-3+ construction needs n >= 3 and t >= 3, got ({n}, {t})")
    weights = _level3plus_pattern(n, t)
    expected = n ** (t - 2) * (2 * n - 2)
    return _self_check(
        build_sierpinski(n, t), weights, expected, f"construct_level3plus({n}, {t})"
    )


@dataclass(frozen=True)
class Construction:
    graph: Graph
    weights: list[int]
    regime: Regime
    closed_form: int


def construct(n: int, t: int) -> Construction:
    """Build S(K_n, t) together with its optimal perfect function."""
    regime = regime_for(n, t)
    graph: Graph
    if regime is Regime.PATH:
        graph = build_sierpinski(2, t)
        # Rank order on S(K_2, t) is exactly line order on P_{2**t}.
        weights = _path_pattern(2**t)
    elif regime is Regime.KN:
        graph = build_sierpinski(n, 1)
        weights = _kn_pattern(n)
    elif regime is Regime.LEVEL2:
        graph = build_sierpinski(n, 2)
        weights = _level2_pattern(n)
    else:
        graph = build_sierpinski(n, t)
        weights = _level3plus_pattern(n, t)
    value = closed_form_italian(n, t)
    _self_check(graph, weights, value, f"construct({n}, {t})")
    return Construction(graph, weights, regime, value)
