"""Benchmark the pure-Python solver kernels against the compiled extension.

Both backends are driven with identical prepared inputs, so the timings
isolate kernel speed from graph construction and facade overhead.  Node
counts must match exactly between backends; a mismatch aborts the run.

Usage:
    python3 benchmarks/bench_solvers.py [--repeat N] [--heavy]
"""

import argparse
import sys
import time

from sierpdom import build_path, build_sierpinski
from sierpdom.solvers import _pure
from sierpdom.solvers._backend import backend_name

try:
    from sierpdom.solvers import _core
except ImportError:
    _core = None

NO_SEED = -1
BUDGET = 50_000_000


def prepared(g):
    indptr, indices = g.csr()
    order = sorted(range(g.n_vertices), key=lambda v: (-g.degree(v), v))
    return g.n_vertices, indptr, indices, order


def case_exhaustive(g, perfect):
    n, indptr, indices, _ = prepared(g)

    def run(kernel):
        best, _, nodes = kernel.exhaustive(n, indptr, indices, perfect)
        return best, nodes

    return run


def case_branch_bound(g, perfect):
    n, indptr, indices, order = prepared(g)

    def run(kernel):
        best, _, nodes, aborted = kernel.branch_bound(
            n, indptr, indices, perfect, order, BUDGET, NO_SEED, None
        )
        assert not aborted
        return best, nodes

    return run


def case_enumerate(g, perfect, target):
    n, indptr, indices, _ = prepared(g)

    def run(kernel):
        solutions, nodes, aborted, capped = kernel.enumerate_exact(
            n, indptr, indices, perfect, target, 1000, BUDGET
        )
        assert not (aborted or capped)
        return len(solutions), nodes

    return run


def build_cases(heavy):
    cases = [
        ("exhaustive  S(K_3,2) italian", case_exhaustive(build_sierpinski(3, 2), 0)),
        ("exhaustive  P_12 perfect", case_exhaustive(build_path(12), 1)),
        ("branch-bound S(K_4,2) italian", case_branch_bound(build_sierpinski(4, 2), 0)),
        ("branch-bound S(K_3,3) italian", case_branch_bound(build_sierpinski(3, 3), 0)),
        ("branch-bound S(K_3,3) perfect", case_branch_bound(build_sierpinski(3, 3), 1)),
        ("branch-bound S(K_5,2) italian", case_branch_bound(build_sierpinski(5, 2), 0)),
        ("enumerate   S(K_3,3) italian@12", case_enumerate(build_sierpinski(3, 3), 0, 12)),
    ]
    if heavy:
        # 3^16 assignments; roughly a minute in pure Python.
        cases.append(
            ("exhaustive  S(K_4,2) italian", case_exhaustive(build_sierpinski(4, 2), 0))
        )
    return cases


def best_time(run, kernel, repeat):
    best = None
    value = None
    for _ in range(repeat):
        start = time.perf_counter()
        value = run(kernel)
        took = time.perf_counter() - start
        best = took if best is None else min(best, took)
    return best, value


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="runs per case, best kept")
    parser.add_argument(
        "--heavy", action="store_true", help="include the 3^16 exhaustive case"
    )
    args = parser.parse_args(argv)

    print(f"active backend: {backend_name()}")
    if _core is None:
        print("compiled kernels unavailable; timing the pure-Python kernels only\n")
    header = f"{'case':<34}{'pure':>10}{'compiled':>10}{'speedup':>9}  result/nodes"
    print(header)
    print("-" * len(header))

    for name, run in build_cases(args.heavy):
        pure_t, pure_v = best_time(run, _pure, args.repeat)
        if _core is None:
            print(f"{name:<34}{pure_t:>9.3f}s{'-':>10}{'-':>9}  {pure_v[0]}/{pure_v[1]}")
            continue
        core_t, core_v = best_time(run, _core, args.repeat)
        if core_v != pure_v:
            print(f"backend mismatch on {name}: {pure_v} vs {core_v}", file=sys.stderr)
            return 1
        speedup = pure_t / core_t if core_t > 0 else float("inf")
        print(
            f"{name:<34}{pure_t:>9.3f}s{core_t:>9.3f}s{speedup:>8.1f}x"
            f"  {pure_v[0]}/{pure_v[1]}"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
