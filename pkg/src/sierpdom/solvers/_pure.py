"""Pure Python solver kernels.

Reference implementations of the search kernels; ``_core.pyx`` mirrors them
statement for statement.  Both backends must return bit-identical results,
including node counts, so any change here must be ported there.

Shared conventions:

* Adjacency arrives as CSR buffers (indptr, indices).
* ``perfect`` selects the variant: 0 = Italian (zero vertex needs neighbor
  sum >= 2), 1 = perfect (needs exactly 2).
* Node accounting: the exhaustive kernel counts complete assignments
  (3**n of them); the search kernels count weight-assignment attempts.
* Witnesses are weight lists; ties always resolve to the lexicographically
  smallest weight vector in canonical (rank) vertex order.

Branch-and-bound pruning is sound for both variants:

* A zero-assigned vertex whose remaining unassigned neighbors cannot lift
  its sum to 2 kills the branch (final sum would stay below 2).
* Perfect only: a zero-assigned vertex with sum already above 2 kills the
  branch (sums never decrease), as does a fully assigned neighborhood with
  sum != 2.
* Cost pruning uses an admissible lower bound on the weight still needed:
  every vertex u with no positive weight and current assigned-neighbor sum
  s_u < 2 still needs 2 - s_u units of "coverage", where one future unit of
  weight placed anywhere covers at most deg <= maxdeg neighbors once each
  plus, if placed on such a vertex itself, retires that vertex's whole
  remaining need of at most 2.  Hence remaining cost >= ceil(phi / (maxdeg
  + 2)) with phi the summed residual needs.
"""

from __future__ import annotations

BACKEND_NAME = "pure-python"


def _has_violation(n, indptr, indices, perfect, w, s):
    for v in range(n):
        if w[v] == 0 and (s[v] != 2 if perfect else s[v] < 2):
            return True
    return False


def exhaustive(n, indptr, indices, perfect):
    """Scan all 3**n assignments in lexicographic order.

    Returns (best_weight, best_witness, nodes) with nodes == 3**n.
    """
    indptr = list(indptr)
    indices = list(indices)
    w = [0] * n
    s = [0] * n
    total = 0
    # All weights start at 0 with all sums 0: every vertex violates both
    # variants (0 < 2 and 0 != 2), except when the graph is empty.
    viol = n
    best = 2 * n + 1
    best_w = None
    nodes = 0
    perfect = bool(perfect)

    while True:
        nodes += 1
        if viol == 0 and total < best:
            best = total
            best_w = w.copy()
        # Odometer increment; the last position is the least significant,
        # so successive assignments are visited in lexicographic order.
        p = n - 1
        while p >= 0 and w[p] == 2:
            total, viol = _apply(indptr, indices, perfect, w, s, p, -2, total, viol)
            p -= 1
        if p < 0:
            break
        total, viol = _apply(indptr, indices, perfect, w, s, p, 1, total, viol)

    return best, best_w, nodes


def _apply(indptr, indices, perfect, w, s, v, delta, total, viol):
    # Change w[v] by delta, updating neighbor sums and the violation count.
    wv = w[v]
    sv = s[v]
    old_v = wv == 0 and (sv != 2 if perfect else sv < 2)
    w[v] = wv + delta
    total += delta
    for i in range(indptr[v], indptr[v + 1]):
        u = indices[i]
        wu = w[u]
        su = s[u]
        if wu == 0:
            old_u = su != 2 if perfect else su < 2
            su += delta
            new_u = su != 2 if perfect else su < 2
            viol += new_u - old_u
            s[u] = su
        else:
            s[u] = su + delta
    new_v = w[v] == 0 and (sv != 2 if perfect else sv < 2)
    viol += new_v - old_v
    return total, viol


class _Search:
    """Shared state for the DFS kernels (branch-and-bound, lex witness, enumeration)."""

    __slots__ = (
        "n", "indptr", "indices", "perfect", "maxdeg",
        "w", "s", "un", "total", "phi",
        "nodes", "budget", "aborted",
        "best", "best_w",
        "target", "found", "solutions", "cap", "capped",
    )

    def __init__(self, n, indptr, indices, perfect, budget):
        self.n = n
        self.indptr = list(indptr)
        self.indices = list(indices)
        self.perfect = bool(perfect)
        deg = [self.indptr[v + 1] - self.indptr[v] for v in range(n)]
        self.maxdeg = max(deg, default=0)
        self.w = [-1] * n          # -1 = unassigned
        self.s = [0] * n           # assigned-neighbor weight sum
        self.un = deg              # unassigned-neighbor count
        self.total = 0
        self.phi = 2 * n           # sum of residual needs (2 - s_u) over U
        self.nodes = 0
        self.budget = budget
        self.aborted = False
        self.best = 2 * n + 1
        self.best_w = None
        self.target = -1
        self.found = None
        self.solutions = None
        self.cap = 0
        self.capped = False

    # -- incremental state -------------------------------------------------

    def assign(self, v, c):
        w = self.w
        s = self.s
        un = self.un
        if c > 0 and s[v] < 2:
            self.phi -= 2 - s[v]
        w[v] = c
        self.total += c
        indices = self.indices
        for i in range(self.indptr[v], self.indptr[v + 1]):
            u = indices[i]
            if c and w[u] <= 0:
                su = s[u]
                if su < 2:
                    self.phi -= c if c < 2 - su else 2 - su
            s[u] += c
            un[u] -= 1

    def unassign(self, v, c):
        w = self.w
        s = self.s
        un = self.un
        indices = self.indices
        for i in range(self.indptr[v], self.indptr[v + 1]):
            u = indices[i]
            s[u] -= c
            un[u] += 1
            if c and w[u] <= 0:
                su = s[u]
                if su < 2:
                    self.phi += c if c < 2 - su else 2 - su
        w[v] = -1
        self.total -= c
        if c > 0 and s[v] < 2:
            self.phi += 2 - s[v]

    def _broken(self, u):
        # Only zero-assigned vertices can be (ir)recoverably broken.
        if self.w[u] != 0:
            return False
        su = self.s[u]
        if su + 2 * self.un[u] < 2:
            return True
        if self.perfect:
            if su > 2:
                return True
            if self.un[u] == 0 and su != 2:
                return True
        return False

    def feasible_after(self, v):
        if self._broken(v):
            return False
        indices = self.indices
        for i in range(self.indptr[v], self.indptr[v + 1]):
            if self._broken(indices[i]):
                return False
        return True

    def lower_bound(self):
        d = self.maxdeg + 2
        return (self.phi + d - 1) // d

    # -- phase 1: prove the optimum (degree-major assignment order) --------

    def run_bnb(self, order):
        self._bnb(order, 0)
        return self.best, self.best_w, self.nodes, self.aborted

    def _bnb(self, order, d):
        if d == self.n:
            # Feasibility pruning guarantees leaves are valid assignments.
            if self.total < self.best:
                self.best = self.total
                self.best_w = self.w.copy()
            return
        v = order[d]
        for c in (0, 1, 2):
            if self.nodes >= self.budget:
                self.aborted = True
                return
            self.nodes += 1
            self.assign(v, c)
            if self.feasible_after(v) and self.total + self.lower_bound() < self.best:
                self._bnb(order, d + 1)
            self.unassign(v, c)
            if self.aborted:
                return

    # -- phase 2: lexicographic witness / enumeration at an exact target ---

    def run_lex_witness(self, target):
        self.target = target
        self._lex(0)
        return self.found, self.nodes, self.aborted

    def _lex(self, v):
        if v == self.n:
            # total <= target throughout, and no valid assignment can weigh
            # less than the proven optimum, so total == target here.
            self.found = self.w.copy()
            return True
        for c in (0, 1, 2):
            if self.nodes >= self.budget:
                self.aborted = True
                return False
            self.nodes += 1
            self.assign(v, c)
            if (
                self.feasible_after(v)
                and self.total + self.lower_bound() <= self.target
                and self._lex(v + 1)
            ):
                self.unassign(v, c)
                return True
            self.unassign(v, c)
            if self.aborted:
                return False
        return False

    def run_enumerate(self, target, cap):
        self.target = target
        self.cap = cap
        self.solutions = []
        self._enum(0)
        return self.solutions, self.nodes, self.aborted, self.capped

    def _enum(self, v):
        if v == self.n:
            if self.total == self.target:
                self.solutions.append(self.w.copy())
                if len(self.solutions) >= self.cap:
                    self.capped = True
            return
        for c in (0, 1, 2):
            if self.nodes >= self.budget:
                self.aborted = True
                return
            self.nodes += 1
            self.assign(v, c)
            if self.feasible_after(v) and self.total + self.lower_bound() <= self.target:
                self._enum(v + 1)
            self.unassign(v, c)
            if self.aborted or self.capped:
                return


def branch_bound(n, indptr, indices, perfect, order, budget, seed_best, seed_witness):
    """DFS proof of the optimum; seed_best < 0 means no incumbent is seeded.

    Returns (best, witness, nodes, aborted); witness is None when nothing at
    all was established within the budget.
    """
    search = _Search(n, indptr, indices, perfect, budget)
    if seed_best >= 0:
        search.best = seed_best
        search.best_w = list(seed_witness) if seed_witness is not None else None
    best, best_w, nodes, aborted = search.run_bnb(list(order))
    if best > 2 * n:
        return -1, None, nodes, aborted
    return best, best_w, nodes, aborted


def lex_min_witness(n, indptr, indices, perfect, target, budget):
    """First (lexicographically least) valid assignment of weight exactly target.

    Only called with target equal to a proven optimum.
    Returns (witness_or_None, nodes, aborted).
    """
    search = _Search(n, indptr, indices, perfect, budget)
    return search.run_lex_witness(target)


def enumerate_exact(n, indptr, indices, perfect, target, cap, budget):
    """All valid assignments of weight exactly target, in lexicographic order.

    Returns (solutions, nodes, aborted, capped); the list is complete iff
    neither flag is set.
    """
    search = _Search(n, indptr, indices, perfect, budget)
    return search.run_enumerate(target, cap)
