# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled solver kernels.

Statement-for-statement mirror of ``_pure.py``; see that module for the
shared conventions and the soundness notes on the pruning rules.  Both
backends must return bit-identical results, including node counts, so any
change here must be ported there.
"""

from cpython cimport array

import array

BACKEND_NAME = "compiled"

cdef array.array _INT_TEMPLATE = array.array("i", [])


cdef inline void _apply(int[:] indptr, int[:] indices, bint perfect,
                        int[:] w, int[:] s, int v, int delta,
                        int* total, int* viol) noexcept:
    # Change w[v] by delta, updating neighbor sums and the violation count.
    cdef int wv = w[v]
    cdef int sv = s[v]
    cdef bint old_v = wv == 0 and ((sv != 2) if perfect else (sv < 2))
    cdef int i, u, wu, su
    cdef bint old_u, new_u
    w[v] = wv + delta
    total[0] += delta
    for i in range(indptr[v], indptr[v + 1]):
        u = indices[i]
        wu = w[u]
        su = s[u]
        if wu == 0:
            old_u = (su != 2) if perfect else (su < 2)
            su += delta
            new_u = (su != 2) if perfect else (su < 2)
            viol[0] += (<int> new_u) - (<int> old_u)
            s[u] = su
        else:
            s[u] = su + delta
    cdef bint new_v = w[v] == 0 and ((sv != 2) if perfect else (sv < 2))
    viol[0] += (<int> new_v) - (<int> old_v)


def exhaustive(n_arg, indptr_arg, indices_arg, perfect_arg):
    """Scan all 3**n assignments in lexicographic order.

    Returns (best_weight, best_witness, nodes) with nodes == 3**n.
    """
    cdef int n = n_arg
    cdef bint perfect = bool(perfect_arg)
    cdef array.array indptr_a = array.array("i", indptr_arg)
    cdef array.array indices_a = array.array("i", indices_arg)
    cdef array.array w_a = array.clone(_INT_TEMPLATE, n, zero=True)
    cdef array.array s_a = array.clone(_INT_TEMPLATE, n, zero=True)
    cdef int[:] indptr = indptr_a
    cdef int[:] indices = indices_a
    cdef int[:] w = w_a
    cdef int[:] s = s_a
    cdef int total = 0
    cdef int viol = n
    cdef int best = 2 * n + 1
    cdef long long nodes = 0
    cdef int p
    best_w = None

    while True:
        nodes += 1
        if viol == 0 and total < best:
            best = total
            best_w = list(w_a)
        p = n - 1
        while p >= 0 and w[p] == 2:
            _apply(indptr, indices, perfect, w, s, p, -2, &total, &viol)
            p -= 1
        if p < 0:
            break
        _apply(indptr, indices, perfect, w, s, p, 1, &total, &viol)

    return best, best_w, nodes


cdef class _Search:
    """Shared state for the DFS kernels (branch-and-bound, lex witness, enumeration)."""

    cdef array.array indptr_a, indices_a, w_a, s_a, un_a
    cdef int[:] indptr, indices, w, s, un
    cdef int n, maxdeg, total, phi
    cdef bint perfect, aborted, capped
    cdef long long nodes, budget
    cdef int best, target, cap
    cdef object best_w, found, solutions

    def __init__(self, n, indptr, indices, perfect, budget):
        cdef int v, d
        self.n = n
        self.indptr_a = array.array("i", indptr)
        self.indices_a = array.array("i", indices)
        self.indptr = self.indptr_a
        self.indices = self.indices_a
        self.perfect = bool(perfect)
        self.w_a = array.clone(_INT_TEMPLATE, n, zero=True)
        self.s_a = array.clone(_INT_TEMPLATE, n, zero=True)
        self.un_a = array.clone(_INT_TEMPLATE, n, zero=True)
        self.w = self.w_a
        self.s = self.s_a
        self.un = self.un_a
        self.maxdeg = 0
        for v in range(n):
            self.w[v] = -1          # -1 = unassigned
            d = self.indptr[v + 1] - self.indptr[v]
            self.un[v] = d          # unassigned-neighbor count
            if d > self.maxdeg:
                self.maxdeg = d
        self.total = 0
        self.phi = 2 * n            # sum of residual needs (2 - s_u) over U
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

    cdef inline void assign(self, int v, int c) noexcept:
        cdef int i, u, su
        if c > 0 and self.s[v] < 2:
            self.phi -= 2 - self.s[v]
        self.w[v] = c
        self.total += c
        for i in range(self.indptr[v], self.indptr[v + 1]):
            u = self.indices[i]
            if c and self.w[u] <= 0:
                su = self.s[u]
                if su < 2:
                    self.phi -= c if c < 2 - su else 2 - su
            self.s[u] += c
            self.un[u] -= 1

    cdef inline void unassign(self, int v, int c) noexcept:
        cdef int i, u, su
        for i in range(self.indptr[v], self.indptr[v + 1]):
            u = self.indices[i]
            self.s[u] -= c
            self.un[u] += 1
            if c and self.w[u] <= 0:
                su = self.s[u]
                if su < 2:
                    self.phi += c if c < 2 - su else 2 - su
        self.w[v] = -1
        self.total -= c
        if c > 0 and self.s[v] < 2:
            self.phi += 2 - self.s[v]

    cdef inline bint _broken(self, int u) noexcept:
        # Only zero-assigned vertices can be (ir)recoverably broken.
        if self.w[u] != 0:
            return False
        cdef int su = self.s[u]
        if su + 2 * self.un[u] < 2:
            return True
        if self.perfect:
            if su > 2:
                return True
            if self.un[u] == 0 and su != 2:
                return True
        return False

    cdef inline bint feasible_after(self, int v) noexcept:
        cdef int i
        if self._broken(v):
            return False
        for i in range(self.indptr[v], self.indptr[v + 1]):
            if self._broken(self.indices[i]):
                return False
        return True

    cdef inline int lower_bound(self) noexcept:
        cdef int d = self.maxdeg + 2
        return (self.phi + d - 1) // d

    # -- phase 1: prove the optimum (degree-major assignment order) --------

    def run_bnb(self, order):
        cdef array.array order_a = array.array("i", order)
        self._bnb(order_a, 0)
        return self.best, self.best_w, self.nodes, self.aborted

    cdef void _bnb(self, int[:] order, int d):
        cdef int v, c
        if d == self.n:
            # Feasibility pruning guarantees leaves are valid assignments.
            if self.total < self.best:
                self.best = self.total
                self.best_w = list(self.w_a)
            return
        v = order[d]
        for c in range(3):
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

    cdef bint _lex(self, int v):
        cdef int c
        if v == self.n:
            # total <= target throughout, and no valid assignment can weigh
            # less than the proven optimum, so total == target here.
            self.found = list(self.w_a)
            return True
        for c in range(3):
            if self.nodes >= self.budget:
                self.aborted = True
                return False
            self.nodes += 1
            self.assign(v, c)
            if (self.feasible_after(v)
                    and self.total + self.lower_bound() <= self.target
                    and self._lex(v + 1)):
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

    cdef void _enum(self, int v):
        cdef int c
        if v == self.n:
            if self.total == self.target:
                self.solutions.append(list(self.w_a))
                if len(self.solutions) >= self.cap:
                    self.capped = True
            return
        for c in range(3):
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
    cdef _Search search = _Search(n, indptr, indices, perfect, budget)
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
