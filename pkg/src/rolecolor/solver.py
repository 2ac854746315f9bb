"""Exact search for k-role and R-role colorings.

The k-role search walks canonical set partitions (restricted growth strings)
into exactly k blocks, so color-permutation symmetry is never enumerated and
counts are "up to color permutation". Every completed assignment is re-checked
against the definition before it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .roles import RoleColoring, RoleGraph, verify_k_role, verify_r_role

DECISION = "decision"
WITNESS = "witness"
COUNT = "count"
ENUMERATE = "enumerate"

YES = "yes"
NO = "no"
BUDGET_EXCEEDED = "budget-exceeded"

DEFAULT_BUDGET = 10**8


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class SolveResult:
    status: str  # yes / no / budget-exceeded
    certificate: RoleColoring | None = None
    count: int | None = None
    nodes: int = 0
    certificates: tuple = ()  # enumerate mode only

    @property
    def answer(self) -> bool:
        if self.status == BUDGET_EXCEEDED:
            raise BudgetExceeded("search node budget exceeded; answer unknown")
        return self.status == YES


def one_role_decision(g: Graph) -> bool:
    """1-role colorability: all neighborhoods empty, or none of them."""
    if g.n == 0:
        return False  # no vertex can receive the color
    degs = [g.degree(v) for v in range(g.n)]
    return all(d == 0 for d in degs) or all(d > 0 for d in degs)


class _Searcher:
    """Backtracking over restricted growth strings, vertices in ascending id order.

    Pruning (all answer-preserving, all removable via `pruning=False`):
      * surjectivity feasibility: remaining vertices must cover the unused colors;
      * same-color consistency: once some member of a color class has its whole
        neighborhood colored, that class's neighborhood color set is locked and
        every other member must still be able to match it exactly.
    """

    def __init__(self, g: Graph, k: int, mode: str, budget: int, pruning: bool, limit: int):
        self.g = g
        self.k = k
        self.mode = mode
        self.budget = budget
        self.pruning = pruning
        self.limit = limit
        n = g.n
        self.color = [0] * n
        self.nbr_mask = [0] * n  # colors already assigned around each vertex
        self.rem = [g.degree(v) for v in range(n)]  # uncolored neighbors
        self.locked = [-1] * (k + 1)
        self.members = [[] for _ in range(k + 1)]
        self.nodes = 0
        self.count = 0
        self.found: list[RoleColoring] = []

    def _member_ok(self, u: int) -> bool:
        lock = self.locked[self.color[u]]
        mask = self.nbr_mask[u]
        if mask & ~lock:
            return False
        return (lock & ~mask).bit_count() <= self.rem[u]

    def _finalize(self, u: int, new_locks: list) -> bool:
        """u's neighborhood is now fully colored; lock or match its class set."""
        c = self.color[u]
        lock = self.locked[c]
        if lock != -1:
            return self.nbr_mask[u] == lock
        self.locked[c] = self.nbr_mask[u]
        new_locks.append(c)
        return all(w == u or self._member_ok(w) for w in self.members[c])

    def _assign(self, v: int, c: int, new_locks: list) -> bool:
        """Color v with c, push undo info, and run the pruning checks."""
        self.color[v] = c
        self.members[c].append(v)
        bit = 1 << c
        for u in self.g.adj[v]:
            self.nbr_mask[u] |= bit
            self.rem[u] -= 1
        if not self.pruning:
            return True
        if self.rem[v] == 0:
            if not self._finalize(v, new_locks):
                return False
        elif self.locked[c] != -1 and not self._member_ok(v):
            return False
        for u in self.g.adj[v]:
            if u >= v:
                continue
            if self.rem[u] == 0:
                if not self._finalize(u, new_locks):
                    return False
            elif self.locked[self.color[u]] != -1 and not self._member_ok(u):
                return False
        return True

    def _unassign(self, v: int, c: int, new_locks: list):
        bit = 1 << c
        # c may still be visible at u through another colored neighbor
        for u in self.g.adj[v]:
            self.rem[u] += 1
            if not any(w != v and self.color[w] == c for w in self.g.adj[u]):
                self.nbr_mask[u] &= ~bit
        for cl in new_locks:
            self.locked[cl] = -1
        self.members[c].pop()
        self.color[v] = 0

    def run(self) -> str:
        n, k = self.g.n, self.k
        if k > n:
            return NO
        try:
            done = self._dfs(0, 0)
        except BudgetExceeded:
            return BUDGET_EXCEEDED
        if self.mode == COUNT:
            return YES if self.count > 0 else NO
        if self.mode == ENUMERATE:
            return YES if self.found else NO
        return YES if done else NO

    def _dfs(self, v: int, used: int) -> bool:
        n, k = self.g.n, self.k
        if v == n:
            if used != k:
                return False
            cert = RoleColoring(tuple(self.color), k)
            # the pruning rules should only ever let valid leaves through
            if verify_k_role(self.g, cert) is not None:
                return False
            if self.mode == COUNT:
                self.count += 1
                return False
            self.found.append(cert)
            if self.mode == ENUMERATE:
                return len(self.found) >= self.limit
            return True
        if self.pruning and used + (n - v) < k:
            return False
        top = min(used + 1, k)
        for c in range(1, top + 1):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded()
            new_locks: list = []
            if self._assign(v, c, new_locks) and self._dfs(v + 1, max(used, c)):
                self._unassign(v, c, new_locks)
                return True
            self._unassign(v, c, new_locks)
        return False


def solve_k_role(
    g: Graph,
    k: int,
    mode: str = DECISION,
    budget: int = DEFAULT_BUDGET,
    pruning: bool = True,
    limit: int = 1,
) -> SolveResult:
    """Decide / witness / count / enumerate valid k-role colorings of g.

    Witnesses are the lexicographically smallest restricted-growth coloring;
    counts are up to color permutation.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if mode not in (DECISION, WITNESS, COUNT, ENUMERATE):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == ENUMERATE and limit < 1:
        raise ValueError("enumerate limit must be >= 1")
    s = _Searcher(g, k, mode, budget, pruning, limit)
    status = s.run()
    return SolveResult(
        status=status,
        certificate=s.found[0] if (mode == WITNESS and s.found) else None,
        count=s.count if mode == COUNT else None,
        nodes=s.nodes,
        certificates=tuple(s.found) if mode == ENUMERATE else (),
    )


def naive_k_role_partitions(g: Graph, k: int):
    """Plain restricted-growth enumeration with a leaf check and no pruning.

    Kept as the spelled-out baseline for the pruning-neutrality tests.
    """
    n = g.n
    if k > n:
        return
    rgs = [0] * n

    def rec(v, used):
        if v == n:
            if used == k:
                cert = RoleColoring(tuple(rgs), k)
                if verify_k_role(g, cert) is None:
                    yield cert
            return
        for c in range(1, min(used + 1, k) + 1):
            rgs[v] = c
            yield from rec(v + 1, max(used, c))
        rgs[v] = 0

    yield from rec(0, 0)


class _RSearcher:
    """Backtracking assignment of role-graph colors to vertices, ids ascending."""

    def __init__(self, g: Graph, r: RoleGraph, mode, budget, limit):
        self.g = g
        self.r = r
        self.mode = mode
        self.budget = budget
        self.limit = limit
        n = g.n
        self.color = [0] * n
        self.nbr_mask = [0] * n
        self.rem = [g.degree(v) for v in range(n)]
        self.role_mask = [0] * (r.colors + 1)
        self.role_deg = [0] * (r.colors + 1)
        for c in range(1, r.colors + 1):
            for d in r.neighbors(c):
                self.role_mask[c] |= 1 << d
            self.role_deg[c] = r.degree(c)
        self.used = [0] * (r.colors + 1)
        self.n_used = 0
        self.nodes = 0
        self.count = 0
        self.found: list[RoleColoring] = []

    def _feasible(self, v: int, c: int) -> bool:
        # degree bound, then: seen neighbor colors must sit inside N_R(c) and the
        # missing ones must still be coverable by uncolored neighbors
        if self.g.degree(v) < self.role_deg[c]:
            return False
        mask = self.nbr_mask[v]
        want = self.role_mask[c]
        if mask & ~want:
            return False
        if (want & ~mask).bit_count() > self.rem[v]:
            return False
        bit = 1 << c
        for u in self.g.adj[v]:
            if u < v and not (self.role_mask[self.color[u]] & bit):
                return False
        return True

    def run(self) -> str:
        if self.r.colors > self.g.n or self.r.colors == 0:
            return NO
        try:
            done = self._dfs(0)
        except BudgetExceeded:
            return BUDGET_EXCEEDED
        if self.mode == COUNT:
            return YES if self.count > 0 else NO
        if self.mode == ENUMERATE:
            return YES if self.found else NO
        return YES if done else NO

    def _dfs(self, v: int) -> bool:
        n = self.g.n
        if v == n:
            if self.n_used != self.r.colors:
                return False
            cert = RoleColoring(tuple(self.color), self.r.colors)
            if verify_r_role(self.g, self.r, cert) is not None:
                return False
            if self.mode == COUNT:
                self.count += 1
                return False
            self.found.append(cert)
            if self.mode == ENUMERATE:
                return len(self.found) >= self.limit
            return True
        if (self.r.colors - self.n_used) > (n - v):
            return False
        for c in range(1, self.r.colors + 1):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded()
            if not self._feasible(v, c):
                continue
            self.color[v] = c
            self.used[c] += 1
            if self.used[c] == 1:
                self.n_used += 1
            bit = 1 << c
            changed = []
            for u in self.g.adj[v]:
                self.rem[u] -= 1
                if not (self.nbr_mask[u] & bit):
                    self.nbr_mask[u] |= bit
                    changed.append(u)
            bad = False
            for u in self.g.adj[v]:
                if u < v and self.rem[u] == 0 and self.nbr_mask[u] != self.role_mask[self.color[u]]:
                    bad = True
                    break
            if not bad and self.rem[v] == 0 and self.nbr_mask[v] != self.role_mask[c]:
                bad = True
            if not bad and self._dfs(v + 1):
                self._undo(v, c, changed)
                return True
            self._undo(v, c, changed)
        return False

    def _undo(self, v, c, changed):
        bit = 1 << c
        for u in self.g.adj[v]:
            self.rem[u] += 1
        for u in changed:
            self.nbr_mask[u] &= ~bit
        self.used[c] -= 1
        if self.used[c] == 0:
            self.n_used -= 1
        self.color[v] = 0


def solve_r_role(
    g: Graph,
    r: RoleGraph,
    mode: str = DECISION,
    budget: int = DEFAULT_BUDGET,
    limit: int = 1,
) -> SolveResult:
    """Decide / witness / count / enumerate locally surjective homomorphisms g -> r.

    Witnesses are lexicographically smallest over the vertex-order assignment.
    """
    if r.colors < 1:
        raise ValueError("role graph must have at least one color")
    if mode not in (DECISION, WITNESS, COUNT, ENUMERATE):
        raise ValueError(f"unknown mode {mode!r}")
    s = _RSearcher(g, r, mode, budget, limit)
    status = s.run()
    cert = s.found[0] if s.found else None
    return SolveResult(
        status=status,
        certificate=cert if mode in (WITNESS, DECISION) else None,
        count=s.count if mode == COUNT else None,
        nodes=s.nodes,
        certificates=tuple(s.found) if mode == ENUMERATE else (),
    )
