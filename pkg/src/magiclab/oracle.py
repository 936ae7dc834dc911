"""Exhaustive searches used as ground truth at small sizes.

Every search reports one of three outcomes.  "exhausted" is a proof that no
object exists, while "budget" means the search was refused or cut short and
says nothing.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .labeling import verify_cdm, verify_distance_antimagic

FOUND, EXHAUSTED, BUDGET = "found", "exhausted", "budget"


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = 11
    max_cells: int = 16
    node_limit: int | None = None

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_cells < 1:
            raise ValueError("caps must be positive")
        if self.node_limit is not None and self.node_limit < 1:
            raise ValueError("node_limit must be positive")


@dataclass(frozen=True)
class SearchResult:
    status: str
    labels: tuple | None = None
    constant: int | None = None
    nodes: int = 0
    detail: str = ""

    @property
    def found(self):
        return self.status == FOUND

    def to_text(self):
        if self.status == FOUND and self.constant is not None:
            return f"FOUND k'={self.constant} {' '.join(map(str, self.labels))}"
        if self.status == FOUND:
            return f"FOUND {' '.join(map(str, self.labels))}"
        if self.status == EXHAUSTED:
            return f"EXHAUSTED {self.detail}".rstrip()
        return f"BUDGET {self.detail}".rstrip()


class _OutOfNodes(Exception):
    pass


class _Counter:
    def __init__(self, limit):
        self.limit = limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise _OutOfNodes


def _search_order(g):
    # greedy: next vertex is the one closing the most neighborhoods
    closed = [set(g.closed_neighborhood(v)) for v in range(g.n)]
    order, placed = [], set()
    while len(order) < g.n:
        best = max((v for v in range(g.n) if v not in placed),
                   key=lambda v: (sum(1 for u in closed[v] if closed[u] <= placed | {v}),
                                  len(closed[v] & placed), -v))
        order.append(best)
        placed.add(best)
    return order


def _cdm_with_constant(g, kp, counter):
    n = g.n
    closed = [g.closed_neighborhood(v) for v in range(n)]
    order = _search_order(g)
    s = [0] * n
    rem = [len(c) for c in closed]
    lab = [0] * n
    free = list(range(1, n + 1))

    def ok(u):
        r = rem[u]
        if r == 0:
            return s[u] == kp
        lo = sum(free[:r])
        hi = sum(free[-r:])
        return s[u] + lo <= kp <= s[u] + hi

    def rec(p):
        if p == n:
            return True
        v = order[p]
        for idx in range(len(free)):
            x = free[idx]
            counter.tick()
            del free[idx]
            for u in closed[v]:
                s[u] += x
                rem[u] -= 1
            if all(ok(u) for u in closed[v]) and all(ok(u) for u in range(n) if rem[u]):
                lab[v] = x
                if rec(p + 1):
                    return True
            for u in closed[v]:
                s[u] -= x
                rem[u] += 1
            free.insert(idx, x)
        return False

    return list(lab) if rec(0) else None


def brute_force_cdm(g, budget=None):
    budget = budget or SearchBudget()
    if g.n > budget.max_vertices:
        return SearchResult(BUDGET, detail=f"n={g.n} exceeds {budget.max_vertices}")
    r = g.is_regular()
    if r is not None:
        kp = Fraction((r + 1) * (g.n + 1), 2)
        if kp.denominator != 1:
            return SearchResult(EXHAUSTED, detail=f"k'={kp} is not an integer")
        candidates = [int(kp)]
    else:
        sizes = [len(g.closed_neighborhood(v)) for v in range(g.n)]
        lo = max(sum(range(1, t + 1)) for t in sizes)
        hi = min(sum(range(g.n - t + 1, g.n + 1)) for t in sizes)
        candidates = list(range(lo, hi + 1))
    counter = _Counter(budget.node_limit)
    try:
        for kp in candidates:
            labels = _cdm_with_constant(g, kp, counter)
            if labels is not None:
                assert verify_cdm(g, labels).magic
                return SearchResult(FOUND, tuple(labels), kp, counter.nodes)
    except _OutOfNodes:
        return SearchResult(BUDGET, nodes=counter.nodes, detail="node limit reached")
    return SearchResult(EXHAUSTED, nodes=counter.nodes, detail="no labeling")


def brute_force_magic_rectangle(m, n, budget=None):
    """Existence of a magic (m, n)-rectangle by exhaustive search.

    Rows are sorted by first entry and the first row is increasing, which
    loses nothing since row and column permutations preserve magic-ness.
    """
    budget = budget or SearchBudget()
    if m < 1 or n < 1:
        raise ValueError("dimensions must be positive")
    N = m * n
    if N > budget.max_cells:
        return SearchResult(BUDGET, detail=f"mn={N} exceeds {budget.max_cells}")
    if (n * (N + 1)) % 2 or (m * (N + 1)) % 2:
        return SearchResult(EXHAUSTED, detail="line sums are not integers")
    rs, cs = n * (N + 1) // 2, m * (N + 1) // 2
    a = np.zeros((m, n), dtype=np.int64)
    row = [0] * m
    col = [0] * n
    used = [False] * (N + 1)
    counter = _Counter(budget.node_limit)

    def rec(p):
        if p == N:
            return True
        i, j = divmod(p, n)
        for x in range(1, N + 1):
            if used[x]:
                continue
            if j and i == 0 and x < a[0, j - 1]:
                continue
            if i and j == 0 and x < a[i - 1, 0]:
                continue
            counter.tick()
            if row[i] + x > rs or col[j] + x > cs:
                break
            if j == n - 1 and row[i] + x != rs:
                continue
            if i == m - 1 and col[j] + x != cs:
                continue
            used[x] = True
            row[i] += x
            col[j] += x
            a[i, j] = x
            if rec(p + 1):
                return True
            used[x] = False
            row[i] -= x
            col[j] -= x
        return False

    try:
        if rec(0):
            return SearchResult(FOUND, tuple(a.ravel().tolist()), nodes=counter.nodes)
    except _OutOfNodes:
        return SearchResult(BUDGET, nodes=counter.nodes, detail="node limit reached")
    return SearchResult(EXHAUSTED, nodes=counter.nodes, detail="no rectangle")


def brute_force_distance_antimagic(g, budget=None):
    """First labeling in lexicographic order with distinct open weights."""
    budget = budget or SearchBudget()
    n = g.n
    if n > budget.max_vertices:
        return SearchResult(BUDGET, detail=f"n={n} exceeds {budget.max_vertices}")
    nbrs = [g.neighbors(v) for v in range(n)]
    rows = {tuple(x) for x in g.adj.tolist()}
    if len(rows) < n:
        return SearchResult(EXHAUSTED, detail="two vertices share an open neighborhood")
    # vertex v's weight is fixed once its last neighbor (in index order) is set
    ready = [[] for _ in range(n)]
    for v in range(n):
        ready[max(nbrs[v]) if nbrs[v] else 0].append(v)
    lab = [0] * n
    used = [False] * (n + 1)
    seen = set()
    counter = _Counter(budget.node_limit)

    def rec(p):
        if p == n:
            return True
        for x in range(1, n + 1):
            if used[x]:
                continue
            counter.tick()
            used[x] = True
            lab[p] = x
            ws = [sum(lab[u] for u in nbrs[v]) for v in ready[p]]
            if len(set(ws)) == len(ws) and not seen.intersection(ws):
                seen.update(ws)
                if rec(p + 1):
                    return True
                seen.difference_update(ws)
            used[x] = False
        lab[p] = 0
        return False

    try:
        if rec(0):
            assert verify_distance_antimagic(g, lab)
            return SearchResult(FOUND, tuple(lab), nodes=counter.nodes)
    except _OutOfNodes:
        return SearchResult(BUDGET, nodes=counter.nodes, detail="node limit reached")
    return SearchResult(EXHAUSTED, nodes=counter.nodes, detail="no labeling")


def brute_force_partition(sizes, budget=None, max_n=12):
    """Equal-sum partition of 1..n into parts of the given sizes.

    Plain enumeration of combinations part by part, without the solver's
    ordering or bounds, so it can serve as an independent check.
    """
    budget = budget or SearchBudget()
    sizes = list(sizes)
    n = sum(sizes)
    if n > max_n:
        return SearchResult(BUDGET, detail=f"n={n} exceeds {max_n}")
    total = n * (n + 1) // 2
    if total % len(sizes):
        return SearchResult(EXHAUSTED, detail="part sum is not an integer")
    t = total // len(sizes)
    counter = _Counter(budget.node_limit)

    def rec(i, left):
        if i == len(sizes):
            return []
        for comb in itertools.combinations(sorted(left), sizes[i]):
            counter.tick()
            if sum(comb) == t:
                rest = rec(i + 1, left - set(comb))
                if rest is not None:
                    return [comb] + rest
        return None

    try:
        parts = rec(0, set(range(1, n + 1)))
    except _OutOfNodes:
        return SearchResult(BUDGET, nodes=counter.nodes, detail="node limit reached")
    if parts is None:
        return SearchResult(EXHAUSTED, nodes=counter.nodes, detail="no partition")
    return SearchResult(FOUND, tuple(x for p in parts for x in p), nodes=counter.nodes)
