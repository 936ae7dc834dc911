"""Undirected simple graphs on vertices 0..n-1 with a dense adjacency matrix."""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np


class GraphError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    adj: np.ndarray
    name: str = field(default="", compare=False)

    def __post_init__(self):
        a = np.asarray(self.adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise GraphError("adjacency must be a non-empty square matrix")
        if a.diagonal().any():
            raise GraphError("self-loops are not allowed")
        if not np.array_equal(a, a.T):
            raise GraphError("adjacency must be symmetric")
        a.setflags(write=False)
        object.__setattr__(self, "adj", a)

    @property
    def n(self):
        return self.adj.shape[0]

    def degrees(self):
        return self.adj.sum(axis=1).astype(int)

    def edges(self):
        u, v = np.nonzero(np.triu(self.adj))
        return list(zip(u.tolist(), v.tolist()))

    def num_edges(self):
        return int(np.triu(self.adj).sum())

    def neighbors(self, v):
        self._check_vertex(v)
        return np.flatnonzero(self.adj[v]).tolist()

    def closed_neighborhood(self, v):
        self._check_vertex(v)
        return sorted(self.neighbors(v) + [v])

    def is_regular(self):
        """Common degree, or None if degrees differ."""
        d = self.degrees()
        return int(d[0]) if np.all(d == d[0]) else None

    def matrix(self):
        return self.adj.astype(float)

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def __eq__(self, other):
        return isinstance(other, Graph) and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash(self.adj.tobytes())


def from_edges(n, edges, name=""):
    if n < 1:
        raise GraphError("need at least one vertex")
    a = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range")
        a[u, v] = a[v, u] = True
    return Graph(a, name)


def cycle(n):
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n):
    if n < 1:
        raise GraphError("need at least one vertex")
    return Graph(~np.eye(n, dtype=bool), f"K{n}")


def complete_bipartite(m, n):
    if m < 1 or n < 1:
        raise GraphError("both sides need at least one vertex")
    a = np.zeros((m + n, m + n), dtype=bool)
    a[:m, m:] = True
    a[m:, :m] = True
    return Graph(a, f"K{m},{n}")


def disjoint_copies(c, g):
    if c < 1:
        raise GraphError("need at least one copy")
    a = np.kron(np.eye(c, dtype=int), g.adj.astype(int)).astype(bool)
    return Graph(a, f"{c}x{g.name}" if g.name else "")


def circulant(n, steps):
    steps = sorted(set(steps))
    if not steps:
        raise GraphError("step set must be non-empty")
    if any(s < 1 or s > n // 2 for s in steps):
        raise GraphError(f"steps must lie in 1..{n // 2}")
    i = np.arange(n)
    diff = np.abs(i[:, None] - i[None, :])
    cyc = np.minimum(diff, n - diff)
    return Graph(np.isin(cyc, steps), f"Ci({n},{{{','.join(map(str, steps))}}})")


def strong_product(g, h):
    """Vertex (x, y) sits at index x*h.n + y."""
    ag = g.adj.astype(int) + np.eye(g.n, dtype=int)
    ah = h.adj.astype(int) + np.eye(h.n, dtype=int)
    a = np.kron(ag, ah).astype(bool)
    np.fill_diagonal(a, False)
    name = f"{g.name}x{h.name}" if g.name and h.name else ""
    return Graph(a, name)


def line_graph(g):
    es = g.edges()
    if not es:
        raise GraphError("line graph of an edgeless graph is empty")
    k = len(es)
    a = np.zeros((k, k), dtype=bool)
    for (i, e), (j, f) in combinations(enumerate(es), 2):
        if set(e) & set(f):
            a[i, j] = a[j, i] = True
    return Graph(a, f"L({g.name})" if g.name else "")


def blow_up(base, sizes):
    """Replace vertex i of a regular base by a clique of sizes[i] vertices.

    Blocks are ordered by base vertex; two blocks are fully joined when the
    base vertices are adjacent.
    """
    sizes = list(sizes)
    if len(sizes) != base.n:
        raise GraphError("need one size per base vertex")
    if any(p < 1 for p in sizes):
        raise GraphError("sizes must be positive")
    if base.is_regular() is None:
        raise GraphError("base graph must be regular")
    block = np.repeat(np.arange(base.n), sizes)
    same = block[:, None] == block[None, :]
    a = same | base.adj[block][:, block]
    np.fill_diagonal(a, False)
    return Graph(a, f"blowup({base.name})" if base.name else "")


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner, "Petersen")


def block_of(sizes):
    """Block index of every vertex of a blow-up."""
    return np.repeat(np.arange(len(sizes)), sizes)


# edge-list text format ----------------------------------------------------


def to_edge_list(g):
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text):
    rows = [ln.split() for ln in text.splitlines()]
    rows = [r for r in rows if r and not r[0].startswith("#")]
    if not rows:
        raise GraphError("empty edge list")
    try:
        n = int(rows[0][0])
        edges = [(int(u), int(v)) for u, v in rows[1:]]
    except ValueError as e:
        raise GraphError(f"malformed edge list: {e}") from None
    return from_edges(n, edges)
