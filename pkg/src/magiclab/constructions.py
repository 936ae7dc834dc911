"""Explicit closed distance magic labelings and family-level existence verdicts.

Every constructor returns (graph, labels) with labels in graph-core vertex
order, and validates its own output with verify_cdm before returning.
"""

from dataclasses import dataclass

import numpy as np

from . import graph as gr
from .labeling import regular_magic_constant, verify_cdm
from .rectangles import magic_rectangle


class ConstructionError(ValueError):
    pass


class Infeasible(ConstructionError):
    """Raised when the governing result rules the instance out."""

    def __init__(self, tag, detail=""):
        super().__init__(f"{tag}: {detail}" if detail else tag)
        self.tag = tag
        self.detail = detail


@dataclass(frozen=True)
class Feasibility:
    # None means no result in scope decides the instance
    feasible: bool | None
    tag: str
    detail: str = ""

    def to_text(self):
        word = {True: "FEASIBLE", False: "INFEASIBLE", None: "UNKNOWN"}[self.feasible]
        return f"{word} {self.tag}"


def _checked(g, labels):
    labels = [int(x) for x in labels]
    v = verify_cdm(g, labels)
    if not v.magic:
        raise RuntimeError(f"construction for {g.name or 'graph'} failed: {v.to_text()}")
    return g, labels


# triples ----------------------------------------------------------------------


@dataclass(frozen=True)
class TriplePartition:
    m: int
    triples: tuple

    @property
    def triple_sum(self):
        return 3 * (self.m + 1) // 2


def triples_partition(m):
    """Partition of 1..m (m = 3 mod 6) into m/3 triples of equal sum."""
    if m < 3 or m % 6 != 3:
        raise ConstructionError(f"need m = 3 (mod 6), got {m}")
    ts = [(2 * i + 1, (m + 1) // 2 - i, m - i) for i in range((m - 3) // 6 + 1)]
    ts += [(2 * i + 2, 2 * m // 3 - i, (5 * m - 3) // 6 - i) for i in range((m - 9) // 6 + 1)]
    return TriplePartition(m, tuple(ts))


# K_n strong G -------------------------------------------------------------------


def label_complete_strong(nk, g):
    """Magic labeling of K_nk x G (strong product), vertex (i, j) at i*m + j.

    Every K-fiber over a G-vertex gets the same label sum; since fibers are
    modules of the product, that makes all closed weights equal.
    """
    r = g.is_regular()
    if r is None or r == 0:
        raise ConstructionError("G must be regular of positive degree")
    if nk < 2:
        raise ConstructionError("the complete factor needs at least 2 vertices")
    m = g.n
    lab = np.zeros((nk, m), dtype=np.int64)
    if nk % 2 == 0:
        h = nk // 2
        N = nk * m
        for j in range(m):
            low = [j * h + t for t in range(1, h + 1)]
            high = [N - j * h - t + 1 for t in range(1, h + 1)]
            lab[:, j] = low + high
    elif m % 2:
        lab[:, :] = magic_rectangle(nk, m).cells
    else:
        raise Infeasible("thm4.uncovered", f"K_{nk} odd with G of even order {m}")
    prod = gr.strong_product(gr.complete(nk), g)
    return _checked(prod, lab.ravel())


# C_m strong C_n -------------------------------------------------------------------


def cycle_strong_cycle_parts(m, n):
    """The two coordinate labelings l1, l2 as m x n arrays (1-based values)."""
    s = triples_partition(m).triples
    t = triples_partition(n).triples
    i = np.arange(m)[:, None]
    j = np.arange(n)[None, :]
    l1 = np.vectorize(lambda a, b: s[a // 3][b % 3])(i, j)
    l2 = np.vectorize(lambda a, b: t[b // 3][a % 3])(i, j)
    return l1.astype(np.int64), l2.astype(np.int64)


def label_cycle_strong_cycle(m, n):
    """Triple construction for C_m x C_n with m, n = 3 (mod 6)."""
    if m % 6 != 3 or n % 6 != 3:
        raise ConstructionError(f"need m, n = 3 (mod 6), got ({m},{n})")
    l1, l2 = cycle_strong_cycle_parts(m, n)
    lab = (l1 - 1) * n + l2
    return _checked(gr.strong_product(gr.cycle(m), gr.cycle(n)), lab.ravel())


def cdm_cycle_strong_cycle_iff(m, n):
    if m < 3 or n < 3:
        raise ConstructionError("cycles need at least 3 vertices")
    if m % 6 == 3 and n % 6 == 3:
        return Feasibility(True, "thm5.cond1", "both orders are 3 mod 6")
    if (m == 3 and n % 2) or (n == 3 and m % 2):
        return Feasibility(True, "thm5.cond2", "C_3 = K_3 with an odd cycle")
    return Feasibility(False, "thm5", f"({m},{n}) meets neither condition")


def construct_cycle_strong_cycle(m, n):
    """Dispatch to the constructor matching the feasibility verdict."""
    f = cdm_cycle_strong_cycle_iff(m, n)
    if not f.feasible:
        raise Infeasible(f.tag, f.detail)
    if f.tag == "thm5.cond1":
        return label_cycle_strong_cycle(m, n)
    target = gr.strong_product(gr.cycle(m), gr.cycle(n))
    if m == 3:
        _, labels = label_complete_strong(3, gr.cycle(n))
        return _checked(target, labels)
    # C_m x C_3: swap the coordinates of the K_3 x C_m labeling
    _, labels = label_complete_strong(3, gr.cycle(m))
    lab = np.array(labels).reshape(3, m).T
    return _checked(target, lab.ravel())


# circulants ---------------------------------------------------------------------


def multiple_steps(c, k):
    return [c * s for s in range(1, k + 1)]


def circulant_feasibility(n, c, k):
    if c < 1 or k < 1:
        raise ConstructionError("c and k must be positive")
    if k * c > n // 2:
        raise ConstructionError(f"step {k * c} exceeds n/2 for n={n}")
    if n == 2 * k * c:
        return Feasibility(True, "lemSyl2", "n = 2kc")
    if n == (2 * k + 1) * c:
        if c % 2:
            return Feasibility(True, "lemSyl3", "n = (2k+1)c with c odd")
        return Feasibility(False, "lemSyl3.parity", "n = (2k+1)c with c even")
    return Feasibility(False, "lemSyl1", "n is neither 2kc nor (2k+1)c")


def label_circulant(n, c, k):
    """Magic labeling of Ci(n, {c, 2c, ..., kc}), or Infeasible."""
    f = circulant_feasibility(n, c, k)
    if not f.feasible:
        raise Infeasible(f.tag, f.detail)
    g = gr.circulant(n, multiple_steps(c, k))
    if f.tag == "lemSyl2":
        lab = np.zeros(n, dtype=np.int64)
        h = c * k
        lab[:h] = np.arange(1, h + 1)
        lab[h:] = n - np.arange(h)
        return _checked(g, lab)
    if c == 1:
        # complete graph: any bijection
        return _checked(g, range(1, n + 1))
    a = magic_rectangle(2 * k + 1, c).cells
    return _checked(g, a.ravel())


# disjoint complete graphs -------------------------------------------------------------


def disjoint_complete_feasibility(c, n):
    if c < 1 or n < 2:
        raise ConstructionError("need c >= 1 and n >= 2")
    if n * (c + 1) % 2:
        return Feasibility(False, "cor.ckn.parity", f"n(c+1) = {n * (c + 1)} is odd")
    return Feasibility(True, "cor.ckn", "n(c+1) is even")


def label_disjoint_complete(c, n):
    """Labeling of c disjoint copies of K_n where every copy has the same sum."""
    f = disjoint_complete_feasibility(c, n)
    if not f.feasible:
        raise Infeasible(f.tag, f.detail)
    g = gr.disjoint_copies(c, gr.complete(n))
    if n % 2 == 0:
        N = c * n
        labels = []
        for t in range(1, N // 2 + 1):
            labels += [t, N + 1 - t]
        return _checked(g, labels)
    if c == 1:
        return _checked(g, range(1, n + 1))
    return _checked(g, magic_rectangle(c, n).cells.ravel())


# K_n strong G feasibility ---------------------------------------------------------------


def complete_strong_feasibility(nk, g):
    r = g.is_regular()
    if r is None or r == 0:
        raise ConstructionError("G must be regular of positive degree")
    if nk < 2:
        raise ConstructionError("the complete factor needs at least 2 vertices")
    if nk % 2 == 0:
        return Feasibility(True, "thm3", "complete factor of even order")
    if g.n % 2:
        return Feasibility(True, "thm4", "both orders odd")
    prod = gr.strong_product(gr.complete(nk), g)
    if prod.is_regular() == prod.n - 1:
        return Feasibility(True, "complete", "the product is a complete graph")
    if not isinstance(regular_magic_constant(prod), int):
        return Feasibility(False, "obs1.parity", "(r+1)(n+1)/2 is not an integer")
    return Feasibility(None, "thm4.uncovered", "odd complete factor, G of even order")


# Simanjuntak predicates --------------------------------------------------------------


def ci_predicates(n, k):
    """Verdicts for Ci(n, {1..k-1, k+1..n/2}) and Ci(n, {1..k}).

    Either entry is None when (n, k) is outside that result's range.
    """
    if n < 3 or k < 1:
        raise ConstructionError("need n >= 3 and k >= 1")
    skip = None
    if k <= n // 2 and skip_steps(n, k):
        ok = n == 4 * k
        skip = Feasibility(ok, "prop3", "n = 4k" if ok else "n != 4k")
    dense = None
    if n >= 2 * k + 2:
        dense = Feasibility(False, "prop4", "n >= 2k+2")
    return skip, dense


def skip_steps(n, k):
    return [s for s in range(1, n // 2 + 1) if s != k]


def cycle_feasibility(n):
    if n < 3:
        raise ConstructionError("a cycle needs at least 3 vertices")
    if n == 3:
        return Feasibility(True, "prop2", "C_3 is complete")
    return Feasibility(False, "prop2", "only C_3 among cycles")


def complete_bipartite_feasibility(m, n):
    m, n = sorted((m, n))
    if m < 1:
        raise ConstructionError("both sides need a vertex")
    if m == n == 1:
        return Feasibility(True, "complete", "K_{1,1} = K_2")
    if m == 1:
        return Feasibility(False, "kmn.star", "leaves of a star have distinct weights")
    return Feasibility(False, "prop.kmn", "-1 is not in the spectrum")
