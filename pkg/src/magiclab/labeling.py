"""Labelings, closed-neighborhood weights and the magic check."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class LabelingError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    magic: bool
    constant: int | None = None
    # first violating pair as (v, w(v), u, w(u)); None when magic
    witness: tuple | None = None
    reason: str = ""

    def to_text(self):
        if self.magic:
            return f"MAGIC k'={self.constant}"
        if self.witness is None:
            return f"NOT-MAGIC {self.reason}"
        v, wv, u, wu = self.witness
        return f"NOT-MAGIC v={v} w={wv} u={u} w={wu}"


def _values(g, labels):
    vals = np.asarray(labels, dtype=np.int64)
    if vals.shape != (g.n,):
        raise LabelingError(f"expected {g.n} labels, got {vals.size}")
    return vals


def is_bijection(labels):
    vals = sorted(int(x) for x in labels)
    return vals == list(range(1, len(vals) + 1))


def weights(g, labels):
    """Closed-neighborhood sums for every vertex (exact integers)."""
    vals = _values(g, labels)
    closed = g.adj.astype(np.int64) + np.eye(g.n, dtype=np.int64)
    return closed @ vals


def open_weights(g, labels):
    vals = _values(g, labels)
    return g.adj.astype(np.int64) @ vals


def weight(g, labels, v):
    vals = _values(g, labels)
    return int(sum(int(vals[u]) for u in g.closed_neighborhood(v)))


def verify_cdm(g, labels):
    vals = _values(g, labels)
    if not is_bijection(vals):
        return Verdict(False, reason="not-a-bijection")
    w = weights(g, vals)
    bad = np.flatnonzero(w != w[0])
    if bad.size:
        u = int(bad[0])
        return Verdict(False, witness=(0, int(w[0]), u, int(w[u])))
    return Verdict(True, constant=int(w[0]))


def regular_magic_constant(g):
    """(r+1)(n+1)/2 for an r-regular graph.

    Returns None for irregular graphs and a Fraction when the value is not an
    integer, which refutes the existence of a magic labeling.
    """
    r = g.is_regular()
    if r is None:
        return None
    k = Fraction((r + 1) * (g.n + 1), 2)
    return int(k) if k.denominator == 1 else k


def verify_distance_antimagic(g, labels):
    """True when all open-neighborhood sums are pairwise distinct."""
    if not is_bijection(labels):
        return False
    w = open_weights(g, labels)
    return len(set(w.tolist())) == g.n


def to_text(labels, width=None):
    """Header line with n, then the labels; width wraps them into rows."""
    vals = [int(x) for x in labels]
    width = width or len(vals) or 1
    rows = [vals[i:i + width] for i in range(0, len(vals), width)]
    return f"{len(vals)}\n" + "".join(" ".join(map(str, r)) + "\n" for r in rows)


def parse_labeling(text):
    toks = [t for ln in text.splitlines() if not ln.lstrip().startswith("#") for t in ln.split()]
    if not toks:
        raise LabelingError("empty labeling")
    try:
        n = int(toks[0])
        vals = [int(t) for t in toks[1:]]
    except ValueError as e:
        raise LabelingError(f"malformed labeling: {e}") from None
    if len(vals) != n:
        raise LabelingError(f"header says {n} labels, found {len(vals)}")
    return vals
