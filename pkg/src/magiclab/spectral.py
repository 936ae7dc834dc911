"""Adjacency spectra and the spectral necessary conditions for magic labelings.

The eigensolver is a cyclic Jacobi method with a round-robin pair ordering,
so that each step rotates n/2 disjoint pairs at once with numpy.
"""

import math
import os
from dataclasses import dataclass, field

import numpy as np

MAX_ORDER = 512
DEFAULT_TOL = 1e-7


class SpectralError(ValueError):
    pass


class NoConvergence(RuntimeError):
    pass


def default_tol():
    env = os.environ.get("MAGICLAB_TOL")
    if env:
        try:
            tol = float(env)
        except ValueError:
            raise SpectralError(f"MAGICLAB_TOL is not a number: {env!r}") from None
        if tol <= 0:
            raise SpectralError("MAGICLAB_TOL must be positive")
        return tol
    return DEFAULT_TOL


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple
    tol: float = field(default_factory=default_tol)

    @classmethod
    def of(cls, values, tol=None):
        vals = tuple(sorted(float(x) for x in values))
        return cls(vals, default_tol() if tol is None else tol)

    @property
    def n(self):
        return len(self.eigenvalues)

    @property
    def radius(self):
        return max((abs(x) for x in self.eigenvalues), default=0.0)

    @property
    def scale(self):
        return self.tol * max(1.0, self.radius)

    def clusters(self):
        """(representative, multiplicity) after merging values within tol."""
        out = []
        group = []
        for x in self.eigenvalues:
            if group and x - group[-1] > self.scale:
                out.append((sum(group) / len(group), len(group)))
                group = []
            group.append(x)
        if group:
            out.append((sum(group) / len(group), len(group)))
        return out

    def multiplicity(self, value):
        return sum(k for v, k in self.clusters() if abs(v - value) <= self.scale)

    def contains(self, value):
        return self.multiplicity(value) > 0

    def to_text(self):
        return "".join(f"{_fmt(v)} {k}\n" for v, k in self.clusters())


def _fmt(v):
    s = f"{v:.12g}"
    return "0" if s in ("-0", "0") or abs(v) < 1e-13 else s


# Jacobi eigensolver ---------------------------------------------------------


def jacobi_eigenvalues(a, tol=1e-12, max_sweeps=100):
    """Eigenvalues of a real symmetric matrix, sorted ascending.

    Stops once the off-diagonal Frobenius norm falls below tol times the
    Frobenius norm of the input.  Raises NoConvergence after max_sweeps.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T):
        raise SpectralError("matrix must be square and symmetric")
    if n > MAX_ORDER:
        raise SpectralError(f"order {n} exceeds the cap of {MAX_ORDER}")
    if n == 1:
        return np.array([a[0, 0]])
    norm = np.linalg.norm(a)
    if norm == 0:
        return np.zeros(n)
    thresh = tol * norm
    m = n + (n % 2)
    # round-robin schedule: player 0 fixed, the rest rotate
    ring = list(range(1, m))
    for _ in range(max_sweeps):
        if _off(a) < thresh:
            return np.sort(np.diag(a))
        for _ in range(m - 1):
            players = [0] + ring
            ps, qs = [], []
            for i in range(m // 2):
                p, q = players[i], players[m - 1 - i]
                if p < n and q < n:
                    ps.append(min(p, q))
                    qs.append(max(p, q))
            _rotate(a, np.array(ps), np.array(qs))
            ring = ring[-1:] + ring[:-1]
    if _off(a) < thresh:
        return np.sort(np.diag(a))
    raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")


def _off(a):
    # direct sum: subtracting the diagonal from the total cancels badly
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a, p, q):
    apq = a[p, q]
    live = np.abs(apq) > 1e-300
    if not live.any():
        return
    p, q, apq = p[live], q[live], apq[live]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
    t[theta == 0] = 1.0
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    # columns then rows: A <- J^T A J with disjoint (p, q) pairs
    ap, aq = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * ap - s * aq
    a[:, q] = s * ap + c * aq
    ap, aq = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c[:, None] * ap - s[:, None] * aq
    a[q, :] = s[:, None] * ap + c[:, None] * aq
    a[p, q] = 0.0
    a[q, p] = 0.0


def eigenvalues_symmetric(g, tol=None):
    return Spectrum.of(jacobi_eigenvalues(g.matrix()), tol)


# closed forms -----------------------------------------------------------------


def cycle_spectrum(n, tol=None):
    if n < 3:
        raise SpectralError("a cycle needs at least 3 vertices")
    return Spectrum.of([2 * math.cos(2 * math.pi * j / n) for j in range(1, n + 1)], tol)


def circulant_spectrum(n, steps, tol=None):
    steps = sorted(set(steps))
    if not steps or any(s < 1 or s > n // 2 for s in steps):
        raise SpectralError(f"steps must lie in 1..{n // 2}")
    vals = []
    for j in range(n):
        lam = 0.0
        for s in steps:
            term = math.cos(2 * math.pi * j * s / n)
            # the step n/2 contributes a single neighbor
            lam += term if 2 * s == n else 2 * term
        vals.append(lam)
    return Spectrum.of(vals, tol)


def complete_spectrum(n, tol=None):
    return Spectrum.of([n - 1] + [-1] * (n - 1), tol)


def complete_bipartite_spectrum(m, n, tol=None):
    r = math.sqrt(m * n)
    return Spectrum.of([-r, r] + [0.0] * (m + n - 2), tol)


def strong_product_spectrum(sg, sh, tol=None):
    vals = [(x + 1) * (y + 1) - 1 for x in sg.eigenvalues for y in sh.eigenvalues]
    return Spectrum.of(vals, sg.tol if tol is None else tol)


def multiplicity_of_minus_one(spec):
    return spec.multiplicity(-1.0)


# necessary conditions -----------------------------------------------------------


@dataclass(frozen=True)
class Check:
    passed: bool
    detail: str

    @property
    def refutes(self):
        return not self.passed


def necessary_regular_cdm(g, spec=None):
    """A regular magic graph has -1 in its spectrum; failing refutes."""
    if g.is_regular() is None:
        raise SpectralError("condition applies to regular graphs only")
    spec = spec or eigenvalues_symmetric(g)
    k = multiplicity_of_minus_one(spec)
    if k:
        return Check(True, f"-1 has multiplicity {k}")
    return Check(False, "-1 is not an eigenvalue: not closed distance magic")


def necessary_line_graph(g, spec=None):
    """L(G) of an r-regular G can only be magic when 1-r is an eigenvalue of G."""
    r = g.is_regular()
    if r is None:
        raise SpectralError("condition applies to regular graphs only")
    if r <= 1:
        raise SpectralError("degree must exceed 1")
    spec = spec or eigenvalues_symmetric(g)
    if spec.contains(1.0 - r):
        return Check(True, f"{1 - r} is an eigenvalue of G")
    return Check(False, f"{1 - r} is not an eigenvalue of G: L(G) is not closed distance magic")


def strongly_regular_params(g):
    """(r, a, b) when g is strongly regular with b >= 1, else None.

    Complete graphs have no non-adjacent pairs; they are reported with b=None.
    """
    r = g.is_regular()
    if r is None:
        return None
    a_int = g.adj.astype(np.int64)
    common = a_int @ a_int
    off = ~np.eye(g.n, dtype=bool)
    adj_vals = np.unique(common[g.adj])
    non = off & ~g.adj
    non_vals = np.unique(common[non])
    a = int(adj_vals[0]) if adj_vals.size else 0
    if adj_vals.size > 1:
        return None
    if not non.any():
        return r, a, None
    if non_vals.size != 1:
        return None
    b = int(non_vals[0])
    if b < 1:
        return None
    return r, a, b


def strongly_regular_cdm_test(g):
    """For strongly regular g, -1 is a root of x^2 + (b-a)x + b - r iff a = r-1."""
    params = strongly_regular_params(g)
    if params is None:
        raise SpectralError("graph is not strongly regular")
    r, a, b = params
    if a == r - 1:
        return Check(True, f"(r,a,b)=({r},{a},{b}): a = r-1")
    return Check(False, f"(r,a,b)=({r},{a},{b}): a != r-1, not closed distance magic")


def ci_gap_multiplicity(n, k):
    """Multiplicity of -1 in the spectrum of Ci(n, {1..k-1, k+1}).

    Returns (m1, m2, m1 + m2).
    """
    if not (1 < k <= (n - 3) // 2):
        raise SpectralError(f"need 1 < k <= (n-3)/2, got n={n}, k={k}")
    m1 = 2 * sum(1 for t in range(1, k + 1) if (n * t) % (2 * k + 1) == 0)
    m2 = 2 if n % 6 == 0 else 0
    return m1, m2, m1 + m2


def gap_steps(k):
    return list(range(1, k)) + [k + 1]


def cos_sum(x, k, variant):
    if variant == 1:
        return sum(math.cos(s * x) for s in range(1, k + 1))
    return sum(math.cos(s * x) for s in range(1, k)) + math.cos((k + 1) * x)


def cos_sum_roots(k, variant):
    """Roots in [-pi, pi] of the cosine sums equal to -1/2.

    variant 1: cos x + ... + cos kx; variant 2 skips cos kx and adds cos (k+1)x.
    """
    if variant == 1:
        if k < 1:
            raise SpectralError("variant 1 needs k >= 1")
        base = [2 * j * math.pi / (2 * k + 1) for j in range(1, k + 1)]
    elif variant == 2:
        if k < 2:
            raise SpectralError("variant 2 needs k >= 2")
        base = [2 * j * math.pi / (2 * k + 1) for j in range(1, k + 1)] + [math.pi / 3]
    else:
        raise SpectralError("variant must be 1 or 2")
    roots = sorted({round(s * x, 15) for x in base for s in (1, -1)})
    return roots


def find_perfect_code(g, cap=64):
    """Vertex set whose closed neighborhoods partition V, or None."""
    if g.n > cap:
        raise SpectralError(f"order {g.n} exceeds the cap of {cap}")
    closed = [frozenset(g.closed_neighborhood(v)) for v in range(g.n)]
    covered = [False] * g.n
    code = []

    def bt():
        try:
            u = covered.index(False)
        except ValueError:
            return True
        for c in closed[u]:
            if any(covered[x] for x in closed[c]):
                continue
            for x in closed[c]:
                covered[x] = True
            code.append(c)
            if bt():
                return True
            code.pop()
            for x in closed[c]:
                covered[x] = False
        return False

    return sorted(code) if bt() else None
