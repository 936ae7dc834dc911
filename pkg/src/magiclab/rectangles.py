"""Magic rectangles: m x n arrays of 1..mn with constant row and column sums.

Both constructions work in deviation form, where a value v is replaced by
2v - (mn+1) (even case) or v - (mn+1)/2 (odd case), so that every row and
every column must sum to zero.
"""

import itertools
from dataclasses import dataclass

import numpy as np


class NoRectangle(ValueError):
    """Raised when the parity condition rules out a magic rectangle."""


@dataclass(frozen=True)
class MagicRectangle:
    m: int
    n: int
    cells: np.ndarray

    @property
    def row_sum(self):
        return self.n * (self.m * self.n + 1) // 2

    @property
    def col_sum(self):
        return self.m * (self.m * self.n + 1) // 2

    def validate(self):
        check_rectangle(self.cells)
        return self

    def rows(self):
        return [list(map(int, r)) for r in self.cells]

    def to_text(self):
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows()) + "\n"


def check_rectangle(cells):
    """Raise ValueError unless cells is a magic rectangle."""
    a = np.asarray(cells, dtype=np.int64)
    m, n = a.shape
    N = m * n
    if sorted(a.ravel().tolist()) != list(range(1, N + 1)):
        raise ValueError("cells are not a permutation of 1..mn")
    if not np.all(a.sum(axis=1) == n * (N + 1) // 2):
        raise ValueError("row sums differ")
    if not np.all(a.sum(axis=0) == m * (N + 1) // 2):
        raise ValueError("column sums differ")


def rectangle_exists(m, n):
    """Existence condition for m, n > 1: equal parity and not 2x2."""
    return (m - n) % 2 == 0 and (m, n) != (2, 2)


def magic_rectangle(m, n):
    """Build a magic (m, n)-rectangle.

    Raises NoRectangle when none exists and ValueError when m or n is below 2.
    """
    if m < 2 or n < 2:
        raise ValueError("both dimensions must exceed 1")
    if not rectangle_exists(m, n):
        if (m - n) % 2:
            raise NoRectangle(f"({m},{n}): dimensions of different parity")
        raise NoRectangle("(2,2): excluded case")
    if m % 2 == 0:
        cells = _even(m, n)
    else:
        cells = _odd(m, n)
    return MagicRectangle(m, n, cells).validate()


# even x even -------------------------------------------------------------


def _even(m, n):
    if n % 4 and m % 4 == 0:
        return _even(n, m).T.copy()
    if n == 2:
        return _even(n, m).T.copy()
    N = m * n
    d = np.zeros((m, n), dtype=np.int64)
    mags = iter(range(1, N, 2))
    r0 = 0
    if n % 4:
        # m, n both 2 mod 4: a 2x6 block on magnitudes 1..11 fixes the count
        v = [next(mags) for _ in range(6)]
        top = [v[0], v[1], v[2], v[4], -v[3], -v[5]]
        d[0, :6] = top
        d[1, :6] = [-x for x in top]
        for c in range(6, n, 4):
            _quad_h(d, 0, c, mags)
        for r in range(2, m, 4):
            for c in range(0, n, 2):
                _quad_v(d, r, c, mags)
        r0 = m
    for r in range(r0, m, 2):
        for c in range(0, n, 4):
            _quad_h(d, r, c, mags)
    return (d + N + 1) // 2


def _quad_h(d, r, c, mags):
    # arithmetic progression a<b<c<e so that a+e = b+c
    a, b, cc, e = (next(mags) for _ in range(4))
    d[r, c:c + 4] = [a, -b, -cc, e]
    d[r + 1, c:c + 4] = [-a, b, cc, -e]


def _quad_v(d, r, c, mags):
    a, b, cc, e = (next(mags) for _ in range(4))
    d[r:r + 4, c] = [a, -b, -cc, e]
    d[r:r + 4, c + 1] = [-a, b, cc, -e]


# odd x odd ----------------------------------------------------------------


def _odd(m, n):
    if m == n:
        return _siamese(m)
    for rows, cols, flip in ((m, n, False), (n, m, True)):
        dev = _stacked(rows, cols)
        if dev is not None:
            a = dev + (rows * cols + 1) // 2
            return a.T.copy() if flip else a
    raise RuntimeError(f"no odd construction for ({m},{n})")


def _siamese(n):
    a = np.zeros((n, n), dtype=np.int64)
    i, j = 0, n // 2
    for v in range(1, n * n + 1):
        a[i, j] = v
        ni, nj = (i - 1) % n, (j + 1) % n
        if a[ni, nj]:
            ni, nj = (i + 1) % n, j
        i, j = ni, nj
    return a


def _subset_with_sum(vals, target):
    """Indices of a subset of vals summing to target, or None (bitset DP)."""
    if target < 0:
        return None
    layers = [1]
    mask = (1 << (target + 1)) - 1
    for v in vals:
        layers.append((layers[-1] | (layers[-1] << v)) & mask)
    if not (layers[-1] >> target) & 1:
        return None
    picked, t = set(), target
    for i in range(len(vals) - 1, -1, -1):
        if not (layers[i] >> t) & 1:
            picked.add(i)
            t -= vals[i]
    return picked


def _balanced_signs(vals):
    """Subset whose sum is half the total, so the signed sum can vanish."""
    s = sum(vals)
    if s % 2:
        return None
    return _subset_with_sum(vals, s // 2)


def _outer_pairs(n, shift):
    # (P, Q) with Q-P running over -b..b once each; shift=1 trades magnitude
    # b+1 for 3b+2, which flips the parity of the leftover magnitudes
    b = (n - 1) // 2
    pairs = []
    for o in range(shift, n + shift):
        q = (2 * o) % n
        if shift and q == 0:
            q = n
        pairs.append((b + 1 + o, b + 1 + q))
    return pairs


def _three_rows(n, shift):
    """A 3 x n zero-sum block in deviation form.

    Column j is a permutation of the zero-sum triple (Q-P, P, -Q).  First try
    the first row carrying every difference, which leaves a one-dimensional
    subset sum; otherwise search row placements with a DP over the sums of
    the first two rows.
    """
    pairs = _outer_pairs(n, shift)
    pick = _subset_with_sum([p + q for p, q in pairs], sum(q for _, q in pairs))
    rows = np.zeros((3, n), dtype=np.int64)
    if pick is not None:
        for j, (p, q) in enumerate(pairs):
            rows[0, j] = q - p
            rows[1, j], rows[2, j] = (p, -q) if j in pick else (-q, p)
        return rows
    layers = [{(0, 0): None}]
    for p, q in pairs:
        orders = set(itertools.permutations((q - p, p, -q)))
        cur = {}
        for s0, s1 in layers[-1]:
            for o in orders:
                cur.setdefault((s0 + o[0], s1 + o[1]), o)
        layers.append(cur)
    if (0, 0) not in layers[-1]:
        return None
    s = (0, 0)
    for j in range(n, 0, -1):
        o = layers[j][s]
        rows[:, j - 1] = o
        s = (s[0] - o[0], s[1] - o[1])
    return rows


def _stacked(m, n):
    """Deviation array: a 3 x n zero block plus complementary row pairs.

    Each of the (m-3)/2 row pairs is (r, -r) where r is a signed group of n
    magnitudes summing to zero, so columns vanish automatically.
    """
    M = (m * n - 1) // 2
    K = (m - 3) // 2
    for shift in (0, 1):
        top = _three_rows(n, shift)
        if top is None:
            continue
        used = set(np.abs(top).ravel().tolist())
        if max(used) > M:
            continue
        rest = [x for x in range(1, M + 1) if x not in used]
        if len(rest) != K * n or sum(rest) % 2:
            continue
        groups = _signed_groups(rest, K, n)
        if groups is None:
            continue
        out = [top]
        for g in groups:
            r = np.array(g, dtype=np.int64)
            out.append(np.vstack([r, -r]))
        return np.vstack(out)
    return None


def _signed_groups(pool, K, n):
    """Split pool into K groups of n with zero signed sums, or None."""
    if K == 0:
        return []
    gs = [[] for _ in range(K)]
    for t in range(n):
        blk = pool[t * K:(t + 1) * K]
        if t % 2:
            blk = blk[::-1]
        for g in range(K):
            gs[g].append(blk[g])
    if not _fix_parity(gs):
        return None
    sol = [_balanced_signs(g) for g in gs]
    for g in range(K):
        if sol[g] is None:
            if not _repair(gs, sol, g, n):
                return None
    return [[x if i in s else -x for i, x in enumerate(grp)] for grp, s in zip(gs, sol)]


def _fix_parity(gs):
    # an odd-sum group hands its oddness on by swapping one element of the
    # opposite parity; two odd groups meeting this way both become even
    for _ in range(2 * len(gs)):
        odd = [g for g in range(len(gs)) if sum(gs[g]) % 2]
        if not odd:
            return True
        a = odd[0]
        for c in odd[1:] + [g for g in range(len(gs)) if g not in odd]:
            hit = next(((i, j) for i in range(len(gs[a])) for j in range(len(gs[c]))
                        if (gs[a][i] - gs[c][j]) % 2), None)
            if hit:
                i, j = hit
                gs[a][i], gs[c][j] = gs[c][j], gs[a][i]
                break
        else:
            return False
    return not any(sum(g) % 2 for g in gs)


def _repair(gs, sol, g, n):
    # deterministic: first parity-preserving swap that leaves both groups balanced
    for h in range(len(gs)):
        if h == g:
            continue
        for i in range(n):
            for j in range(n):
                if (gs[g][i] - gs[h][j]) % 2:
                    continue
                gs[g][i], gs[h][j] = gs[h][j], gs[g][i]
                sg, sh = _balanced_signs(gs[g]), _balanced_signs(gs[h])
                if sg is not None and sh is not None:
                    sol[g], sol[h] = sg, sh
                    return True
                gs[g][i], gs[h][j] = gs[h][j], gs[g][i]
    return False


def rectangle_from_text(text):
    rows = [list(map(int, ln.split())) for ln in text.splitlines() if ln.strip()]
    a = np.array(rows, dtype=np.int64)
    return MagicRectangle(a.shape[0], a.shape[1], a).validate()
