"""Partitions of {1..n} into parts of prescribed sizes with equal sums.

Such a partition labels a blow-up of a regular graph: part i goes to the
clique that replaced base vertex i.
"""

from dataclasses import dataclass

from . import graph as gr
from .labeling import verify_cdm

DEFAULT_CAP = 64


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class Check:
    passed: bool
    reason: str
    detail: str = ""


@dataclass(frozen=True)
class PartitionInstance:
    sizes: tuple

    def __post_init__(self):
        sizes = tuple(int(p) for p in self.sizes)
        if not sizes or any(p < 1 for p in sizes):
            raise PartitionError("sizes must be positive and non-empty")
        object.__setattr__(self, "sizes", sizes)

    @property
    def k(self):
        return len(self.sizes)

    @property
    def n(self):
        return sum(self.sizes)

    @property
    def total(self):
        return self.n * (self.n + 1) // 2

    @property
    def target(self):
        """Common part sum, or None when k does not divide the total."""
        return self.total // self.k if self.total % self.k == 0 else None

    def prefix_sums(self):
        out, s = [], 0
        for p in sorted(self.sizes):
            s += p
            out.append(s)
        return out


@dataclass(frozen=True)
class PartitionSolution:
    sizes: tuple
    parts: tuple

    def validate(self):
        n = sum(self.sizes)
        flat = sorted(x for part in self.parts for x in part)
        if flat != list(range(1, n + 1)):
            raise PartitionError("parts do not cover 1..n exactly once")
        if [len(part) for part in self.parts] != list(self.sizes):
            raise PartitionError("part sizes do not match")
        sums = {sum(part) for part in self.parts}
        if len(sums) != 1:
            raise PartitionError(f"part sums differ: {sorted(sums)}")
        return self

    def to_text(self):
        return "".join(f"{len(p)}: {' '.join(map(str, p))}\n" for p in self.parts)


def residue_condition(n, k):
    """n mod 2k in {0, 2k-1}.

    Sufficient for k | n(n+1)/2 but equivalent to it only when k is a power
    of two; (n, k) = (9, 3) has target 15 and residue 3.
    """
    return n % (2 * k) in (0, 2 * k - 1)


def necessary_mod(inst):
    """The common sum n(n+1)/(2k) must be an integer."""
    n, k = inst.n, inst.k
    r = n % (2 * k)
    if inst.target is not None:
        return Check(True, "mod", f"k divides n(n+1)/2 (n mod 2k = {r})")
    return Check(False, "mod", f"k does not divide n(n+1)/2 (n mod 2k = {r})")


def necessary_prefix(inst):
    """The P_j largest labels must carry at least j parts' worth of sum."""
    t = inst.target
    if t is None:
        return Check(False, "mod", "k does not divide n(n+1)/2")
    n = inst.n
    for j, pj in enumerate(inst.prefix_sums(), start=1):
        top = sum(range(n - pj + 1, n + 1))
        if top < j * t:
            return Check(False, "prefix", f"j={j}: largest {pj} labels sum to {top} < {j * t}")
    return Check(True, "prefix", "all prefix bounds hold")


def solve(inst, cap=DEFAULT_CAP):
    """PartitionSolution, or a failed Check naming the reason.

    Labels are placed largest first; parts of equal size that are still
    empty are interchangeable, so only the first of them is tried.
    """
    if inst.n > cap:
        raise PartitionError(f"n={inst.n} exceeds the cap of {cap}")
    for chk in (necessary_mod(inst), necessary_prefix(inst)):
        if not chk.passed:
            return chk
    t, sizes, k = inst.target, inst.sizes, inst.k
    parts = [[] for _ in range(k)]
    room = list(sizes)
    sums = [0] * k

    def fits(i, x):
        # after placing x the rest of part i is filled from labels < x
        left = room[i] - 1
        rem = t - sums[i] - x
        lo = left * (left + 1) // 2
        hi = sum(range(x - left, x))
        return lo <= rem <= hi if left else rem == 0

    def place(x):
        if x == 0:
            return True
        tried = set()
        for i in range(k):
            if not room[i] or not fits(i, x):
                continue
            if not parts[i]:
                if sizes[i] in tried:
                    continue
                tried.add(sizes[i])
            parts[i].append(x)
            room[i] -= 1
            sums[i] += x
            if place(x - 1):
                return True
            parts[i].pop()
            room[i] += 1
            sums[i] -= x
        return False

    if not place(inst.n):
        return Check(False, "exhausted", "no partition exists")
    return PartitionSolution(sizes, tuple(tuple(sorted(p)) for p in parts)).validate()


def blow_up_labeling(base, sizes, cap=DEFAULT_CAP):
    """(graph, labels) for the blow-up, or a failed Check from the solver."""
    b = base.is_regular()
    if b is None:
        raise PartitionError("base graph must be regular")
    inst = PartitionInstance(tuple(sizes))
    sol = solve(inst, cap)
    if isinstance(sol, Check):
        return sol
    return labeling_from_parts(base, sol)


def labeling_from_parts(base, sol):
    g = gr.blow_up(base, sol.sizes)
    labels = [x for part in sol.parts for x in part]
    v = verify_cdm(g, labels)
    if not v.magic:
        raise RuntimeError(f"blow-up labeling failed: {v.to_text()}")
    return g, labels


def parse_instance(text):
    toks = text.split()
    try:
        vals = [int(t) for t in toks]
    except ValueError as e:
        raise PartitionError(f"malformed instance: {e}") from None
    if not vals or len(vals) != vals[0] + 1:
        raise PartitionError("expected k followed by k sizes")
    return PartitionInstance(tuple(vals[1:]))
