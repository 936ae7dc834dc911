"""Parameter sweeps as tab-separated tables, with optional matplotlib figures."""

import numpy as np

from . import constructions as cons
from . import graph as gr
from . import oracle
from . import spectral as sp
from .labeling import verify_cdm


def sweep_cycles(nmax=None):
    nmax = nmax or 30
    rows = []
    for n in range(3, nmax + 1):
        closed = sp.multiplicity_of_minus_one(sp.cycle_spectrum(n))
        jac = sp.multiplicity_of_minus_one(sp.eigenvalues_symmetric(gr.cycle(n)))
        bf = oracle.brute_force_cdm(gr.cycle(n)).status if n <= 11 else "-"
        rows.append((n, closed, jac, bf))
    return ("n", "mult_closed", "mult_jacobi", "brute_force"), rows


def sweep_cigap(nmax=None):
    nmax = nmax or 40
    rows = []
    for n in range(7, nmax + 1):
        for k in range(2, min(5, (n - 3) // 2) + 1):
            m1, m2, m = sp.ci_gap_multiplicity(n, k)
            g = gr.circulant(n, sp.gap_steps(k))
            rows.append((n, k, m1, m2, m, sp.multiplicity_of_minus_one(sp.eigenvalues_symmetric(g))))
    return ("n", "k", "m1", "m2", "m", "mult_jacobi"), rows


def sweep_circulant(cmax=None):
    cmax = cmax or 5
    rows = []
    for c in range(1, cmax + 1):
        for k in range(1, 4):
            for n in (2 * k * c, (2 * k + 1) * c):
                f = cons.circulant_feasibility(n, c, k)
                const = "-"
                if f.feasible:
                    g, lab = cons.label_circulant(n, c, k)
                    const = verify_cdm(g, lab).constant
                rows.append((n, c, k, f.to_text().split()[0], f.tag, const))
    return ("n", "c", "k", "verdict", "tag", "constant"), rows


def sweep_cmxcn(nmax=None):
    nmax = nmax or 15
    rows = []
    for m in range(3, nmax + 1):
        for n in range(3, nmax + 1):
            f = cons.cdm_cycle_strong_cycle_iff(m, n)
            const = "-"
            if f.feasible:
                g, lab = cons.construct_cycle_strong_cycle(m, n)
                const = verify_cdm(g, lab).constant
            rows.append((m, n, f.to_text().split()[0], f.tag, const))
    return ("m", "n", "verdict", "tag", "constant"), rows


SWEEPS = {
    "cycles": sweep_cycles,
    "cigap": sweep_cigap,
    "circulant": sweep_circulant,
    "cmxcn": sweep_cmxcn,
}


def to_tsv(header, rows):
    lines = ["\t".join(header)] + ["\t".join(str(x) for x in r) for r in rows]
    return "\n".join(lines) + "\n"


def plot(kind, header, rows, path):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    col = {h: i for i, h in enumerate(header)}
    if kind == "cycles":
        n = [r[0] for r in rows]
        ax.bar(n, [r[col["mult_jacobi"]] for r in rows], color="0.6", label="Jacobi")
        ax.plot(n, [r[col["mult_closed"]] for r in rows], "k.", label="closed form")
        ax.set_xlabel("n")
        ax.set_ylabel("multiplicity of -1 in Sp(C_n)")
        ax.legend(frameon=False)
    elif kind == "cigap":
        ns = sorted({r[0] for r in rows})
        ks = sorted({r[1] for r in rows})
        grid = np.full((len(ks), len(ns)), np.nan)
        for r in rows:
            grid[ks.index(r[1]), ns.index(r[0])] = r[col["mult_jacobi"]]
        im = ax.imshow(grid, aspect="auto", origin="lower", cmap="Greys",
                       extent=(ns[0] - 0.5, ns[-1] + 0.5, ks[0] - 0.5, ks[-1] + 0.5))
        fig.colorbar(im, ax=ax, label="multiplicity of -1")
        ax.set_xlabel("n")
        ax.set_ylabel("k")
    else:
        a, b = ("m", "n") if kind == "cmxcn" else ("c", "n")
        xs = [r[col[b]] for r in rows]
        ys = [r[col[a]] for r in rows]
        ok = [r[col["verdict"]] == "FEASIBLE" for r in rows]
        ax.scatter([x for x, o in zip(xs, ok) if o], [y for y, o in zip(ys, ok) if o],
                   marker="s", color="k", label="feasible")
        ax.scatter([x for x, o in zip(xs, ok) if not o], [y for y, o in zip(ys, ok) if not o],
                   marker="x", color="0.5", label="infeasible")
        ax.set_xlabel(b)
        ax.set_ylabel(a)
        ax.legend(frameon=False, loc="upper left", bbox_to_anchor=(1, 1))
    ax.set_title(f"sweep: {kind}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
