"""magiclab command line.

Exit codes: 0 success / feasible / magic, 1 certified infeasible / not magic,
2 usage error, exhausted budget or an undecided instance.
"""

import argparse
import os
import sys

from . import constructions as cons
from . import families as fam
from . import graph as gr
from . import labeling as lb
from . import oracle
from . import partition as pt
from . import rectangles as rect
from . import spectral as sp

OK, NO, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(src):
    if src == "-":
        return sys.stdin.read()
    with open(src) as fh:
        return fh.read()


def load_graph(src):
    """A path, '-' for stdin, or a family token such as cycle:5."""
    if src == "-" or os.path.exists(src):
        return gr.parse_edge_list(_read(src))
    toks = fam.split_token(src)
    if toks and toks[0] in fam.FAMILIES:
        return fam.build(toks)
    raise UsageError(f"{src}: no such file and not a family token")


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ints(args):
    try:
        return [int(a) for a in args]
    except ValueError:
        raise UsageError(f"expected integers, got {' '.join(args)}") from None


def _arity(name, args, k):
    if len(args) != k:
        raise UsageError(f"{name}: expected {k} argument(s), got {len(args)}")
    return args


# gen ----------------------------------------------------------------------------


def cmd_gen(a):
    g = fam.build([a.family] + a.args)
    _emit(gr.to_edge_list(g), a.output)
    return OK


# construct ------------------------------------------------------------------------


def _construct(name, args):
    """(graph, labels, row width) for a family, raising Infeasible if ruled out."""
    if name == "cmxcn":
        m, n = _ints(_arity(name, args, 2))
        g, lab = cons.construct_cycle_strong_cycle(m, n)
        return g, lab, n
    if name == "knxg":
        _arity(name, args, 2)
        (nk,) = _ints(args[:1])
        base = fam.build_token(args[1])
        g, lab = cons.label_complete_strong(nk, base)
        return g, lab, base.n
    if name == "circulant":
        n, c, k = _ints(_arity(name, args, 3))
        g, lab = cons.label_circulant(n, c, k)
        return g, lab, None
    if name == "ckn":
        c, n = _ints(_arity(name, args, 2))
        g, lab = cons.label_disjoint_complete(c, n)
        return g, lab, n
    if name == "complete":
        (n,) = _ints(_arity(name, args, 1))
        return gr.complete(n), list(range(1, n + 1)), None
    if name == "cycle":
        (n,) = _ints(_arity(name, args, 1))
        f = cons.cycle_feasibility(n)
        if not f.feasible:
            raise cons.Infeasible(f.tag, f.detail)
        return gr.cycle(3), [1, 2, 3], None
    if name == "kmn":
        m, n = _ints(_arity(name, args, 2))
        f = cons.complete_bipartite_feasibility(m, n)
        if not f.feasible:
            raise cons.Infeasible(f.tag, f.detail)
        return gr.complete_bipartite(1, 1), [1, 2], None
    if name == "blowup":
        if len(args) < 2:
            raise UsageError("blowup: expected a base token and sizes")
        base = fam.build_token(args[0])
        res = pt.blow_up_labeling(base, _ints(args[1:]))
        if isinstance(res, pt.Check):
            raise cons.Infeasible(f"partition.{res.reason}", res.detail)
        g, lab = res
        return g, lab, None
    if name == "strong":
        _arity(name, args, 2)
        left, right = (fam.split_token(t) for t in args)
        if left[0] == "cycle" and right[0] == "cycle":
            return _construct("cmxcn", left[1:] + right[1:])
        if left[0] == "complete":
            return _construct("knxg", left[1:] + [args[1]])
        raise UsageError("strong: constructions exist for cycle x cycle and complete x regular")
    raise UsageError(f"construct: no construction for family {name!r}")


def cmd_construct(a):
    try:
        g, lab, width = _construct(a.family, a.args)
    except cons.Infeasible as e:
        print(f"INFEASIBLE {e.tag}")
        return NO
    v = lb.verify_cdm(g, lab)
    _emit(lb.to_text(lab, width) + f"# {v.to_text()}\n", a.output)
    if a.graph:
        with open(a.graph, "w") as fh:
            fh.write(gr.to_edge_list(g))
    return OK if v.magic else NO


# check ------------------------------------------------------------------------------


def cmd_check(a):
    if a.graph == "-" and a.labeling == "-":
        raise UsageError("graph and labeling cannot both come from stdin")
    g = load_graph(a.graph)
    labels = lb.parse_labeling(_read(a.labeling))
    if a.antimagic:
        ok = lb.verify_distance_antimagic(g, labels)
        print("ANTIMAGIC" if ok else "NOT-ANTIMAGIC")
        return OK if ok else NO
    v = lb.verify_cdm(g, labels)
    print(v.to_text())
    return OK if v.magic else NO


# spectrum ---------------------------------------------------------------------------


def cmd_spectrum(a):
    if a.tol is not None and a.tol <= 0:
        raise UsageError("--tol must be positive")
    tol = a.tol if a.tol is not None else sp.default_tol()
    toks = fam.split_token(a.graph[0]) if len(a.graph) == 1 else a.graph
    if a.closed_form:
        spec = fam.closed_form(toks, tol)
    else:
        g = load_graph(a.graph[0]) if len(a.graph) == 1 else fam.build(toks)
        spec = sp.eigenvalues_symmetric(g, tol)
    sys.stdout.write(spec.to_text())
    return OK


# feasible ----------------------------------------------------------------------------


def _spectral_verdict(g):
    r = g.is_regular()
    if r is None:
        return cons.Feasibility(None, "irregular", "no spectral test for irregular graphs")
    k = lb.regular_magic_constant(g)
    if not isinstance(k, int):
        return cons.Feasibility(False, "obs1.parity", f"k'={k}")
    if sp.necessary_regular_cdm(g).refutes:
        return cons.Feasibility(False, "cor.spectrum", "-1 is not an eigenvalue")
    params = sp.strongly_regular_params(g)
    if params is not None and params[2] is not None and sp.strongly_regular_cdm_test(g).refutes:
        return cons.Feasibility(False, "prop.srg", f"(r,a,b)={params}")
    return cons.Feasibility(None, "spectral", "necessary conditions hold")


def _feasibility(name, args):
    if name == "cmxcn":
        return cons.cdm_cycle_strong_cycle_iff(*_ints(_arity(name, args, 2)))
    if name == "circulant":
        return cons.circulant_feasibility(*_ints(_arity(name, args, 3)))
    if name == "ckn":
        return cons.disjoint_complete_feasibility(*_ints(_arity(name, args, 2)))
    if name == "cycle":
        return cons.cycle_feasibility(*_ints(_arity(name, args, 1)))
    if name == "complete":
        (n,) = _ints(_arity(name, args, 1))
        if n < 1:
            raise UsageError("complete: n must be positive")
        return cons.Feasibility(True, "complete", "every bijection works")
    if name == "kmn":
        return cons.complete_bipartite_feasibility(*_ints(_arity(name, args, 2)))
    if name == "knxg":
        _arity(name, args, 2)
        (nk,) = _ints(args[:1])
        return cons.complete_strong_feasibility(nk, fam.build_token(args[1]))
    if name == "ci-skip":
        n, k = _ints(_arity(name, args, 2))
        skip, _ = cons.ci_predicates(n, k)
        if skip is None:
            raise UsageError(f"ci-skip: k={k} out of range for n={n}")
        return skip
    if name == "ci-dense":
        n, k = _ints(_arity(name, args, 2))
        _, dense = cons.ci_predicates(n, k)
        if dense is None:
            if n in (2 * k, 2 * k + 1):
                return cons.Feasibility(True, "complete", "Ci(n,{1..k}) is complete")
            raise UsageError(f"ci-dense: need n >= 2k, got n={n}, k={k}")
        return dense
    if name == "ci-gap":
        n, k = _ints(_arity(name, args, 2))
        m1, m2, m = sp.ci_gap_multiplicity(n, k)
        if m == 0:
            return cons.Feasibility(False, "prop6", "-1 is not an eigenvalue")
        return cons.Feasibility(None, "prop6", f"-1 has multiplicity {m}")
    if name == "blowup":
        if len(args) < 2:
            raise UsageError("blowup: expected a base token and sizes")
        base = fam.build_token(args[0])
        sizes = _ints(args[1:])
        res = pt.solve(pt.PartitionInstance(tuple(sizes)))
        if not isinstance(res, pt.Check):
            return cons.Feasibility(True, "partition", "equal-sum partition found")
        cyc = base.n >= 3 and base == gr.cycle(base.n)
        if cyc and base.n % 3:
            return cons.Feasibility(False, f"partition.{res.reason}", res.detail)
        return cons.Feasibility(None, f"partition.{res.reason}",
                                "equal sums are only sufficient for this base")
    if name == "linegraph":
        _arity(name, args, 1)
        base = fam.build_token(args[0])
        r = base.is_regular()
        if r is not None and r > 1 and sp.necessary_line_graph(base).refutes:
            return cons.Feasibility(False, "cor.linegraph", f"{1 - r} is not an eigenvalue")
        return _spectral_verdict(gr.line_graph(base))
    if name == "graph":
        _arity(name, args, 1)
        return _spectral_verdict(load_graph(args[0]))
    raise UsageError(f"feasible: unknown family {name!r}")


def cmd_feasible(a):
    try:
        f = _feasibility(a.family, a.args)
    except (cons.ConstructionError, sp.SpectralError) as e:
        raise UsageError(str(e)) from None
    print(f.to_text())
    return {True: OK, False: NO, None: USAGE}[f.feasible]


# search ----------------------------------------------------------------------------------


def cmd_search(a):
    budget = oracle.SearchBudget(a.max_vertices, a.max_cells, a.node_limit)
    if a.rectangle:
        m, n = _ints(_arity("search --rectangle", [a.graph] + a.extra, 2))
        res = oracle.brute_force_magic_rectangle(m, n, budget)
    else:
        if a.extra:
            raise UsageError("search: unexpected arguments")
        g = load_graph(a.graph)
        fn = oracle.brute_force_distance_antimagic if a.antimagic else oracle.brute_force_cdm
        res = fn(g, budget)
    print(res.to_text())
    return {oracle.FOUND: OK, oracle.EXHAUSTED: NO, oracle.BUDGET: USAGE}[res.status]


# partition ----------------------------------------------------------------------------


def cmd_partition(a):
    inst = pt.parse_instance(" ".join(a.values))
    res = pt.solve(inst, a.cap)
    if isinstance(res, pt.Check):
        print(f"INFEASIBLE {res.reason}")
        return NO
    sys.stdout.write(res.to_text())
    return OK


# rectangle --------------------------------------------------------------------------------


def cmd_rectangle(a):
    try:
        r = rect.magic_rectangle(a.m, a.n)
    except rect.NoRectangle as e:
        print(f"NONE {e}")
        return NO
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(r.to_text(), a.output)
    return OK


# sweep -------------------------------------------------------------------------------------


def cmd_sweep(a):
    from . import report

    header, rows = report.SWEEPS[a.kind](a.max)
    _emit(report.to_tsv(header, rows), a.output)
    if a.plot:
        report.plot(a.kind, header, rows, a.plot)
    return OK


# parser --------------------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="magiclab",
                                description="Closed distance magic labelings: build, verify, refute.")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("gen", help="edge list for a graph family")
    s.add_argument("family")
    s.add_argument("args", nargs="*")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("construct", help="magic labeling for a family")
    s.add_argument("family")
    s.add_argument("args", nargs="*")
    s.add_argument("-o", "--output", help="labeling file (default stdout)")
    s.add_argument("-g", "--graph", help="also write the graph's edge list here")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("check", help="verify a labeling on a graph")
    s.add_argument("graph", help="edge-list path, '-' or family token")
    s.add_argument("labeling", help="labeling path or '-'")
    s.add_argument("--antimagic", action="store_true", help="test distinct open weights instead")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("spectrum", help="adjacency spectrum with multiplicities")
    s.add_argument("graph", nargs="+", help="edge-list path, '-', family token or family spec")
    s.add_argument("--closed-form", action="store_true", help="use the family's closed form")
    s.add_argument("--tol", type=float, help="clustering tolerance (default MAGICLAB_TOL or 1e-7)")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("feasible", help="theorem-tagged existence verdict")
    s.add_argument("family")
    s.add_argument("args", nargs="*")
    s.set_defaults(func=cmd_feasible)

    s = sub.add_parser("search", help="exhaustive oracle search")
    s.add_argument("graph", help="graph source, or m with --rectangle")
    s.add_argument("extra", nargs="*")
    s.add_argument("--antimagic", action="store_true")
    s.add_argument("--rectangle", action="store_true", help="search for a magic m x n rectangle")
    s.add_argument("--max-vertices", type=int, default=11)
    s.add_argument("--max-cells", type=int, default=16)
    s.add_argument("--node-limit", type=int)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("partition", help="equal-sum partition: k then k sizes")
    s.add_argument("values", nargs="+")
    s.add_argument("--cap", type=int, default=pt.DEFAULT_CAP)
    s.set_defaults(func=cmd_partition)

    s = sub.add_parser("rectangle", help="magic m x n rectangle")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_rectangle)

    s = sub.add_parser("sweep", help="parameter grid as TSV, optionally plotted")
    s.add_argument("kind", choices=["cycles", "cigap", "circulant", "cmxcn"])
    s.add_argument("--max", type=int, help="largest n (or m) in the grid")
    s.add_argument("-o", "--output", help="TSV path (default stdout)")
    s.add_argument("--plot", help="PNG path for a figure")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return a.func(a)
    except (UsageError, fam.FamilyError, gr.GraphError, lb.LabelingError,
            pt.PartitionError, cons.ConstructionError, sp.SpectralError, sp.NoConvergence,
            OSError) as e:
        print(f"magiclab {a.cmd}: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
