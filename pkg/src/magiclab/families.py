"""Graph family specs shared by the CLI.

A spec is a family name followed by integer arguments.  Where a family takes
another graph as an argument (strong, linegraph, blowup, knxg) that graph is
written as one token with ':' between fields and ',' inside step lists, e.g.
"cycle:5" or "circulant:8:1,3,4".
"""

from . import graph as gr
from . import spectral as sp

FAMILIES = ("cycle", "complete", "kmn", "circulant", "ckn", "strong",
            "linegraph", "blowup", "cmxcn", "knxg", "petersen")


class FamilyError(ValueError):
    pass


def split_token(tok):
    return [t for part in tok.split(":") for t in part.split(",") if t]


def _ints(args, count=None, name=""):
    try:
        vals = [int(a) for a in args]
    except ValueError:
        raise FamilyError(f"{name}: expected integers, got {' '.join(args)}") from None
    if count is not None and len(vals) != count:
        raise FamilyError(f"{name}: expected {count} integer(s), got {len(vals)}")
    return vals


def build(tokens):
    """Graph for a spec given as a token list."""
    if not tokens:
        raise FamilyError("missing family name")
    name, args = tokens[0], list(tokens[1:])
    try:
        return _build(name, args)
    except gr.GraphError as e:
        raise FamilyError(f"{name}: {e}") from None


def build_token(tok):
    return build(split_token(tok))


def _build(name, args):
    if name == "cycle":
        return gr.cycle(*_ints(args, 1, name))
    if name == "complete":
        return gr.complete(*_ints(args, 1, name))
    if name == "kmn":
        return gr.complete_bipartite(*_ints(args, 2, name))
    if name == "circulant":
        vals = _ints(args, None, name)
        if len(vals) < 2:
            raise FamilyError("circulant: expected n and at least one step")
        return gr.circulant(vals[0], vals[1:])
    if name == "ckn":
        c, n = _ints(args, 2, name)
        return gr.disjoint_copies(c, gr.complete(n))
    if name == "cmxcn":
        m, n = _ints(args, 2, name)
        return gr.strong_product(gr.cycle(m), gr.cycle(n))
    if name == "petersen":
        _ints(args, 0, name)
        return gr.petersen()
    if name == "strong":
        if len(args) != 2:
            raise FamilyError("strong: expected two graph tokens")
        return gr.strong_product(build_token(args[0]), build_token(args[1]))
    if name == "linegraph":
        if len(args) != 1:
            raise FamilyError("linegraph: expected one graph token")
        return gr.line_graph(build_token(args[0]))
    if name == "blowup":
        if len(args) < 2:
            raise FamilyError("blowup: expected a base token and sizes")
        return gr.blow_up(build_token(args[0]), _ints(args[1:], None, name))
    if name == "knxg":
        if len(args) != 2:
            raise FamilyError("knxg: expected n and a graph token")
        (nk,) = _ints(args[:1], 1, name)
        return gr.strong_product(gr.complete(nk), build_token(args[1]))
    raise FamilyError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def closed_form(tokens, tol=None):
    """Closed-form spectrum for families that have one."""
    if not tokens:
        raise FamilyError("missing family name")
    name, args = tokens[0], list(tokens[1:])
    try:
        if name == "cycle":
            return sp.cycle_spectrum(*_ints(args, 1, name), tol=tol)
        if name == "complete":
            return sp.complete_spectrum(*_ints(args, 1, name), tol=tol)
        if name == "kmn":
            return sp.complete_bipartite_spectrum(*_ints(args, 2, name), tol=tol)
        if name == "circulant":
            vals = _ints(args, None, name)
            if len(vals) < 2:
                raise FamilyError("circulant: expected n and at least one step")
            return sp.circulant_spectrum(vals[0], vals[1:], tol=tol)
        if name == "cmxcn":
            m, n = _ints(args, 2, name)
            return sp.strong_product_spectrum(sp.cycle_spectrum(m), sp.cycle_spectrum(n), tol=tol)
        if name == "strong":
            if len(args) != 2:
                raise FamilyError("strong: expected two graph tokens")
            a, b = (closed_form(split_token(t)) for t in args)
            return sp.strong_product_spectrum(a, b, tol=tol)
    except sp.SpectralError as e:
        raise FamilyError(f"{name}: {e}") from None
    raise FamilyError(f"no closed form for {name!r}")
