"""Command line interface: ``newtonbases <subcommand> -v x,y -f "..." [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .convert import standard_basis_change
from .core import BudgetExceeded, Polynomial, render_rational
from .engine import BasisCandidate, EngineOptions, standard_basis
from .linalg import RankDeficient
from .orderings import OrderingError, classify
from .parser import ParseError, infer_variables, parse_ordering, parse_polynomial, render_ordering
from .polytope import PolyhedronError, newton_polyhedron
from .spectrum import SingularityError, local_basis, milnor_number, spectrum

EXIT_OK, EXIT_MATH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--vars", help="comma separated variable names (default: order of appearance)")
    common.add_argument("-f", "--poly", action="append", required=True,
                        help="polynomial; repeat for several generators")
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--budget", type=int, default=None, help="maximal number of processed pairs")

    p = argparse.ArgumentParser(prog="newtonbases",
                                description="Standard bases for Newton orderings and singularity spectra.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("stdbasis", parents=[common], help="standard basis of the generated ideal")
    s.add_argument("--order", default="ds")
    s = sub.add_parser("convert", parents=[common], help="standard basis change between local orderings")
    s.add_argument("--order", default="ds", help="source ordering")
    s.add_argument("--target-order", required=True)
    s = sub.add_parser("spectrum", parents=[common], help="spectrum of a nondegenerate singularity")
    s.add_argument("--direct", action="store_true", help="run the Newton-ordering engine instead of converting")
    s.add_argument("--assume-nondegenerate", action="store_true")
    s = sub.add_parser("milnor", parents=[common], help="Milnor number at the origin")
    s.add_argument("--order", default="ds")
    sub.add_parser("polytope", parents=[common], help="compact facets of the Newton polyhedron")
    return p


def _read_input(args) -> tuple[list[str], list[Polynomial]]:
    texts = [t for chunk in args.poly for t in chunk.split(";") if t.strip()]
    if not texts:
        raise UsageError("no polynomial given")
    names = [v.strip() for v in args.vars.split(",")] if args.vars else infer_variables(texts)
    if not names or any(not v for v in names) or len(set(names)) != len(names):
        raise UsageError("variable list must be nonempty and free of duplicates")
    return names, [parse_polynomial(t, names) for t in texts]


def _monomial_str(m, names) -> str:
    return Polynomial.monomial(m).render(names)


def _options(args) -> EngineOptions:
    return EngineOptions(max_pairs=args.budget)


def _emit(payload, text_lines, as_json: bool, out):
    if as_json:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _basis_payload(G: BasisCandidate, names):
    o = G.ordering
    items = []
    for p in G.polys:
        lm = o.lead_monomial(p)
        items.append({"poly": p.render(names), "lead": _monomial_str(lm, names)})
    return items


def cmd_stdbasis(args, out):
    names, polys = _read_input(args)
    o = parse_ordering(args.order, len(names))
    c = classify(o)
    if not c.certified:
        raise OrderingError(f"ordering {args.order!r} has no normality certificate")
    polys = [p for p in polys if p]
    if not polys:
        G = BasisCandidate([], o)
    else:
        G = standard_basis(BasisCandidate(polys, o), _options(args))
    items = _basis_payload(G, names)
    payload = {"ordering": render_ordering(o), "basis": items}
    lines = [f"# ordering {render_ordering(o)}"] + [f"{it['poly']}    [lead {it['lead']}]" for it in items]
    _emit(payload, lines, args.json, out)


def cmd_convert(args, out):
    names, polys = _read_input(args)
    n = len(names)
    src = parse_ordering(args.order, n)
    tgt = parse_ordering(args.target_order, n)
    G = local_basis(polys, src, _options(args))
    res = standard_basis_change(G, tgt)
    items = _basis_payload(res.basis, names)
    stair = [_monomial_str(m, names) for m in tgt.sorted_desc(res.staircase)]
    payload = {"source": render_ordering(src), "target": render_ordering(tgt),
               "basis": items, "staircase": stair, "dimension": len(stair)}
    lines = [f"# {render_ordering(src)} -> {render_ordering(tgt)}"]
    lines += [f"{it['poly']}    [lead {it['lead']}]" for it in items]
    lines.append(f"# staircase ({len(stair)}): " + ", ".join(stair))
    _emit(payload, lines, args.json, out)


def _series(entries) -> str:
    parts = []
    for v, m in entries:
        coeff = "" if m == 1 else f"{m}*"
        parts.append(f"{coeff}t^({render_rational(v)})")
    return " + ".join(parts) if parts else "0"


def cmd_spectrum(args, out):
    names, polys = _read_input(args)
    if len(polys) != 1:
        raise UsageError("spectrum takes exactly one polynomial")
    S = spectrum(polys[0], direct=args.direct, assume_nondegenerate=args.assume_nondegenerate,
                 options=_options(args))
    payload = {
        "spectrum": [{"value": render_rational(v), "mult": m} for v, m in S.entries],
        "milnor": S.milnor,
        "pg": S.geometric_genus,
        "nondegenerate": S.nondegenerate,
        "verified": S.verified,
        "ordering": render_ordering(S.ordering_used),
        "convenientized": None if S.convenientized is None else S.convenientized.render(names),
        "warnings": S.warnings,
    }
    lines = [f"spectrum: {_series(S.entries)}",
             f"milnor number: {S.milnor}",
             f"geometric genus (count of spectral numbers <= 1): {S.geometric_genus}",
             f"nondegenerate: {'assumed, not verified' if not S.verified else S.nondegenerate}"]
    if S.convenientized is not None:
        lines.append(f"convenientized input: {S.convenientized.render(names)}")
    lines += [f"warning: {w}" for w in S.warnings]
    _emit(payload, lines, args.json, out)


def cmd_milnor(args, out):
    names, polys = _read_input(args)
    if len(polys) != 1:
        raise UsageError("milnor takes exactly one polynomial")
    o = parse_ordering(args.order, len(names))
    mu = milnor_number(polys[0], o, _options(args))
    _emit({"milnor": mu, "ordering": render_ordering(o)}, [str(mu)], args.json, out)


def cmd_polytope(args, out):
    names, polys = _read_input(args)
    if len(polys) != 1:
        raise UsageError("polytope takes exactly one polynomial")
    f = polys[0]
    P = newton_polyhedron(f)
    facets = [F.to_json() for F in P.compact_facets]
    if args.json:
        _emit({"facets": facets}, [], True, out)
    else:
        lines = [f"{len(facets)} compact facet(s)"]
        for F in facets:
            lines.append(f"form [{', '.join(F['form'])}]  points {F['face_points']}")
        _emit(None, lines, False, out)


COMMANDS = {"stdbasis": cmd_stdbasis, "convert": cmd_convert, "spectrum": cmd_spectrum,
            "milnor": cmd_milnor, "polytope": cmd_polytope}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        COMMANDS[args.command](args, out)
    except (ParseError, UsageError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (SingularityError, PolyhedronError, OrderingError, BudgetExceeded,
            RankDeficient) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_MATH
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_MATH
    return EXIT_OK


def main() -> None:
    sys.exit(run())
