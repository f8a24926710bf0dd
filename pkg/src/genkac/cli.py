"""Command-line entry point: one-shot computations and verification suites."""
import argparse
import json
import sys

from . import delta, funm, loop, parse, sl2, suites, virasoro
from .errors import GenkacError, ParseError, UnknownSuite
from .funm import FunM
from .loop import GvElem
from .sl3 import bracket_sl3

USAGE_ERROR = 2


def _out(text):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _bracket(args):
    if args.algebra == "gv":
        x, y = parse.parse(args.x, "gv"), parse.parse(args.y, "gv")
        return parse.to_text(loop.bracket_gv(x, y))
    if args.algebra == "vir":
        f, g = (_hamiltonian(s) for s in (args.x, args.y))
        return parse.to_text(virasoro.bracket_vir(f, g))
    if args.algebra == "sl3":
        return parse.to_text(bracket_sl3(parse.parse(args.x, "sl3"), parse.parse(args.y, "sl3")))
    x, y = parse.parse(args.x, "aff"), parse.parse(args.y, "aff")
    return parse.to_text(sl2.affine_bracket_sl2(x, y))


def _hamiltonian(src):
    v = parse.parse(src)
    return v if isinstance(v, virasoro.VirElem) else virasoro.VirElem(parse.parse(src, "funm"))


def _grade(args):
    v = parse.parse(args.expr)
    d = loop.grade_gv(v) if isinstance(v, GvElem) else funm.bidegree(parse.parse(args.expr, "funm"))
    return f"{d[0]},{d[1]}"


def _w0(args):
    v = parse.parse(args.expr)
    if isinstance(v, GvElem):
        return parse.to_text(loop.involution_gv(v))
    return parse.to_text(funm.weyl_substitute(parse.parse(args.expr, "funm")))


def _dual(args):
    d = delta.dual_basis(delta.Window.parse(args.window))
    if args.format == "json":
        return json.dumps(d.to_json())
    return "\n".join(f"{funm.to_text(FunM.mono(*e))} -> {funm.to_text(dual)}" for e, dual in d.pairs)


def _delta(args):
    f = parse.parse(args.expr, "funm")
    d = delta.dual_basis(delta.Window.parse(args.window))
    out = delta.delta_residue(f, d) if args.literal else delta.reproduce(f, d)
    return funm.to_text(out)


def _expand(args):
    rep = delta.expand_F_report(args.order, args.region, args.split)
    if args.format == "json":
        return json.dumps(rep, sort_keys=True, indent=2)
    lines = [f"order {rep['order']}, region {rep['region']}, split {rep['split']}, "
             f"split is an identity: {rep['split_is_identity']}"]
    for r in rep["rows"]:
        mark = "=" if r["equal"] else "!="
        lines.append(f"w^[{r['term']}]: {r['lhs']}  {mark}  {r['rhs']}"
                     + ("" if r["complete"] else "  (truncated)"))
    return "\n".join(lines)


def _verify(args):
    if args.list:
        _out("\n".join(suites.all_suites()))
        return 0
    names = suites.all_suites() if args.all else [args.suite]
    if not names or names == [None]:
        raise UnknownSuite("give a suite name or --all")
    code = 0
    reports = []
    for name in names:
        r = suites.run_suite(name, args.seed, args.cases)
        body, status = suites.emit_report(r, args.format)
        code = max(code, status)
        if args.format == "json":
            reports.append(r.to_json())
        else:
            sys.stdout.write(body.decode())
    if args.format == "json":
        _out(json.dumps(reports[0] if len(reports) == 1 else reports, sort_keys=True, indent=2))
    return code


def build_parser():
    p = argparse.ArgumentParser(prog="genkac", description="Exact computations on Fun(M), g^V and the generalized Virasoro algebra.")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("eval", help="normalize an expression")
    s.add_argument("expr")
    s.add_argument("--format", choices=["text", "list"], default="text")

    s = sub.add_parser("bracket", help="Lie bracket of two elements")
    s.add_argument("--algebra", choices=["gv", "vir", "sl3", "sl2"], default="gv")
    s.add_argument("x")
    s.add_argument("y")

    s = sub.add_parser("residue", help="coefficient of 1/(c q)")
    s.add_argument("expr")

    s = sub.add_parser("pair", help="residue pairing Res(f g)")
    s.add_argument("f")
    s.add_argument("g")

    s = sub.add_parser("act", help="apply the sl3 operator of x")
    s.add_argument("--x", required=True, help="sl3 element, e.g. e1 or 'h1 + 2 e3'")
    s.add_argument("expr")

    s = sub.add_parser("grade", help="bidegree of a homogeneous element")
    s.add_argument("expr")

    s = sub.add_parser("w0", help="Weyl substitution (or the involution on loop elements)")
    s.add_argument("expr")

    s = sub.add_parser("dual", help="dual basis over a window")
    s.add_argument("--window", required=True, help="N,M,Kmin,Kmax,Lmin,Lmax")
    s.add_argument("--format", choices=["text", "json"], default="text")

    s = sub.add_parser("delta", help="truncated Res_z f(z) delta(z - w)")
    s.add_argument("expr")
    s.add_argument("--window", default="4,4,0,4,-5,4")
    s.add_argument("--literal", action="store_true", help="use the unprojected two-sided sum")

    s = sub.add_parser("expand-f", help="expansion of F(z, w) against the dual-basis delta")
    s.add_argument("--order", type=int, default=2)
    s.add_argument("--region", choices=["d1", "d2"], default="d1")
    s.add_argument("--split", choices=["two-term", "exact", "alt"], default="two-term")
    s.add_argument("--format", choices=["text", "json"], default="text")

    s = sub.add_parser("verify", help="run verification suites")
    s.add_argument("suite", nargs="?")
    s.add_argument("--all", action="store_true")
    s.add_argument("--list", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cases", type=int, default=None,
                   help="random inputs per suite; reports count the individual checks")
    s.add_argument("--format", choices=["json", "text"], default="json")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "verify":
            return _verify(args)
        if args.cmd == "eval":
            v = parse.parse(args.expr)
            if args.format == "list" and isinstance(v, FunM):
                _out(json.dumps(funm.to_list(v)))
            else:
                _out(parse.to_text(v))
        elif args.cmd == "bracket":
            _out(_bracket(args))
        elif args.cmd == "residue":
            _out(funm._fmt_rat(funm.residue(parse.parse(args.expr, "funm"))))
        elif args.cmd == "pair":
            _out(funm._fmt_rat(funm.pair(parse.parse(args.f, "funm"), parse.parse(args.g, "funm"))))
        elif args.cmd == "act":
            x = parse.parse(args.x, "sl3")
            _out(funm.to_text(funm.sl3_act(dict(x.items()), parse.parse(args.expr, "funm"))))
        elif args.cmd == "grade":
            _out(_grade(args))
        elif args.cmd == "w0":
            _out(_w0(args))
        elif args.cmd == "dual":
            _out(_dual(args))
        elif args.cmd == "delta":
            _out(_delta(args))
        elif args.cmd == "expand-f":
            _out(_expand(args))
    except (ParseError, UnknownSuite, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except GenkacError as exc:
        sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
