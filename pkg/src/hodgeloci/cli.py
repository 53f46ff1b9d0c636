"""Command-line front end.

Every subcommand prints one JSON document (``"schema": "1"``) unless a table
format is requested.  Exit status: 0 success, 1 a mathematical failure such
as a singular hypersurface, 2 a usage error.
"""

import argparse
import csv
import io
import json
import re
import sys
import time

from . import enumerative, fermat_hodge, kloosterman, singular_cubics
from .errors import HodgeLociError, MathError
from .gradedideal import GradedIdeal, colon_hilbert_function, colon_piece
from .numberfield import CycNum, cyclotomic_field
from .polyring import PolyRing, print_poly

SCHEMA = "1"
LONG_RUNNING_N = 10


class UsageError(Exception):
    pass


# --- argument helpers ----------------------------------------------------------


def parse_n_list(text):
    """``4..12`` (even values), ``4,6,8`` or a single integer."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo, hi = int(lo), int(hi)
            out.extend(range(lo + lo % 2, hi + 1, 2))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"no values in {text!r}")
    return out


def _n_list_type(text):
    try:
        return parse_n_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n list {text!r}") from None


def _ring(nvars, m):
    if nvars < 1:
        raise UsageError("the ring needs at least one variable")
    return PolyRing(nvars, cyclotomic_field(m))


def _point(text, field):
    return tuple(CycNum.coerce(field, c.strip()) for c in text.split(","))


def _polys(text, ring):
    return [ring.parse(t) for t in text.split(",") if t.strip()]


def _max_index(*texts):
    found = [int(m) for t in texts for m in re.findall(r"x(\d+)", t)]
    return max(found) if found else 0


def _emit(obj):
    return json.dumps(obj, indent=2) + "\n"


# --- subcommands ------------------------------------------------------------------

TABLE_COLUMNS = ("n", "dimT", "range", "L", "CS", "M", "QS", "V", "hodge")
TABLE_HEADER = ("n", "dim(T)", "range of codimensions", "L", "CS", "M", "QS", "V", "Hodge numbers")


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def render_table(rows, fmt):
    dicts = [r.as_dict() for r in rows]
    if fmt == "json":
        if len(dicts) == 1:
            return _emit({"schema": SCHEMA, **dicts[0]})
        return _emit({"schema": SCHEMA, "rows": dicts})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TABLE_COLUMNS)
        for d in dicts:
            w.writerow([_cell(d[c]) for c in TABLE_COLUMNS])
        return buf.getvalue()
    lines = ["| " + " | ".join(TABLE_HEADER) + " |", "|" + "---|" * len(TABLE_HEADER)]
    for d in dicts:
        lines.append("| " + " | ".join(_cell(d[c]) for c in TABLE_COLUMNS) + " |")
    lines.append("")
    lines.append("CS, QS, V: stored constants from the published table; all other columns computed.")
    return "\n".join(lines) + "\n"


def cmd_table(args):
    return render_table(enumerative.table1(args.n), args.format)


def cmd_tangent(args):
    spec = fermat_hodge.LinearCycleSpec(args.n, 3, args.alpha)
    report = fermat_hodge.prop_A1_report(spec, args.r, args.rr).as_dict()
    report.update(schema=SCHEMA, alpha=args.alpha, provenance="computed")
    return _emit(report)


def cmd_kloosterman(args):
    if args.n >= LONG_RUNNING_N and not args.long_running:
        raise UsageError(f"n >= {LONG_RUNNING_N} is long-running: pass --long-running")
    spec = kloosterman.FamilySpec(args.n, args.source, args.a, args.b, args.seed, args.alpha,
                                  kloosterman_overflow=args.overflow)
    t0 = time.perf_counter()
    prepared = kloosterman.prepare(spec, args.route)
    report = kloosterman.rank_pipeline(spec, threads=args.threads, prepared=prepared)
    out = report.as_dict(timing=False)
    if args.stacked:
        out["stacked_rank"] = kloosterman.stacked_rank(spec, threads=args.threads, prepared=prepared)
    out["provenance"] = {"rank": "computed", "stacked_rank": "computed",
                         "expected": "closed form", "smoothness": "certified"}
    if args.timing:
        out["wall_time_ms"] = int(1000 * (time.perf_counter() - t0))
    return _emit(out)


def cmd_hodge_numbers(args):
    h = fermat_hodge.hodge_numbers(args.n, args.d)
    return _emit({"schema": SCHEMA, "n": args.n, "d": args.d, "hodge": h, "provenance": "computed"})


def cmd_fano(args):
    dlist = args.degrees if args.degrees else [args.d] * args.r
    rep = enumerative.fano_report(args.n, args.r, dlist, args.k).as_dict()
    rep.update(schema=SCHEMA, provenance="computed")
    return _emit(rep)


def cmd_colon(args):
    nvars = args.nvars or _max_index(args.ideal, args.poly) + 1
    ring = _ring(nvars, args.field)
    I = GradedIdeal(ring, _polys(args.ideal, ring))
    P = ring.parse(args.poly)
    out = {"schema": SCHEMA, "nvars": nvars, "field": args.field}
    if args.degree is not None:
        sub = colon_piece(I, P, args.degree)
        out.update(degree=args.degree, dim=sub.dim, codim=sub.codim)
        if args.basis:
            out["basis"] = [print_poly(g) for g in fermat_hodge.subspace_polys(ring, sub, args.degree)]
    if args.hilbert is not None:
        hf = colon_hilbert_function(I, P, args.hilbert)
        out.update(hilbert=list(hf.values), symmetric=hf.is_symmetric())
    out["provenance"] = "computed"
    return _emit(out)


def cmd_singular_cubic(args):
    field = cyclotomic_field(args.field)
    nvars = args.nvars
    if args.p:
        p = _point(args.p, field)
        nvars = nvars or len(p)
    else:
        p = None
        nvars = nvars or _max_index(args.f) + 1
    ring = _ring(nvars, args.field)
    f = ring.parse(args.f)
    sc = singular_cubics.decompose(f, p)
    out = {
        "schema": SCHEMA,
        "f": print_poly(f),
        "p": [str(c) for c in sc.p],
        "classification": "cone" if sc.is_cone else "birational",
        "f2": print_poly(sc.f2),
        "f3": print_poly(sc.f3),
        "chart": [print_poly(im) for im in sc.images],
        "sing_equations": [print_poly(g) for g in singular_cubics.sing_equations(sc)],
    }
    if not sc.is_cone:
        out["birational_map"] = [print_poly(g) for g in singular_cubics.birational_map(sc)]
        out["pullback_is_zero"] = singular_cubics.pullback(sc).is_zero()
    if args.q:
        out["line_through_p_q_in_X"] = singular_cubics.line_through_sings(f, sc.p, _point(args.q, field))
    out["provenance"] = "computed"
    return _emit(out)


# --- parser -----------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(prog="hodgeloci", description="Hodge loci of cubic hypersurfaces")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="codimension table for cubic n-folds")
    p.add_argument("--n", "-n", type=_n_list_type, default=[4, 6, 8, 10, 12],
                   help="even dimensions: 4..12, 4,6 or 8 (default 4..12)")
    p.add_argument("--format", choices=("json", "md", "csv"), default="json")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("tangent", help="tangent spaces of V_Z and V_[Z] at the Fermat cubic")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--rr", type=int, default=1)
    p.add_argument("--alpha", type=int, default=3)
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("kloosterman", help="rank of the period matrix for two linear cycles")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--source", choices=kloosterman.SOURCES, default="fermat")
    p.add_argument("--seed", type=int, default=2, help="random source only (seed 0 happens to be singular)")
    p.add_argument("--alpha", type=int, default=3)
    p.add_argument("--overflow", choices=("wrap", "drop"), default="wrap",
                   help="variable indices past x{n+1} in the kloosterman source")
    p.add_argument("--route", choices=("auto", "direct", "dual"), default="auto",
                   help="multiply from degree 3 (direct) or from the Gorenstein-dual degree")
    p.add_argument("--stacked", action="store_true", help="also report the stacked (1,0)/(0,1) rank")
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes (default: HODGELOCI_THREADS or 1)")
    p.add_argument("--long-running", action="store_true", help=f"allow n >= {LONG_RUNNING_N}")
    p.add_argument("--timing", action="store_true", help="add wall_time_ms to the report")
    p.set_defaults(func=cmd_kloosterman)

    p = sub.add_parser("hodge-numbers", help="Hodge numbers of a smooth degree-d n-fold")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, default=3)
    p.set_defaults(func=cmd_hodge_numbers)

    p = sub.add_parser("fano", help="expected dimension of k-planes in a complete intersection")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-r", type=int, default=1, help="codimension (number of equations)")
    p.add_argument("-d", type=int, default=3, help="common degree of the equations")
    p.add_argument("--degrees", type=lambda s: [int(x) for x in s.split(",")], default=None,
                   help="explicit degree list, overrides -d")
    p.set_defaults(func=cmd_fano)

    p = sub.add_parser("colon", help="graded pieces of the ideal quotient (I : P)")
    p.add_argument("--ideal", required=True, help="comma-separated generators")
    p.add_argument("--poly", required=True)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--hilbert", type=int, default=None, help="Hilbert function of R/(I:P) up to this degree")
    p.add_argument("--nvars", type=int, default=None)
    p.add_argument("--field", type=int, default=1, help="cyclotomic conductor m (z is a primitive m-th root)")
    p.add_argument("--basis", action="store_true")
    p.set_defaults(func=cmd_colon)

    p = sub.add_parser("singular-cubic", help="cone or birational decomposition at a singular point")
    p.add_argument("--f", required=True)
    p.add_argument("--p", default=None, help="comma-separated coordinates (default [1:0:...:0])")
    p.add_argument("--q", default=None, help="second singular point for the line test")
    p.add_argument("--nvars", type=int, default=None)
    p.add_argument("--field", type=int, default=1)
    p.set_defaults(func=cmd_singular_cubic)
    return ap


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command == "colon" and args.degree is None and args.hilbert is None:
        print("colon: give --degree and/or --hilbert", file=sys.stderr)
        return 2
    try:
        stdout.write(args.func(args))
    except MathError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (UsageError, HodgeLociError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    return 0

def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
