"""Command-line front end.

    kummer-cones cone --n 6
    kummer-cones chambers --n 18 --end-a-z --format json
    kummer-cones walls --n 1 --count 3
    kummer-cones pell --n 6 --l 3 --count 4
    kummer-cones table --n 1..30 --format csv
    kummer-cones verify --n 1..50 --l 3,4 --bound auto --jobs 4

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import cones, pell
from .errors import KummerConeError, TrivialPell, UnsupportedNef
from .mukai import MukaiVector
from .oracle import DEFAULT_BOUND
from .verify import PASS, verify_range

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


# -- serialization ----------------------------------------------------------

def frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def ints(*xs: int) -> list[str]:
    return [str(x) for x in xs]


def ray_json(ray: cones.Ray) -> list[str]:
    return ints(ray.p, ray.q)


def cone_json(cone: cones.Cone) -> list[list[str]]:
    return [ray_json(cone.left), ray_json(cone.right)]


def vector_json(u: MukaiVector | None) -> list[str] | None:
    return None if u is None else ints(u.r, u.c, u.a)


def boundary_json(rep: cones.BoundaryReport, p: pell.SurfaceParams) -> dict:
    return {
        "cone": cone_json(rep.cone),
        "boundary_ray": ray_json(rep.ray),
        "slope": frac(rep.boundary_slope),
        "u": vector_json(rep.u),
        "d": None if rep.d is None else str(rep.d),
        "pell_index": None if rep.pell_index is None else str(rep.pell_index),
        "source": None if rep.source is None else ints(*rep.source),
        "bb_square": str(rep.ray.square(p)),
    }


def document(kind: str, n, l, payload: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "params": {"n": None if n is None else str(n), "l": str(l)},
        "kind": kind,
        "payload": payload,
    }


def parse_n_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            r = range(int(lo), int(hi) + 1)
        else:
            r = range(int(text), int(text) + 1)
    except ValueError:
        raise UsageError(f"bad n range {text!r}; expected N or A..B") from None
    if len(r) == 0 or r.start < 1:
        raise UsageError(f"empty or non-positive n range {text!r}")
    return r


def _single_n(args) -> int:
    r = _n_values(args)
    if len(r) != 1:
        raise UsageError("this command takes a single --n")
    return r[0]


def _n_values(args) -> range:
    text = args.n_range or args.n
    if text is None:
        raise UsageError("--n is required")
    return parse_n_range(text)


def _ray_text(ray: cones.Ray) -> str:
    p = "h" if ray.p == 1 else f"{ray.p}h"
    if ray.q == 0:
        return p
    mag = "delta" if abs(ray.q) == 1 else f"{abs(ray.q)}delta"
    return f"{p} {'-' if ray.q < 0 else '+'} {mag}"


def _fmt_vector(u) -> str:
    if u is None:
        return "-"
    return "(" + ", ".join(u) + ")"


# -- commands ---------------------------------------------------------------

def cmd_cone(args) -> tuple[dict, str]:
    n, l = _single_n(args), args.l[0]
    p = pell.SurfaceParams(n, l)
    which = args.which
    if which == "auto":
        which = "both" if l == 3 else "movable"
    if which in ("nef", "both") and l != 3:
        raise UnsupportedNef(f"nef cones are only computed for l = 3, got l = {l}")
    payload: dict = {}
    if l == 3:
        payload["row"] = cones.classify_km2(n).value
        payload["nef_equals_movable_criterion"] = cones.nef_equals_movable_criterion(n)
    lines = [f"n = {n}, l = {l}"]
    if "row" in payload:
        lines.append(f"table row: {payload['row']}")
    reports = {}
    if which in ("nef", "both"):
        reports["nef"] = cones.nef_boundary_km2(n)
    if which in ("movable", "both"):
        reports["movable"] = (
            cones.movable_boundary_km2(n) if l == 3 else cones.movable_boundary_general(n, l)
        )
    for name, rep in reports.items():
        payload[name] = boundary_json(rep, p)
        d = "-" if rep.d is None else rep.d
        lines.append(
            f"{name:8s} [h, {_ray_text(rep.ray)}]  slope {frac(rep.boundary_slope)}"
            f"  u = {_fmt_vector(vector_json(rep.u))}  d = {d}"
        )
    if len(reports) == 2:
        payload["nef_equals_movable"] = reports["nef"].cone == reports["movable"].cone
        lines.append(f"nef = mov: {payload['nef_equals_movable']}")
    return document("cone", n, l, payload), "\n".join(lines)


def cmd_chambers(args) -> tuple[dict, str]:
    n = _single_n(args)
    if args.l[0] != 3:
        raise UsageError("chamber decompositions are only computed for l = 3")
    chambers = cones.chamber_decomposition_km2(n, end_A_is_Z=args.end_a_z)
    rows = []
    lines = [f"n = {n}: {len(chambers)} chamber(s), End(A) = Z assumed: {args.end_a_z}"]
    for c in chambers:
        rows.append(
            {
                "index": str(c.index),
                "cone": cone_json(c.cone),
                "slopes": [frac(c.cone.left.slope), frac(c.cone.right.slope)],
                "model": c.model.value,
                "u": vector_json(c.u),
                "iso_to_original": c.iso_to_original,
            }
        )
        lines.append(
            f"C{c.index}: slopes {frac(c.cone.left.slope)} .. {frac(c.cone.right.slope)}  "
            f"{c.model.value}  u = {_fmt_vector(vector_json(c.u))}  iso: {c.iso_to_original or '-'}"
        )
    payload = {"row": cones.classify_km2(n).value, "end_a_is_z": args.end_a_z, "chambers": rows}
    return document("chambers", n, 3, payload), "\n".join(lines)


def cmd_walls(args) -> tuple[dict, str]:
    n = _single_n(args)
    walls = cones.wall_sequence(n, args.count)
    rows = []
    lines = [f"n = {n}: walls h - Q delta"]
    for s, q, rep in walls:
        rows.append(
            {
                "k": str(s.k),
                "X": str(s.X),
                "Y": str(s.Y),
                "slope": frac(q),
                "u": vector_json(rep.u) if rep else None,
                "d": str(rep.d) if rep else None,
            }
        )
        tail = f"u = {_fmt_vector(vector_json(rep.u))} d = {rep.d}" if rep else "no admissible u"
        lines.append(f"k={s.k:<3d} Q = {frac(q):<20s} {tail}")
    return document("walls", n, 3, {"walls": rows}), "\n".join(lines)


def cmd_pell(args) -> tuple[dict, str]:
    n, l = _single_n(args), args.l[0]
    p = pell.SurfaceParams(n, l)
    if pell.is_trivial_pell(p):
        payload = {"trivial": True, "fundamental": None, "solutions": [ints(0, 1)]}
        text = f"{l}Y^2 - {n}X^2 = {l}: only (0, +-1)"
        return document("pell", n, l, payload), text
    seq = pell.solution_sequence(p, args.count)
    payload = {
        "trivial": False,
        "fundamental": ints(*pell.fundamental_solution(p).pair),
        "solutions": [ints(s.X, s.Y) for s in seq],
    }
    lines = [f"{l}Y^2 - {n}X^2 = {l}"] + [f"k={s.k:<3d} X = {s.X}  Y = {s.Y}" for s in seq]
    return document("pell", n, l, payload), "\n".join(lines)


TABLE_FIELDS = ["n", "row", "X1", "Y1", "nef_slope", "movable_slope"]


def cmd_table(args) -> tuple[dict, str]:
    rows = []
    for n in _n_values(args):
        p = pell.SurfaceParams(n, 3)
        f = None if pell.is_trivial_pell(p) else pell.fundamental_solution(p)
        nef, mov = cones.table_boundary_slopes(n)
        rows.append(
            {
                "n": str(n),
                "row": cones.classify_km2(n).value,
                "X1": None if f is None else str(f.X),
                "Y1": None if f is None else str(f.Y),
                "nef_slope": frac(nef),
                "movable_slope": frac(mov),
            }
        )
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: "" if v is None else v for k, v in row.items()})
        text = buf.getvalue().rstrip("\n")
    else:
        header = f"{'n':>5} {'row':24s} {'X1':>14} {'Y1':>14} {'nef':>18} {'mov':>18}"
        text = "\n".join(
            [header]
            + [
                f"{r['n']:>5} {r['row']:24s} {r['X1'] or '-':>14} {r['Y1'] or '-':>14} "
                f"{r['nef_slope']:>18} {r['movable_slope']:>18}"
                for r in rows
            ]
        )
    return document("table", None, 3, {"rows": rows}), text


def cmd_verify(args) -> tuple[dict, str]:
    ns = _n_values(args)
    bound = None if args.bound == "auto" else int(args.bound)
    verdicts = verify_range(ns, args.l, bound=bound, jobs=args.jobs)
    rows = [
        {
            "n": str(v.n),
            "l": str(v.l),
            "verdict": v.status,
            "checks": v.checks,
            "details": v.details,
        }
        for v in verdicts
    ]
    lines = []
    for v in verdicts:
        lines.append(f"n={v.n:<5d} l={v.l:<3d} {v.status}")
        lines.extend(f"    {d}" for d in v.details)
    passed = sum(v.status == PASS for v in verdicts)
    lines.append(f"{passed}/{len(verdicts)} pass")
    payload = {"bound": args.bound, "rows": rows, "all_pass": passed == len(verdicts)}
    return document("verify", None, ",".join(map(str, args.l)), payload), "\n".join(lines)


COMMANDS = {
    "cone": cmd_cone,
    "chambers": cmd_chambers,
    "walls": cmd_walls,
    "pell": cmd_pell,
    "table": cmd_table,
    "verify": cmd_verify,
}


def _l_list(text: str) -> list[int]:
    try:
        ls = [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad l list {text!r}") from None
    if not ls or any(l < 3 for l in ls):
        raise argparse.ArgumentTypeError("every l must be at least 3")
    return ls


def _bound(text: str) -> str:
    if text == "auto":
        return text
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad bound {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("bound must be positive")
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummer-cones",
        description="Nef and movable cones of generalized Kummer manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats=("text", "json")):
        sp.add_argument("--n", help="N, or a range A..B where the command allows one")
        sp.add_argument("--n-range", help="range A..B (same as --n A..B)")
        sp.add_argument("--l", type=_l_list, default=[3], help="Kummer index l (default 3)")
        sp.add_argument("--format", choices=formats, default="text")

    sp = sub.add_parser("cone", help="nef and movable boundary")
    common(sp)
    sp.add_argument("--which", choices=("auto", "nef", "movable", "both"), default="auto")

    sp = sub.add_parser("chambers", help="chamber decomposition of Mov(Km^2(A))")
    common(sp)
    sp.add_argument("--end-a-z", action="store_true", help="assume End(A) = Z")

    sp = sub.add_parser("walls", help="walls from successive Pell solutions")
    common(sp)
    sp.add_argument("--count", type=int, default=3)

    sp = sub.add_parser("pell", help="Pell solutions of lY^2 - nX^2 = l")
    common(sp)
    sp.add_argument("--count", type=int, default=3)

    sp = sub.add_parser("table", help="classification table over a range of n")
    common(sp, formats=("text", "json", "csv"))

    sp = sub.add_parser("verify", help="cross-check against brute force")
    common(sp)
    sp.add_argument("--bound", type=_bound, default=str(DEFAULT_BOUND),
                    help="component bound for the oracle, or 'auto'")
    sp.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "count", 0) < 0:
        parser.error("--count must be nonnegative")
    try:
        doc, text = COMMANDS[args.command](args)
    except (UsageError, UnsupportedNef, TrivialPell) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except KummerConeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)
    if args.command == "verify":
        return 0 if doc["payload"]["all_pass"] else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
