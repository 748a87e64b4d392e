"""Command line entry point ``origami-lab``.

Exit status: 0 on success, 2 when a verification fails, 1 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import core, curves, intersect
from . import elliptic as ell
from .autos import affine_autos, fixed_points, w_automorphisms
from .errors import OrigamiError
from .veech import veech_group
from .wsuite import w_report

BUILTINS = {
    "W": core.quaternion_origami,
    "L": lambda: core.make_origami([1, 0, 2], [2, 1, 0], "L"),
    "W/2": lambda: core.torus_grid(2),
}


class InputError(Exception):
    pass


def cjson(z) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "").replace("I", "j").replace("i", "j")
    if t.endswith("j") and (t == "j" or t[-2] in "+-"):
        t = t[:-1] + "1j"
    try:
        if "/" in t and "j" not in t:
            return complex(Fraction(t))
        return complex(t)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot read {text!r} as a complex number") from exc


def load_origami(args) -> core.Origami:
    if args.file and args.builtin:
        raise InputError("use either --builtin or --file")
    if args.file:
        try:
            return core.loads(Path(args.file).read_text())
        except OSError as exc:
            raise InputError(str(exc)) from exc
    name = args.builtin or "W"
    if name.startswith("E") and name[1:].isdigit():
        return core.torus_grid(int(name[1:]))
    if name not in BUILTINS:
        raise InputError(f"unknown builtin {name!r}; choose from {sorted(BUILTINS)} or E<n>")
    return BUILTINS[name]()


# ---------------------------------------------------------------------------
# commands; each returns (payload, ok)

def cmd_info(args):
    o = load_origami(args)
    prof = core.singularity_profile(o)
    return {
        "name": o.name,
        "n": o.n,
        "genus": core.genus(o),
        "vertices": prof.vertex_count,
        "stratum": list(prof.singular_orders),
        "cone_orders": list(prof.cone_orders),
        "horizontal_cylinders": [list(c) for c in core.horizontal_cylinders(o).cylinders],
        "vertical_cylinders": [list(c) for c in core.vertical_cylinders(o).cylinders],
        "cycles": core.to_cycle_text(o),
    }, True


def cmd_veech(args):
    o = load_origami(args)
    return veech_group(o).to_json(), True


def cmd_autos(args):
    o = load_origami(args)
    names = {}
    if core.is_isomorphic(o, core.quaternion_origami()) and args.builtin in (None, "W"):
        names = {a: n for n, a in w_automorphisms().items()}
    rows = []
    for d in args.derivatives.split(","):
        for a in affine_autos(o, d.strip()):
            rep = fixed_points(o, a)
            rows.append({
                "name": names.get(a),
                "derivative": a.derivative,
                "permutation": list(a.pi),
                "order": a.order(),
                "fixed": {
                    "centers": rep.fixed_square_centers,
                    "vertical_edges": [list(e) for e in rep.fixed_vertical_edge_midpoints],
                    "horizontal_edges": [list(e) for e in rep.fixed_horizontal_edge_midpoints],
                    "vertices": rep.fixed_vertices,
                },
            })
    return {"count": len(rows), "automorphisms": rows}, True


def cmd_wms(args):
    report = w_report()
    return report, all(v["passed"] for v in report.values())


def cmd_torsion(args):
    rows = []
    for t in ell.torsion_points(args.n, nmax=args.nmax, tol=args.tol, threads=intersect.worker_count()):
        row = {"x": cjson(t.point.x), "y": cjson(t.point.y), "order": t.order}
        if t.order >= 3:
            lam, zeta = ell.lambda_from_torsion(t, tol=args.tol)
            row.update({"lambda": cjson(lam), "zeta": cjson(zeta)})
        rows.append(row)
    return rows, True


def cmd_verify(args):
    report = curves.verify_identities(parse_complex(args.lam), seed=args.seed, tol=args.tol,
                                      samples=args.samples)
    return report.to_json(), report.passed


def cmd_theorem(args):
    if args.n < 3:
        raise InputError("theorem needs --n >= 3")
    reports = [curves.theorem_check(t, tol=args.tol)
               for t in ell.torsion_points(args.n, nmax=max(args.n, ell.NMAX))]
    rows = [r.to_json() for r in reports]
    out = {"n": args.n, "count": len(rows), "passed": all(r.passed for r in reports), "reports": rows}
    if args.control is not None:
        lam = parse_complex(args.control)
        order = curves.critical_value_order(lam, nmax=args.nmax, tol=args.tol)
        out["control"] = {"lambda": cjson(lam), "order": order, "nmax": args.nmax}
    return out, out["passed"]


def cmd_intersect(args):
    p = intersect.GridPoint(args.a, args.b, args.n)
    if args.emit == "origami":
        return core.to_dict(intersect.construct_D(p)), True
    cert = intersect.pipeline(p, tol=args.tol)
    return cert.to_json(), cert.passed


COMMANDS = {
    "info": cmd_info, "veech": cmd_veech, "autos": cmd_autos, "wms": cmd_wms,
    "torsion": cmd_torsion, "verify": cmd_verify, "theorem": cmd_theorem, "intersect": cmd_intersect,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="origami-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "text"), default="json")
    # also accepted after the command name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def with_origami(p):
        p.add_argument("--builtin", help="W, L, W/2 or E<n> (the n x n torus)")
        p.add_argument("--file", help="origami as JSON {n, h, v} or 'h=(..); v=(..)'")
        return p

    with_origami(command("info", help="genus, stratum, cylinders"))
    with_origami(command("veech", help="Veech group index, cusps, generators"))
    p = with_origami(command("autos", help="affine automorphisms and their fixed points"))
    p.add_argument("--derivatives", default="I,-I")
    command("wms", help="all checks on the quaternion origami")

    p = command("torsion", help="points of exact order n on y^2 = x^3 - x")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nmax", type=int, default=ell.NMAX)
    p.add_argument("--tol", type=float, default=ell.DEFAULT_TOL)

    p = command("verify", help="numeric identities for one lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=12)
    p.add_argument("--tol", type=float, default=curves.TOL)

    p = command("theorem", help="torsion criterion for all points of exact order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=curves.TORSION_TOL)
    p.add_argument("--control", help="also report the critical-value order for this lambda")
    p.add_argument("--nmax", type=int, default=ell.NMAX)

    p = command("intersect", help="the double cover D for a grid point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--emit", choices=("certificate", "origami"), default="certificate")
    p.add_argument("--tol", type=float, default=curves.TORSION_TOL)
    return parser


def _text(payload, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for k in sorted(payload):
            v = payload[k]
            if isinstance(v, (dict, list)) and v and not _is_scalar_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, sort_keys=True)}")
        return "\n".join(lines)
    if isinstance(payload, list):
        return "\n".join(f"{pad}- " + _text(v, indent + 1).lstrip() for v in payload)
    return pad + json.dumps(payload)


def _is_scalar_list(v) -> bool:
    # lists of numbers, or matrices, stay on one line
    return isinstance(v, list) and all(
        not isinstance(x, dict) and (not isinstance(x, list) or _is_scalar_list(x)) for x in v)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, ok = COMMANDS[args.command](args)
    except (InputError, OrigamiError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(_text(payload))
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
