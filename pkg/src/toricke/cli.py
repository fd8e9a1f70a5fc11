"""Command-line front end.

Every command reads JSON files, runs one analysis and writes one JSON report.
Exit status: 0 on success, 1 on a domain error (structured error report),
2 on unreadable or malformed input.
"""

import argparse
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import ToricError
from .exactlin import format_rat
from .fan import Fan, validate
from .kstability import construct_standard_boundary, is_k_polystable
from .logcox import local_chart, log_class_group, rank1_report
from .polytope import HPolytope, VPolytope, barycenter, polar_dual, vertices, volume
from .toricdiv import (StandardBoundary, ToricDivisor, canonical_divisor, dual_vertices,
                       find_ample, polytope_of)

COMMANDS = ("check", "boundary", "rank1", "classgroup", "charts", "dual",
            "barycenter", "find-ample")


class InputError(Exception):
    """Unreadable file, bad JSON, or a schema violation."""


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _parse(builder, path):
    data = _load(path)
    try:
        return builder(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _read_fan(path):
    return _parse(Fan.from_json, path)


def _read_boundary(path, fan):
    if path is None:
        return StandardBoundary.trivial(len(fan.rays))
    bd = _parse(StandardBoundary.from_json, path)
    if len(bd.m) != len(fan.rays):
        raise InputError(f"{path}: {len(bd.m)} indices for {len(fan.rays)} rays")
    return bd


def _read_divisor(path, fan):
    D = _parse(ToricDivisor.from_json, path)
    if len(D.coeffs) != len(fan.rays):
        raise InputError(f"{path}: {len(D.coeffs)} coefficients for {len(fan.rays)} rays")
    return D


def _read_polytope(path):
    data = _load(path)
    try:
        if "vertices" in data:
            return VPolytope.from_json(data)
        return vertices(HPolytope.from_json(data))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise InputError(f"--{name} is required for {args.command}")


def _polytope_from_args(args):
    if args.polytope is not None:
        return _read_polytope(args.polytope)
    _require(args, "fan")
    fan = _read_fan(args.fan)
    if args.ample is not None:
        D = _read_divisor(args.ample, fan)
    else:
        D = _read_boundary(args.boundary, fan).log_anticanonical()
    return vertices(polytope_of(fan, D))


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------

def cmd_check(args):
    _require(args, "fan")
    fan = _read_fan(args.fan)
    out = is_k_polystable(fan, _read_boundary(args.boundary, fan)).to_json()
    out["fan_simplicial"] = validate(fan).is_simplicial
    return out


def cmd_boundary(args):
    _require(args, "fan")
    fan = _read_fan(args.fan)
    L = _read_divisor(args.ample, fan) if args.ample else find_ample(fan)
    out = construct_standard_boundary(fan, L).to_json()
    out["ample"] = L.to_json()["coeffs"]
    out["fan_simplicial"] = validate(fan).is_simplicial
    return out


def cmd_rank1(args):
    _require(args, "fan")
    fan = _read_fan(args.fan)
    return rank1_report(fan, _read_boundary(args.boundary, fan)).to_json()


def cmd_classgroup(args):
    _require(args, "fan")
    fan = _read_fan(args.fan)
    return log_class_group(fan, _read_boundary(args.boundary, fan)).to_json()


def cmd_charts(args):
    _require(args, "fan")
    fan = _read_fan(args.fan)
    bd = _read_boundary(args.boundary, fan)
    if args.cone is not None:
        try:
            cones = [tuple(int(x) for x in args.cone.split(",") if x.strip())]
        except ValueError as exc:
            raise InputError(f"--cone: {exc}") from exc
    else:
        cones = list(fan.max_cones)
    charts = []
    for cone in cones:
        try:
            group, orders = local_chart(fan, bd, cone)
        except ToricError as exc:
            if args.cone is not None:
                raise
            charts.append({"cone": list(cone), "error": exc.code})
            continue
        charts.append({"cone": list(cone), "group": group.to_json(),
                       "orders": [m for _, m in orders]})
    return {"charts": charts}


def cmd_dual(args):
    if args.polytope is None:
        _require(args, "fan")
        fan = _read_fan(args.fan)
        return dual_vertices(fan, _read_boundary(args.boundary, fan), check=True).to_json()
    return polar_dual(_read_polytope(args.polytope)).to_json()


def cmd_barycenter(args):
    P = _polytope_from_args(args)
    return {"barycenter": [format_rat(x) for x in barycenter(P)],
            "volume": format_rat(volume(P))}


def cmd_find_ample(args):
    _require(args, "fan")
    return find_ample(_read_fan(args.fan)).to_json()


HANDLERS = {
    "check": cmd_check, "boundary": cmd_boundary, "rank1": cmd_rank1,
    "classgroup": cmd_classgroup, "charts": cmd_charts, "dual": cmd_dual,
    "barycenter": cmd_barycenter, "find-ample": cmd_find_ample,
}


# --------------------------------------------------------------------------
# Output
# --------------------------------------------------------------------------

def _decimal(s):
    q = Fraction(s)
    with localcontext() as ctx:
        ctx.prec = 15
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def _approximate(value):
    """Mirror of ``value`` with every exact rational string rendered as a
    decimal; non-rational leaves become None and are pruned."""
    if isinstance(value, str):
        try:
            return _decimal(value)
        except (ValueError, ZeroDivisionError):
            return None
    if isinstance(value, list):
        items = [_approximate(v) for v in value]
        return items if any(v is not None for v in items) else None
    if isinstance(value, dict):
        out = {k: _approximate(v) for k, v in value.items()}
        out = {k: v for k, v in out.items() if v is not None}
        return out or None
    return None


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="toricke",
        description="Exact K-polystability analysis of toric pairs.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--fan")
    parser.add_argument("--boundary")
    parser.add_argument("--ample")
    parser.add_argument("--polytope")
    parser.add_argument("--cone", help='ray indices, e.g. "0,2"')
    parser.add_argument("-o", dest="output", help="write the report here instead of stdout")
    parser.add_argument("--approx", action="store_true",
                        help="add decimal renderings next to the exact values")
    return parser


def run(argv=None):
    """Parse ``argv``, run the command, write the report.  Returns the exit code."""
    args = build_parser().parse_args(argv)
    try:
        report = HANDLERS[args.command](args)
        code = 0
    except InputError as exc:
        report, code = {"error": "ParseError", "message": str(exc)}, 2
    except ToricError as exc:
        report, code = {"error": exc.code, "message": str(exc)}, 1
    if code == 0 and args.approx:
        approx = _approximate(report)
        if approx:
            report["approx"] = approx
    text = dumps(report)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
