"""Command-line front end.

Subcommands: classify, invariants, ordres, profile, reduce-at, find-crucial,
verify, sweep.  Every command takes -p <prime> and emits either a
human-readable listing or, with --json, a single-line JSON document with a
stable schema (field "schema": 1).  Rationals are rendered as strings
"num/den" (plain "num" for integers) so consumers never lose precision.
Exit codes: 0 success, 1 input error, 2 consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classifier import W2, multiplier_valuations, stratum
from .crucial import (
    distinct_fixed_lift,
    find_crucial_on_segment,
    multiple_fixed_lift,
    verify_consistency,
)
from .errors import ConsistencyFailure, QuadberkError
from .invariants import sigma_invariants
from .padic import INF, PrimeCtx
from .parsing import parse_map
from .quadmap import TypeIIPoint, ord_res_at, ord_res_profile
from .reduction import classify_residue, reduce_at

SCHEMA = 1


def fmt_rat(x) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def fmt_val(v) -> str:
    return "inf" if v == INF else fmt_rat(v)


def parse_rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise QuadberkError(f"invalid rational {text!r}: {exc}") from exc


def _emit(args, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for key, value in payload.items():
            if key == "schema":
                continue
            print(f"{key}: {json.dumps(value) if isinstance(value, (list, dict)) else value}")


def _point_dict(point: TypeIIPoint) -> dict:
    return {"center": fmt_rat(point.center), "rexp": fmt_rat(point.radius_exp)}


def _stratum_fields(strat) -> dict:
    fields = {"stratum": strat.tag}
    if strat.tag == W2:
        fields["x_tilde"] = str(strat.x_tilde.value)
    return fields


def _sigma_fields(sigma) -> dict:
    return {
        "sigma1": fmt_rat(sigma.sigma1),
        "sigma2": fmt_rat(sigma.sigma2),
        "sigma3": fmt_rat(sigma.sigma3),
    }


def _residue_fields(rc) -> dict:
    fields = {"residue_class": rc.kind.value}
    if rc.x_tilde is not None:
        fields["residue_x_tilde"] = str(rc.x_tilde.value)
    return fields


def cmd_classify(args) -> int:
    ctx = PrimeCtx(args.p)
    sigma = sigma_invariants(parse_map(args.map))
    payload = {"schema": SCHEMA}
    payload.update(_stratum_fields(stratum(sigma, ctx)))
    payload.update(_sigma_fields(sigma))
    payload["multiplier_valuations"] = [
        fmt_val(v) for v in multiplier_valuations(sigma, ctx)
    ]
    _emit(args, payload)
    return 0


def cmd_invariants(args) -> int:
    sigma = sigma_invariants(parse_map(args.map))
    payload = {"schema": SCHEMA}
    payload.update(_sigma_fields(sigma))
    _emit(args, payload)
    return 0


def _point_from_args(args) -> TypeIIPoint:
    return TypeIIPoint(parse_rat(args.center), parse_rat(args.rexp))


def cmd_ordres(args) -> int:
    ctx = PrimeCtx(args.p)
    point = _point_from_args(args)
    value = ord_res_at(parse_map(args.map), point, ctx)
    _emit(args, {"schema": SCHEMA, "point": _point_dict(point), "ord_res": fmt_rat(value)})
    return 0


def cmd_profile(args) -> int:
    ctx = PrimeCtx(args.p)
    profile = ord_res_profile(parse_map(args.map), parse_rat(args.center), ctx)
    payload = {
        "schema": SCHEMA,
        "center": fmt_rat(parse_rat(args.center)),
        "breakpoints": [fmt_rat(b) for b in profile.breakpoints],
        "pieces": [
            {"slope": fmt_rat(s), "intercept": fmt_rat(b)}
            for s, b in zip(profile.slopes, profile.intercepts)
        ],
    }
    _emit(args, payload)
    return 0


def cmd_reduce_at(args) -> int:
    ctx = PrimeCtx(args.p)
    point = _point_from_args(args)
    residue = reduce_at(parse_map(args.map), point, ctx)
    payload = {
        "schema": SCHEMA,
        "point": _point_dict(point),
        "degree": residue.degree,
        "f_tilde": list(residue.ftilde),
        "g_tilde": list(residue.gtilde),
    }
    payload.update(_residue_fields(classify_residue(residue)))
    _emit(args, payload)
    return 0


def cmd_find_crucial(args) -> int:
    ctx = PrimeCtx(args.p)
    argmin, value = find_crucial_on_segment(parse_map(args.map), parse_rat(args.center), ctx)
    payload = {"schema": SCHEMA, "center": fmt_rat(parse_rat(args.center))}
    if isinstance(argmin, tuple):
        payload["argmin_interval"] = [fmt_rat(argmin[0]), fmt_rat(argmin[1])]
    else:
        payload["argmin"] = fmt_rat(argmin)
    payload["min_value"] = fmt_rat(value)
    _emit(args, payload)
    return 0


def _verify_payload(report) -> dict:
    payload = {"schema": SCHEMA, "consistent": report.consistent, "xi": _point_dict(report.xi)}
    payload.update(_stratum_fields(report.stratum))
    if report.residue_class is not None:
        payload.update(_residue_fields(report.residue_class))
    else:
        payload["residue_class"] = "Unavailable"
        payload["residue_unavailable"] = report.residue_unavailable
    payload["min_ord_res"] = fmt_rat(report.min_ord_res)
    payload.update(_sigma_fields(report.sigma))
    return payload


def cmd_verify(args) -> int:
    ctx = PrimeCtx(args.p)
    centers = [parse_rat(c) for c in args.center] if args.center else None
    report = verify_consistency(parse_map(args.map), ctx, centers=centers)
    _emit(args, _verify_payload(report))
    return 0


def _parse_range(text: str) -> list:
    """Comma list of rationals, or "start:stop[:step]" (inclusive ends)."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise QuadberkError(f"bad range {text!r}")
        start, stop = parse_rat(parts[0]), parse_rat(parts[1])
        step = parse_rat(parts[2]) if len(parts) == 3 else Fraction(1)
        if step <= 0:
            raise QuadberkError("range step must be positive")
        values = []
        current = start
        while current <= stop:
            values.append(current)
            current += step
        return values
    return [parse_rat(part) for part in text.split(",") if part.strip()]


def cmd_sweep(args) -> int:
    ctx = PrimeCtx(args.p)
    if args.form == "A":
        if args.l2:
            raise QuadberkError("--l2 does not apply to form A (one parameter s)")
        instances = [(s,) for s in sorted(set(_parse_range(args.l1)))]
    else:
        if not args.l2:
            raise QuadberkError("form B needs both --l1 and --l2")
        l1s = sorted(set(_parse_range(args.l1)))
        l2s = sorted(set(_parse_range(args.l2)))
        instances = [(l1, l2) for l1 in l1s for l2 in l2s]
    rows = []
    for params in instances:
        row = {"l1": fmt_rat(params[0])}
        if len(params) == 2:
            row["l2"] = fmt_rat(params[1])
        try:
            lift = (
                multiple_fixed_lift(params[0])
                if args.form == "A"
                else distinct_fixed_lift(*params)
            )
            report = verify_consistency(lift, ctx)
        except ConsistencyFailure:
            raise
        except QuadberkError as exc:
            row["error"] = f"{type(exc).__name__}: {exc}"
            rows.append(row)
            continue
        row.update(_stratum_fields(report.stratum))
        row["xi"] = _point_dict(report.xi)
        row["min_ord_res"] = fmt_rat(report.min_ord_res)
        row["consistent"] = report.consistent
        rows.append(row)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "form": args.form, "results": rows}))
    else:
        for row in rows:
            bits = [f"l1={row['l1']}"]
            if "l2" in row:
                bits.append(f"l2={row['l2']}")
            if "error" in row:
                bits.append(row["error"])
            else:
                bits.append(f"stratum={row['stratum']}")
                if "x_tilde" in row:
                    bits.append(f"x_tilde={row['x_tilde']}")
                bits.append(f"xi=({row['xi']['center']}, {row['xi']['rexp']})")
                bits.append(f"min_ord_res={row['min_ord_res']}")
            print("  ".join(bits))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadberk",
        description="Exact p-adic reduction types of quadratic rational maps over Q.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_map=True):
        p.add_argument("-p", dest="p", type=int, required=True, help="prime p")
        p.add_argument("--json", action="store_true", help="emit JSON on stdout")
        if needs_map:
            p.add_argument("--map", required=True, help='map expression, e.g. "z + 1/5 + 1/z"')

    c = sub.add_parser("classify", help="stratum W1-W4 and sigma invariants")
    common(c)
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("invariants", help="sigma invariants only")
    common(c)
    c.set_defaults(func=cmd_invariants)

    c = sub.add_parser("ordres", help="ordRes at one type II point")
    common(c)
    c.add_argument("--center", default="0")
    c.add_argument("--rexp", default="0", help="radius exponent m (integer)")
    c.set_defaults(func=cmd_ordres)

    c = sub.add_parser("profile", help="exact piecewise-affine ordRes profile")
    common(c)
    c.add_argument("--center", default="0")
    c.set_defaults(func=cmd_profile)

    c = sub.add_parser("reduce-at", help="residue map at one type II point")
    common(c)
    c.add_argument("--center", default="0")
    c.add_argument("--rexp", default="0", help="radius exponent m (integer)")
    c.set_defaults(func=cmd_reduce_at)

    c = sub.add_parser("find-crucial", help="minimize the ordRes profile on a segment")
    common(c)
    c.add_argument("--center", default="0")
    c.set_defaults(func=cmd_find_crucial)

    c = sub.add_parser("verify", help="cross-check all computation routes")
    common(c)
    c.add_argument(
        "--center",
        action="append",
        help="segment center for maps not in normal form (repeatable)",
    )
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("sweep", help="batch verification over normal-form parameters")
    common(c, needs_map=False)
    c.add_argument("--form", choices=("A", "B"), required=True,
                   help="A: z + s + 1/z; B: (z^2 + l1 z)/(l2 z + 1)")
    c.add_argument("--l1", required=True, help="values for s (form A) or lambda1 (form B)")
    c.add_argument("--l2", help="values for lambda2 (form B only)")
    c.set_defaults(func=cmd_sweep)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        return args.func(args)
    except ConsistencyFailure as exc:
        if getattr(args, "json", False):
            print(json.dumps({"schema": SCHEMA, "consistent": False, "detail": str(exc)}))
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 2
    except (QuadberkError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
