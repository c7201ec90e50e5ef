"""Command line front door.

Subcommands: curve find, orbit build, verify, sumprod, charsum, extremal,
sweep. Every run is seeded and reproducible; outputs go to stdout or
--out as CSV or JSON. Exit codes: 0 all asserted invariants passed,
1 invariant violation, 2 usage or config error.
"""

import argparse
import json
import math
import sys
from dataclasses import asdict

from .charsum import bilinear_ratio_scan, subgroup_scan
from .curve import CurveParams, curve_summary, enumerate_points, point_order
from .errors import EcsumprodError
from .extremal import extremal_report
from .orbit import build_orbit, save_orbit
from .rng import SplitMix64
from .sampling import max_order_point, random_curve
from .sumprod import full_unit_instance, sum_product_report
from .sweep import emit, load_config, run_sweep
from .verify import run_identity_suite

CURVE_FIELDS = ("p", "a4", "a6", "N", "t", "ordinary", "Px", "Py", "T")
SUMPROD_FIELDS = (
    "p", "a4", "a6", "N", "t", "T", "Px", "Py",
    "sizeA", "sizeB", "sizeS", "sizeT", "sizeH",
    "J", "J_lower", "Delta", "thm_lhs", "thm_rhs", "ratio", "min_branch", "exponent",
)
CHARSUM_FIELDS = (
    "p", "a4", "a6", "N", "t", "T", "Px", "Py", "nu",
    "sizeK", "sizeM", "lam", "value", "rhs", "ratio",
    "subgroup_max", "subgroup_lam", "subgroup_over_sqrt_p",
)
EXTREMAL_FIELDS = (
    "p", "a4", "a6", "N", "t", "T", "Px", "Py", "H",
    "sizeA", "sizeS", "sizeT", "bound_2h_ok", "bound_phi_ok",
    "ratio", "predicted_sizeA", "sizeA_over_predicted",
)


def parse_member_set(text):
    """--setA/--setB values: a comma list like '1,2,4' or @file with the same."""
    if text is None:
        return None
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read().replace("\n", ",").replace(" ", ",")
    members = [tok for tok in text.split(",") if tok.strip()]
    return [int(tok) for tok in members]


def _add_instance_args(sub, with_point=True):
    sub.add_argument("--p", type=int, required=True, help="field prime, >= 5")
    sub.add_argument("--a4", type=int, default=None, help="curve coefficient a4")
    sub.add_argument("--a6", type=int, default=None, help="curve coefficient a6")
    if with_point:
        sub.add_argument("--px", type=int, default=None, help="base point x")
        sub.add_argument("--py", type=int, default=None, help="base point y")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for anything left unspecified (default 0)")


def _add_output_args(sub, default_format="csv"):
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument("--format", choices=("csv", "json"), default=default_format)


def resolve_instance(args):
    """(curve, summary, point, order, table) from flags, sampling what's missing.

    Sampled curves are required ordinary; explicitly given coefficients are
    taken as-is. The base point defaults to a maximal-order sample.
    """
    rng = SplitMix64(args.seed)
    if (args.a4 is None) != (args.a6 is None):
        raise ValueError("give both --a4 and --a6, or neither")
    if args.a4 is not None:
        curve = CurveParams(args.p, args.a4, args.a6)
        summary = curve_summary(curve)
    else:
        curve, summary = random_curve(args.p, rng, require_ordinary=True)
    if (args.px is None) != (args.py is None):
        raise ValueError("give both --px and --py, or neither")
    if args.px is not None:
        point = (args.px % curve.p, args.py % curve.p)
        order = point_order(curve, point, summary.n_points)
    else:
        _, points = enumerate_points(curve)
        point, order = max_order_point(curve, points, summary.n_points, rng)
    return curve, summary, point, order, build_orbit(curve, point, order)


def cmd_curve_find(args) -> int:
    rng = SplitMix64(args.seed)
    rows = []
    for _ in range(args.count):
        curve, summary = random_curve(
            args.p, rng, require_ordinary=not args.allow_supersingular)
        _, points = enumerate_points(curve)
        point, order = max_order_point(curve, points, summary.n_points, rng)
        rows.append({
            "p": curve.p, "a4": curve.a4, "a6": curve.a6,
            "N": summary.n_points, "t": summary.trace, "ordinary": summary.ordinary,
            "Px": point[0], "Py": point[1], "T": order,
        })
    emit(rows, args.format, args.out, CURVE_FIELDS)
    return 0


def cmd_orbit_build(args) -> int:
    curve, summary, point, order, table = resolve_instance(args)
    save_orbit(table, args.out)
    sys.stdout.write(json.dumps({
        "path": args.out, "p": curve.p, "a4": curve.a4, "a6": curve.a6,
        "Px": point[0], "Py": point[1], "T": order, "N": summary.n_points,
    }) + "\n")
    return 0


def cmd_verify(args) -> int:
    curve, summary, point, order, table = resolve_instance(args)
    checks = run_identity_suite(table, summary.n_points, args.seed)
    if args.format == "json":
        sys.stdout.write(json.dumps([asdict(c) for c in checks], indent=2) + "\n")
    else:
        sys.stdout.write(
            f"instance p={curve.p} a4={curve.a4} a6={curve.a6} "
            f"P=({point[0]},{point[1]}) T={order} N={summary.n_points} "
            f"t={summary.trace} ordinary={summary.ordinary}\n")
        for c in checks:
            sys.stdout.write(f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.detail}\n")
    return 0 if all(c.ok for c in checks) else 1


def cmd_sumprod(args) -> int:
    curve, summary, point, order, table = resolve_instance(args)
    a_set = parse_member_set(args.setA) or full_unit_instance(table)
    b_set = parse_member_set(args.setB) or full_unit_instance(table)
    rep = sum_product_report(table, a_set, b_set)
    row = {
        "p": curve.p, "a4": curve.a4, "a6": curve.a6,
        "N": summary.n_points, "t": summary.trace, "T": order,
        "Px": point[0], "Py": point[1],
        "sizeA": rep.size_a, "sizeB": rep.size_b, "sizeS": rep.size_s,
        "sizeT": rep.size_t, "sizeH": rep.size_h,
        "J": rep.solutions, "J_lower": rep.solutions_lower, "Delta": rep.delta,
        "thm_lhs": float(rep.lhs), "thm_rhs": rep.rhs, "ratio": rep.ratio,
        "min_branch": rep.min_branch, "exponent": rep.exponent,
    }
    emit([row], args.format, args.out, SUMPROD_FIELDS)
    return 0


def cmd_charsum(args) -> int:
    curve, summary, point, order, table = resolve_instance(args)
    k_set = parse_member_set(args.setA) or full_unit_instance(table)
    m_set = parse_member_set(args.setB) or full_unit_instance(table)
    rep = bilinear_ratio_scan(table, k_set, m_set, args.nu)
    sub = subgroup_scan(table)
    row = {
        "p": curve.p, "a4": curve.a4, "a6": curve.a6,
        "N": summary.n_points, "t": summary.trace, "T": order,
        "Px": point[0], "Py": point[1], "nu": rep.nu,
        "sizeK": len(set(k_set)), "sizeM": len(set(m_set)),
        "lam": rep.lam, "value": rep.value, "rhs": rep.rhs, "ratio": rep.ratio,
        "subgroup_max": sub.max_abs, "subgroup_lam": sub.lam,
        "subgroup_over_sqrt_p": sub.max_over_sqrt_p,
    }
    emit([row], args.format, args.out, CHARSUM_FIELDS)
    return 0


def cmd_extremal(args) -> int:
    curve, summary, point, order, table = resolve_instance(args)
    rep = extremal_report(table, args.H)
    row = {
        "p": curve.p, "a4": curve.a4, "a6": curve.a6,
        "N": summary.n_points, "t": summary.trace, "T": order,
        "Px": point[0], "Py": point[1], "H": rep.h_window,
        "sizeA": rep.size_a, "sizeS": rep.size_s, "sizeT": rep.size_t,
        "bound_2h_ok": rep.bound_2h_ok, "bound_phi_ok": rep.bound_phi_ok,
        "ratio": rep.ratio, "predicted_sizeA": rep.predicted_size_a,
        "sizeA_over_predicted": (rep.size_a / rep.predicted_size_a
                                 if rep.predicted_size_a > 0 else None),
    }
    emit([row], args.format, args.out, EXTREMAL_FIELDS)
    return 0


def cmd_sweep(args) -> int:
    config = load_config(args.config)
    records = run_sweep(config)
    emit(records, args.format, args.out)
    if any(r.error.startswith("IdentityViolation") for r in records):
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ecsumprod",
        description="Exact experiments on sum/product structure of "
                    "elliptic-curve orbit x-coordinates over prime fields.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    curve = sub.add_parser("curve", help="curve discovery")
    curve_sub = curve.add_subparsers(dest="subcommand", required=True)
    find = curve_sub.add_parser("find", help="sample usable curves over F_p")
    find.add_argument("--p", type=int, required=True)
    find.add_argument("--count", type=int, default=1)
    find.add_argument("--seed", type=int, default=0)
    find.add_argument("--allow-supersingular", action="store_true",
                      help="keep curves with trace 0 mod p")
    _add_output_args(find)
    find.set_defaults(handler=cmd_curve_find)

    orbit = sub.add_parser("orbit", help="orbit table caches")
    orbit_sub = orbit.add_subparsers(dest="subcommand", required=True)
    build = orbit_sub.add_parser("build", help="build x(kP) table and write the binary cache")
    _add_instance_args(build)
    build.add_argument("--out", required=True, help="cache file path")
    build.set_defaults(handler=cmd_orbit_build)

    verify = sub.add_parser("verify", help="run the identity checks on one instance")
    _add_instance_args(verify)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(handler=cmd_verify)

    sumprod = sub.add_parser("sumprod", help="sum/product set report for sets A, B")
    _add_instance_args(sumprod)
    sumprod.add_argument("--setA", default=None, help="comma list or @file (default: all units)")
    sumprod.add_argument("--setB", default=None, help="comma list or @file (default: all units)")
    _add_output_args(sumprod)
    sumprod.set_defaults(handler=cmd_sumprod)

    charsum = sub.add_parser("charsum", help="bilinear character-sum scan for sets K, M")
    _add_instance_args(charsum)
    charsum.add_argument("--setA", default=None, help="set K: comma list or @file")
    charsum.add_argument("--setB", default=None, help="set M: comma list or @file")
    charsum.add_argument("--nu", type=int, default=1)
    _add_output_args(charsum)
    charsum.set_defaults(handler=cmd_charsum)

    extremal = sub.add_parser("extremal", help="low-x window construction report")
    _add_instance_args(extremal)
    extremal.add_argument("--H", type=int, default=None,
                          help="x window bound (default floor(phi(T)/2))")
    _add_output_args(extremal)
    extremal.set_defaults(handler=cmd_extremal)

    sweep = sub.add_parser("sweep", help="run a config-driven experiment sweep")
    sweep.add_argument("--config", required=True, help="JSON config path")
    _add_output_args(sweep)
    sweep.set_defaults(handler=cmd_sweep)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (EcsumprodError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
