"""Command-line front end: ``sievelab <command> ...``."""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import analytic, counting, density
from .claims import CLAIM_IDS, run_paper_checks
from .errors import SievelabError
from .sieve import build_flags, save_flags, twin_flags
from .wheel import WheelClass


def _fmt(obj):
    """Round floats to 10 significant digits, recursively."""
    if isinstance(obj, float):
        return float(f"{obj:.10g}")
    if isinstance(obj, dict):
        return {str(k): _fmt(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_fmt(v) for v in obj]
    if hasattr(obj, "value") and hasattr(obj, "name"):  # enums
        return obj.value
    return obj


def dumps(obj) -> str:
    return json.dumps(_fmt(obj), sort_keys=True)


def _flags_to(n: int):
    flags = build_flags(n // 6 + 2)
    return flags, twin_flags(flags)


# ------------------------------------------------------------------ sieve


def cmd_sieve(args) -> int:
    flags = build_flags(max((args.limit + 1) // 6, 1))
    if args.out:
        save_flags(flags, args.out)
    twin = twin_flags(flags)
    summary = {
        "m_max": flags.m_max,
        "limit": args.limit,
        "pi_a": counting.count_primes(flags, WheelClass.A, args.limit),
        "pi_b": counting.count_primes(flags, WheelClass.B, args.limit),
        "twin_pairs": int(twin.flags_t.sum()),
    }
    print(dumps(summary))
    return 0


# ------------------------------------------------------------------ count


def cmd_count(args) -> int:
    kind = args.kind
    if kind == "gap":
        flags, _ = _flags_to(args.n + args.g)
        res = counting.count_gap_pairs(flags, args.g, args.n)
        rec = {"op": "gap", "params": {"g": args.g, "n": args.n}, "count": res.count,
               "construction": res.construction_used.value}
    elif kind == "goldbach":
        flags, _ = _flags_to(args.g)
        res = counting.count_goldbach(flags, args.g)
        rec = {"op": "goldbach", "params": {"g": args.g}, "count": res.count,
               "construction": f"{res.klass.name} m={res.m}", "raw_half": res.raw_half}
    elif kind == "quad":
        _, twin = _flags_to(6 * (args.m + args.shift) + 2)
        res = counting.count_twin_patterns(twin, args.shift, args.m)
        rec = {"op": "quad", "params": {"shift": args.shift, "m": args.m}, "count": res.count,
               "construction": "T^shift_m + T_m"}
    else:
        _, twin = _flags_to(6 * args.m + 2)
        rec = {"op": "twin-goldbach", "params": {"m": args.m},
               "count": counting.count_twin_goldbach(twin, args.m), "construction": "T_m + T'_m"}
    print(dumps(rec) if args.json else rec["count"])
    return 0


# ---------------------------------------------------------------- predict


def _actual(kind, flags, twin, n, args) -> int:
    if kind == "twin":
        return counting.count_gap_pairs(flags, 2, n).count
    if kind == "gap":
        return counting.count_gap_pairs(flags, args.g, n).count
    if kind == "quad":
        return counting.count_twin_patterns(twin, 1, n // 6).count
    return -1


def cmd_predict(args) -> int:
    rows = []
    records = []
    kind = args.kind
    if kind == "goldbach":
        flags, _ = _flags_to(max(args.g))
        for g in args.g:
            p = analytic.predict("goldbach", flags, g=g)
            actual = counting.count_goldbach(flags, g).count
            rows.append((g, actual, p.predicted))
            records.append(p)
    elif kind == "twin-goldbach":
        flags, twin = _flags_to(6 * max(args.m) + 2)
        for m in args.m:
            p = analytic.predict("twin_goldbach", flags, m=m, eta4=args.eta4)
            rows.append((6 * m, counting.count_twin_goldbach(twin, m), p.predicted))
            records.append(p)
    else:
        flags, twin = _flags_to(max(args.n) + 14)
        target = {"twin": "twin", "gap": "gap", "quad": f"quad_from_{getattr(args, 'source', 'primes')}"}[kind]
        for n in args.n:
            p = analytic.predict(target, flags, n, g=getattr(args, "g", None), m_rule=args.m_rule)
            rows.append((n, _actual(kind, flags, twin, n, args), p.predicted))
            records.append(p)

    if args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["n", "actual", "predicted", "error"])
        for n, actual, pred in rows:
            w.writerow([n, actual, f"{pred:.10g}", f"{actual - pred:.10g}"])
    else:
        out = [{"target": p.target.value, "n": p.n, "predicted": p.predicted, "inputs": p.inputs,
                "actual": r[1]} for p, r in zip(records, rows)]
        print(dumps(out if len(out) > 1 else out[0]))
    return 0


# ---------------------------------------------------------------- density

PAIRS = {"LL": ("L", "L"), "LR": ("L", "R"), "RR": ("R", "R"), "TT": ("T", "T")}


def cmd_density(args) -> int:
    limit = args.limit
    if args.set in ("L", "R", "T"):
        s = density.index_set(args.set, limit)
        schnirelmann, natural = density.density(s)
        missing = (s.members[1:] == 0).nonzero()[0] + 1
        rep = density.CoverageReport(limit, missing.tolist(), schnirelmann, natural)
    elif args.set in PAIRS:
        flags = build_flags(limit)
        a, b = (density.index_set(x, limit, flags) for x in PAIRS[args.set])
        rep = density.sumset_coverage(a, b, limit)
    else:
        rep = density.basis_order3_check("PrimesWith1" if args.set == "P1" else "TwinPrimes", limit)
    if args.list_missing:
        for v in rep.missing:
            print(v)
    else:
        d = rep.to_dict()
        d["set"] = args.set
        d["missing_count"] = len(d.pop("missing"))
        print(dumps(d))
    return 0


# ----------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    selection = args.claims.split(",") if args.claims else None
    reports = run_paper_checks(args.limit, selection)
    if args.json:
        print(dumps([r.to_dict() for r in reports]))
    elif args.csv:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["claim_id", "status", "computed", "expected", "tolerance", "paper_location"])
        for r in reports:
            w.writerow([r.claim_id, r.status, _fmt(r.computed), r.expected, r.tolerance, r.paper_location])
    else:
        for r in reports:
            computed = "-" if r.computed is None else _fmt(r.computed)
            print(f"{r.status.upper():7s} {r.claim_id:32s} computed={computed} expected={r.expected} "
                  f"tol={r.tolerance} [{r.paper_location}]")
    return 1 if any(r.status == "fail" for r in reports) else 0


def cmd_exceptions(args) -> int:
    _, twin = _flags_to(6 * args.limit + 2)
    for m in counting.find_twin_goldbach_exceptions(twin, args.limit):
        print(m)
    return 0


# ----------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sievelab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sieve", help="sieve 6i-1 / 6i+1 up to a value bound")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--out", help="write the bitmaps in SVL1 format")
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("count", help="pair, Goldbach and twin-pattern counts")
    csub = p.add_subparsers(dest="kind", required=True)
    q = csub.add_parser("gap")
    q.add_argument("--g", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q = csub.add_parser("goldbach")
    q.add_argument("--g", type=int, required=True)
    q = csub.add_parser("quad")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--shift", type=int, default=1)
    q = csub.add_parser("twin-goldbach")
    q.add_argument("--m", type=int, required=True)
    for q in csub.choices.values():
        q.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("predict", help="analytic predictors against actual counts")
    psub = p.add_subparsers(dest="kind", required=True)
    q = psub.add_parser("twin")
    q.add_argument("--n", type=int, nargs="+", required=True)
    q = psub.add_parser("gap")
    q.add_argument("--g", type=int, required=True)
    q.add_argument("--n", type=int, nargs="+", required=True)
    q = psub.add_parser("quad")
    q.add_argument("--n", type=int, nargs="+", required=True)
    q.add_argument("--source", choices=["primes", "twins"], default="primes")
    for name in ("twin", "gap", "quad"):
        psub.choices[name].add_argument("--m-rule", choices=["last_prime", "floor"], default="last_prime")
    q = psub.add_parser("goldbach")
    q.add_argument("--g", type=int, nargs="+", required=True)
    q = psub.add_parser("twin-goldbach")
    q.add_argument("--m", type=int, nargs="+", required=True)
    q.add_argument("--eta4", type=float, default=1.0)
    for q in psub.choices.values():
        q.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("density", help="densities and sumset coverage")
    p.add_argument("--set", required=True, choices=["L", "R", "T", "LL", "LR", "RR", "TT", "P1", "TW3"])
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--list-missing", action="store_true")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("verify", help="reproduce the numeric claims")
    p.add_argument("--limit", type=int, default=2 * 10**8)
    p.add_argument("--claims", help=f"comma-separated subset of: {', '.join(CLAIM_IDS)}")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exceptions", help="m with no twin-pair sum representation")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_exceptions)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SievelabError, KeyError) as exc:
        print(f"sievelab: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
