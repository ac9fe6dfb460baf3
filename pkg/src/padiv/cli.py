"""Command-line front end: ``padiv verify | compare | canonicalize | scan``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import numpy as np

from .algebra import TdParams, TpParams
from .errors import InputError, NotDivision, NotPartiallyAlternative, OutOfScope, ResidualTooLarge
from .report import CSV_COLUMNS, canonical_report, compare, scan_row, verify
from .serialize import format_float, parse_algebra, to_jsonable

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_ORACLE = 0, 1, 2, 3

CSV_HELP = (
    "CSV columns: " + ", ".join(CSV_COLUMNS) + ". Rationals are written p/q, booleans "
    "true/false, floats with 17 significant digits; 'n/a' marks fields that do not apply "
    "(everything after 'criterion' for non-division rows)."
)


class ConfigError(InputError):
    pass


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e}") from e
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e


def _dump(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=False)


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (Fraction, int)):
        return str(Fraction(v))
    if isinstance(v, float):
        return format_float(v)
    return str(v)


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in rows:
        w.writerow([_cell(row[k]) for k in CSV_COLUMNS])
    return buf.getvalue()


# sweep configuration

def parse_grid(text: str) -> list[TdParams]:
    """gmin:gmax:hmin:hmax:step, endpoints inclusive, all rational."""
    parts = text.split(":")
    if len(parts) != 5:
        raise ConfigError("grid must be gmin:gmax:hmin:hmax:step", "/grid")
    try:
        gmin, gmax, hmin, hmax, step = (Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f"bad number in grid: {e}", "/grid") from e
    if step <= 0:
        raise ConfigError("grid step must be positive", "/grid/step")

    def axis(lo, hi):
        out, x = [], lo
        while x <= hi:
            out.append(x)
            x += step
        return out

    return [TdParams(g, h) for g in axis(gmin, gmax) for h in axis(hmin, hmax)]


SAMPLE_DENOMINATORS = (1, 2, 3, 4)


def sample_tp(n: int, seed: int, bound) -> list[TpParams]:
    """n random T_p parameter sets with entries k/m in [-bound, bound], m in 1..4."""
    if n < 0:
        raise ConfigError("samples must be non-negative", "/samples")
    bound = Fraction(bound)
    if bound <= 0:
        raise ConfigError("range must be positive", "/range")
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        vals = []
        for _ in range(8):
            m = int(rng.choice(SAMPLE_DENOMINATORS))
            top = int(bound * m)
            vals.append(Fraction(int(rng.integers(-top, top + 1)), m))
        out.append(TpParams(*vals))
    return out


def _scan_one(job):
    index, params, oracle = job
    row = scan_row(index, params)
    disagree = False
    if oracle:
        from .oracles import numeric_det_minimum
        tp = params.as_tp() if isinstance(params, TdParams) else params
        disagree = (numeric_det_minimum(tp) < 1e-9) == row["division"]
    return row, disagree


def run_scan(points, jobs: int = 1, oracle: bool = False):
    tasks = [(k, p, oracle) for k, p in enumerate(points)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        results = [_scan_one(t) for t in tasks]
    results.sort(key=lambda r: r[0]["index"])
    return [r for r, _ in results], [r["index"] for r, bad in results if bad]


# commands

def cmd_verify(args) -> int:
    inp = parse_algebra(_read_json(args.input))
    report, agree = verify(inp, oracle=args.oracle, timing=args.timing)
    print(_dump(report))
    return EXIT_OK if agree else EXIT_ORACLE


def cmd_compare(args) -> int:
    a = parse_algebra(_read_json(args.first))
    b = parse_algebra(_read_json(args.second))
    try:
        out = compare(a, b)
    except OutOfScope as e:
        out = {"isomorphic": "out_of_scope", "reason": str(e)}
    except (NotDivision, NotPartiallyAlternative, ResidualTooLarge) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    print(_dump(out))
    return EXIT_OK


def cmd_canonicalize(args) -> int:
    print(_dump(canonical_report(parse_algebra(_read_json(args.input)))))
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.grid is not None and args.samples is not None:
        raise ConfigError("give either --grid or --samples, not both")
    if args.grid is not None:
        points = parse_grid(args.grid)
    elif args.samples is not None:
        points = sample_tp(args.samples, args.seed, args.range)
    else:
        raise ConfigError("scan needs --grid or --samples")
    rows, bad = run_scan(points, jobs=args.jobs, oracle=args.oracle)
    if args.format == "csv":
        sys.stdout.write(rows_to_csv(rows))
    else:
        print(_dump(rows))
    if bad:
        print(f"oracle disagreement at rows {bad}", file=sys.stderr)
        return EXIT_ORACLE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="padiv",
        description="Classify four-dimensional partially alternative real division algebras.",
        epilog="Exit codes: 0 ok, 1 internal error, 2 bad input, 3 oracle disagreement.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="full classification report of one algebra")
    v.add_argument("--input", default="-", help="JSON algebra description, FILE or - for stdin")
    v.add_argument("--oracle", action="store_true", help="run slow numeric and brute-force cross-checks")
    v.add_argument("--timing", action="store_true", help="include per-stage wall times (breaks byte-for-byte determinism)")
    v.add_argument("--format", choices=["json"], default="json")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("compare", help="isomorphism test between two algebras")
    c.add_argument("first")
    c.add_argument("second")
    c.add_argument("--format", choices=["json"], default="json")
    c.set_defaults(func=cmd_compare)

    k = sub.add_parser("canonicalize", help="reduce a T_p algebra to T_d(g, h)")
    k.add_argument("--input", default="-")
    k.add_argument("--format", choices=["json"], default="json")
    k.set_defaults(func=cmd_canonicalize)

    s = sub.add_parser("scan", help="sweep a (g, h) grid or random T_p parameters", epilog=CSV_HELP)
    s.add_argument("--grid", help="gmin:gmax:hmin:hmax:step over T_d(g, h)")
    s.add_argument("--samples", type=int, help="number of random T_p points")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--range", default="5", help="random entries lie in [-R, R]")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.add_argument("--oracle", action="store_true", help="cross-check every division verdict numerically")
    s.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as e:  # noqa: BLE001 - last-resort exit code
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
