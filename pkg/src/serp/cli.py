"""Command-line interface.

One subcommand per artifact: decompose (closed forms and both
parametric engines), verify, scan (a prime range), sieve (progression
classes), stats (density report) and table (published-row audit with
errata).  Output is deterministic for fixed argv: JSON lines when
stdout is not a TTY, an aligned table when it is, CSV on request.

Exit codes: 0 success; 1 no solution found within bounds (or a failed
verify); 2 usage error; 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .arith import is_prime
from .ed1 import default_gamma_max, ed1_reconstruct, ed1_search
from .ed2 import default_delta_max, ed2_reconstruct, ed2_search
from .errors import DeltaFilterFailed, InvariantViolation, SerpError
from .explicit import decompose_explicit, repair_distinct
from .sieve import (
    admissible_moduli,
    average_local_params,
    build_progression_class,
    reconstruct_from_class,
    scan_class_primes,
    write_scan_csv,
    CSV_FIELDS,
)
from .solution import Solution, SolutionClass, classify_solution, make_solution, verify_solution
from .tables import ROW_COLUMNS, TABLE_IDS, TABLES, audit_table, row_from_bc

SOLUTION_CSV_COLUMNS = ("#",) + ROW_COLUMNS  # the published-table layout

_USAGE_EXIT = 2
_INVARIANT_EXIT = 3


def _dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _emit_table(records: list[dict], columns: list[str], out) -> None:
    cells = [[("" if r.get(c, "") is None else str(r.get(c, ""))) for c in columns] for r in records]
    widths = [
        max(len(columns[i]), max((len(row[i]) for row in cells), default=0))
        for i in range(len(columns))
    ]
    out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _emit_csv(records: list[dict], columns: list[str], out) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for r in records:
        writer.writerow([("" if r.get(c, "") is None else r.get(c, "")) for c in columns])


def _pick_format(args) -> str:
    if args.format:
        return args.format
    return "table" if sys.stdout.isatty() else "json"


def _solution_table_row(idx: int, sol: Solution) -> dict:
    """Solution rendered in the published-table column layout; columns
    that only exist for two-multiple rows stay empty otherwise."""
    row = {c: "" for c in SOLUTION_CSV_COLUMNS}
    row["#"] = idx
    row["A"], row["B"], row["C"] = sol.A, sol.B, sol.C
    if sol.B % sol.P == 0 and sol.C % sol.P == 0:
        full = row_from_bc(sol.P, sol.B // sol.P, sol.C // sol.P)
        if full is not None and full["A"] == sol.A:
            row.update(full)
    return row


def _emit_solutions(solutions: list[Solution], fmt: str, out) -> None:
    for sol in solutions:
        if not verify_solution(sol.P, sol.A, sol.B, sol.C):  # no unchecked output
            raise InvariantViolation(f"unverified solution reached output: {sol}")
    if fmt == "json":
        for sol in solutions:
            out.write(sol.as_json() + "\n")
    else:
        rows = [_solution_table_row(i, s) for i, s in enumerate(solutions, start=1)]
        if fmt == "csv":
            _emit_csv(rows, list(SOLUTION_CSV_COLUMNS), out)
        else:
            recs = [s.as_dict() for s in solutions]
            _emit_table(recs, ["P", "A", "B", "C", "class", "strict"], out)


def _bound(flag_value, env_name: str, default: int) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(env_name)
    if env:
        return int(env)
    return default


def _first_ed2(P: int, delta_max: int):
    for delta in range(1, delta_max + 1):
        found = ed2_search(P, delta, delta_min=delta)
        if found:
            return found[0]
    return None


def _first_ed1(P: int, gamma_max: int):
    for gamma in range(4, gamma_max + 1, 5):
        found = ed1_search(P, gamma, gamma_min=gamma)
        if found:
            return found[0]
    return None


def _decompose(P: int, method: str, gamma_max: int, delta_max: int,
               want_all: bool, weak: bool) -> list[Solution]:
    residue = P % 5
    if residue == 0:
        raise SerpError(f"P = {P} is out of scope (5 divides P)")
    if method == "explicit" or (method == "auto" and residue != 1):
        sol = decompose_explicit(P)  # raises WrongResidue when residue is 1
        if not weak:
            sol = repair_distinct(sol)
        return [sol]
    solutions: list[Solution] = []
    if not want_all:
        if method in ("auto", "ed2"):
            w2 = _first_ed2(P, delta_max)
            if w2 is not None:
                return [ed2_reconstruct(w2)]
        if method in ("auto", "ed1"):
            w1 = _first_ed1(P, gamma_max)
            if w1 is not None:
                return [ed1_reconstruct(w1)]
        return []
    if method in ("auto", "ed2"):
        solutions += [ed2_reconstruct(w) for w in ed2_search(P, delta_max)]
    if method in ("auto", "ed1"):
        solutions += [ed1_reconstruct(w) for w in ed1_search(P, gamma_max)]
    return sorted(set(solutions), key=Solution.sort_key)


def cmd_decompose(args, out) -> int:
    P = args.P
    if not is_prime(P):
        raise SerpError(f"P = {P} is not prime; decompose needs a prime")
    gamma_max = _bound(args.gamma_max, "SERP_GAMMA_MAX", default_gamma_max(P))
    delta_max = _bound(args.delta_max, "SERP_DELTA_MAX", default_delta_max(P))
    solutions = _decompose(P, args.method, gamma_max, delta_max, args.all, args.weak)
    if not solutions:
        print(
            f"no solution for P = {P} within gamma <= {gamma_max}, "
            f"delta <= {delta_max}; raise --gamma-max/--delta-max",
            file=sys.stderr,
        )
        return 1
    _emit_solutions(solutions, _pick_format(args), out)
    return 0


def cmd_verify(args, out) -> int:
    if not is_prime(args.P):
        raise SerpError(f"P = {args.P} is not prime")
    ok = verify_solution(args.P, args.A, args.B, args.C)
    record = {"P": args.P, "A": args.A, "B": args.B, "C": args.C, "valid": ok}
    if ok and args.P not in (2, 3, 5):
        # provisional label; classification reads only P and the triple
        sol = make_solution(args.P, args.A, args.B, args.C, SolutionClass.ED1)
        mult = classify_solution(sol)
        record["multiplicity"] = {"count": mult.count, "positions": list(mult.positions)}
    fmt = _pick_format(args)
    if fmt == "table":
        _emit_table([{k: json.dumps(v) if isinstance(v, dict) else v
                      for k, v in record.items()}], list(record), out)
    else:
        out.write(_dumps(record) + "\n")
    return 0 if ok else 1


def cmd_scan(args, out) -> int:
    if args.to < getattr(args, "from"):
        raise SerpError("--to must be >= --from")
    gamma_flag, delta_flag = args.gamma_max, args.delta_max
    solutions = []
    misses = []
    for P in range(max(getattr(args, "from"), 2), args.to + 1):
        if P == 5 or not is_prime(P):
            continue
        residue = P % 5
        if args.method == "explicit" and residue == 1:
            continue
        if args.method == "ed1" and residue != 1:
            continue
        gamma_max = _bound(gamma_flag, "SERP_GAMMA_MAX", default_gamma_max(P))
        delta_max = _bound(delta_flag, "SERP_DELTA_MAX", default_delta_max(P))
        found = _decompose(P, args.method, gamma_max, delta_max, False, args.weak)
        if found:
            solutions += found
        else:
            misses.append(P)
    _emit_solutions(solutions, _pick_format(args), out)
    if misses:
        print(f"no solution within bounds for: {misses}", file=sys.stderr)
        return 1
    return 0


def cmd_sieve(args, out) -> int:
    rows = []
    for r in admissible_moduli(args.rmax, args.delta):
        cls = build_progression_class(args.delta, r)
        primes = scan_class_primes(cls, args.xmax)
        first = primes[0] if primes else None
        row = {
            "delta": args.delta,
            "r": r,
            "modulus": cls.modulus,
            "residue": cls.residue,
            "primes_found": len(primes),
            "first_prime": first,
            "exceptional": not primes,
        }
        if first is not None:
            try:
                row["first_solution"] = reconstruct_from_class(first, args.delta, r).as_dict()
            except DeltaFilterFailed:
                row["first_solution"] = None
        else:
            row["first_solution"] = None
        rows.append(row)
    fmt = _pick_format(args)
    if fmt == "json":
        for row in rows:
            out.write(_dumps(row) + "\n")
    elif fmt == "csv":
        write_scan_csv(
            [{k: ("" if row[k] is None else row[k]) for k in CSV_FIELDS} for row in rows], out
        )
    else:
        _emit_table(rows, list(CSV_FIELDS), out)
    return 0


def cmd_stats(args, out) -> int:
    report = average_local_params(args.x, args.rmax, args.delta)
    fmt = _pick_format(args)
    if fmt == "json":
        out.write(report.as_json() + "\n")
    elif fmt == "csv":
        write_scan_csv(report.csv_rows(), out)
    else:
        avg = "undefined (no primes)" if report.average is None else str(report.average)
        out.write(f"x = {report.x}  R = {report.R}  delta = {report.delta}\n")
        out.write(f"primes = 1 (mod 5) up to x: {report.prime_count}\n")
        out.write(f"mean N(P; R, delta): {avg}\n")
        out.write(f"sum 1/phi(5r): {report.phi_sum}\n")
        out.write(f"exceptional r: {list(report.exceptional)}\n")
        _emit_table(report.csv_rows(), list(CSV_FIELDS), out)
    return 0


def cmd_table(args, out) -> int:
    table = TABLES[args.table_id]
    fmt = _pick_format(args)
    if not args.check:
        rows = []
        for i, printed in enumerate(table.rows, start=1):
            row = {c: printed.get(c, "") for c in ROW_COLUMNS}
            row["#"] = i
            rows.append(row)
        if fmt == "json":
            for row in rows:
                out.write(_dumps(row) + "\n")
        elif fmt == "csv":
            _emit_csv(rows, list(SOLUTION_CSV_COLUMNS), out)
        else:
            _emit_table(rows, list(SOLUTION_CSV_COLUMNS), out)
        return 0
    entries = audit_table(args.table_id)
    if fmt == "json":
        for entry in entries:
            out.write(entry.as_json() + "\n")
    elif fmt == "csv":
        columns = (
            ["#", "status", "xy_lemma_ok", "mismatched_columns"]
            + [f"printed_{c}" for c in ROW_COLUMNS]
            + [f"recomputed_{c}" for c in ROW_COLUMNS]
        )
        rows = []
        for e in entries:
            row = {
                "#": e.row,
                "status": e.status,
                "xy_lemma_ok": e.xy_lemma_ok,
                "mismatched_columns": ";".join(e.mismatched_columns),
            }
            for c in ROW_COLUMNS:
                row[f"printed_{c}"] = e.printed.get(c, "")
                row[f"recomputed_{c}"] = "" if e.recomputed is None else e.recomputed.get(c, "")
            rows.append(row)
        _emit_csv(rows, columns, out)
    else:
        rows = []
        for e in entries:
            if e.recomputed is None:
                summary = "unrecoverable from any anchor"
            else:
                summary = ", ".join(
                    f"{k}={e.recomputed[k]}" for k in ("b", "c", "delta", "A")
                )
            rows.append(
                {
                    "#": e.row,
                    "status": e.status,
                    "xy_lemma_ok": e.xy_lemma_ok,
                    "mismatched": ";".join(e.mismatched_columns) or "-",
                    "recomputed": summary,
                }
            )
        _emit_table(rows, ["#", "status", "xy_lemma_ok", "mismatched", "recomputed"], out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="serp",
        description="Construct, enumerate, verify and audit unit-fraction "
        "decompositions 5/P = 1/A + 1/B + 1/C for primes P.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("json", "csv", "table"),
            help="output format (default: table on a TTY, json otherwise)",
        )

    p = sub.add_parser("decompose", help="find decompositions for one prime")
    p.add_argument("P", type=int)
    p.add_argument("--method", choices=("auto", "explicit", "ed1", "ed2"), default="auto")
    p.add_argument("--all", action="store_true", help="emit every solution within bounds")
    p.add_argument("--gamma-max", type=int, help="one-multiple search bound (env SERP_GAMMA_MAX)")
    p.add_argument("--delta-max", type=int, help="two-multiple search bound (env SERP_DELTA_MAX)")
    p.add_argument("--weak", action="store_true", help="allow repeated denominators (skip repair)")
    add_format(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check one triple exactly")
    for name in ("P", "A", "B", "C"):
        p.add_argument(name, type=int)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="decompose every prime in a range")
    p.add_argument("--from", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--method", choices=("auto", "explicit", "ed1", "ed2"), default="auto")
    p.add_argument("--gamma-max", type=int)
    p.add_argument("--delta-max", type=int)
    p.add_argument("--weak", action="store_true")
    add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("sieve", help="scan progression classes for primes")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--xmax", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("stats", help="density statistics N(P; R, delta)")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("table", help="reproduce or audit a published table")
    p.add_argument("table_id", choices=TABLE_IDS, metavar="{" + ",".join(TABLE_IDS) + "}")
    p.add_argument("--check", action="store_true", help="audit rows against recomputation")
    add_format(p)
    p.set_defaults(func=cmd_table)

    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return int(exc.code or 0)
    stream = out if out is not None else sys.stdout
    try:
        return args.func(args, stream)
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return _INVARIANT_EXIT
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return _INVARIANT_EXIT
    except (SerpError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
