"""Command-line front end.

Subcommands: invariant, table, verify, search, obstruct.  Every subcommand
accepts --format {plain,csv,json} and --out FILE.  Exit codes: 0 success,
1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import dataclass, field
from enum import Enum

from . import classify, sweeps
from .connectsum import find_exotic_pairs
from .framing import (
    FramingClass,
    LensSpace,
    QuotientData,
    framing_invariant,
    framing_modulus,
    normalized_framing_invariant,
    universally_tight_obstructed,
)
from .modring import is_prime, units

TABLE_COLUMNS = ("p", "q", "q_inv", "odd_rep_q", "odd_rep_qinv", "F", "F_norm")


class OutputFormat(Enum):
    PLAIN = "plain"
    CSV = "csv"
    JSON = "json"


@dataclass
class VerificationReport:
    """Outcome of a verification run; failures empty means overall pass."""

    checks_run: int = 0
    failures: list[tuple[str, int, int | None, int | None, object, object]] = field(
        default_factory=list
    )
    elapsed_ms: float = 0.0


class _Parser(argparse.ArgumentParser):
    # Usage problems must exit 1; argparse's default of 2 is reserved here
    # for verification failures.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _csv_text(header: tuple[str, ...], rows: list[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _require_odd_p(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be odd and >= 3, got {p}")


def invariant_payload(p: int, q: int, normalized: bool) -> dict:
    """Evaluate one invariant; q is reduced mod p before validation."""
    _require_odd_p(p)
    q_red = q % p
    if math.gcd(q_red, p) != 1:
        raise ValueError(f"q = {q} is not coprime to p = {p}")
    space = LensSpace(p, q_red)
    cls = normalized_framing_invariant(space) if normalized else framing_invariant(space)
    q_inv = pow(q_red, -1, p)
    return {"p": p, "q": q_red, "q_inv": q_inv, "value": cls.value, "normalized": normalized}


def table_rows(p_min: int, p_max: int) -> list[dict]:
    """One row per (odd p in range, unit q), sorted by (p, q)."""
    if not 3 <= p_min <= p_max:
        raise ValueError(f"need 3 <= p_min <= p_max, got {p_min}..{p_max}")
    rows = []
    start = p_min if p_min % 2 == 1 else p_min + 1
    for p in range(start, p_max + 1, 2):
        table = sweeps.invariant_table(p)
        half = pow(2, -1, p)
        for q in units(p):
            q_inv = pow(q, -1, p)
            rows.append(
                {
                    "p": p,
                    "q": q,
                    "q_inv": q_inv,
                    "odd_rep_q": q if q % 2 == 1 else q + p,
                    "odd_rep_qinv": q_inv if q_inv % 2 == 1 else q_inv + p,
                    "F": table[q],
                    "F_norm": (table[q] - half) % p,
                }
            )
    return rows


def _first_bad_lift(p: int, q: int, max_shift: int = 5) -> int:
    # Cold path: recover the offending lifted value for a failure record.
    inv = pow(q, -1, p)
    a = q if q % 2 == 1 else q + p
    b = inv if inv % 2 == 1 else inv + p
    base = (a - 1) * (b - 1) // 4 % p
    for j in range(max_shift + 1):
        for k in range(max_shift + 1):
            v = (a + 2 * j * p - 1) * (b + 2 * k * p - 1) // 4 % p
            if v != base:
                return v
    return base


def run_verification(max_p: int) -> tuple[VerificationReport, dict[int, list[tuple[int, int]]]]:
    """Sweep all odd p <= max_p; composite-order collisions are informational."""
    if max_p < 3:
        raise ValueError(f"max_p must be >= 3, got {max_p}")
    start = time.perf_counter()
    report = VerificationReport()
    collisions: dict[int, list[tuple[int, int]]] = {}
    for p in range(3, max_p + 1, 2):
        table = sweeps.invariant_table(p)
        unit_values = units(p)

        bad = sweeps.lift_mismatch(p, 5)
        report.checks_run += len(unit_values) * 36
        if bad != -1:
            report.failures.append(
                ("representative-independence", p, bad, None, table[bad], _first_bad_lift(p, bad))
            )

        for q in unit_values:
            q_inv = pow(q, -1, p)
            report.checks_run += 1
            if table[q] != table[q_inv]:
                report.failures.append(("inverse-symmetry", p, q, q_inv, table[q], table[q_inv]))
            report.checks_run += 1
            raw_sum = (table[q] + table[p - q]) % p
            if raw_sum != 1:
                report.failures.append(("antisymmetry", p, q, p - q, 1, raw_sum))

        if is_prime(p):
            report.checks_run += len(unit_values)
            if not classify.verify_prime_classification(p):
                report.failures.append(("prime-classification", p, None, None, True, False))
        else:
            report.checks_run += len(unit_values)
            found = classify.collision_scan(p)
            if found:
                collisions[p] = found
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report, collisions


def _render_invariant(payload: dict, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return json.dumps(payload)
    if fmt is OutputFormat.CSV:
        header = ("p", "q", "q_inv", "value", "normalized")
        row = tuple(str(payload[k]).lower() if k == "normalized" else payload[k] for k in header)
        return _csv_text(header, [row])
    return f"{payload['value']} (mod {payload['p']})"


def _render_table(rows: list[dict], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return json.dumps(rows)
    if fmt is OutputFormat.CSV:
        return _csv_text(TABLE_COLUMNS, [tuple(r[c] for c in TABLE_COLUMNS) for r in rows])
    lines = [" ".join(TABLE_COLUMNS)]
    lines.extend(" ".join(str(r[c]) for c in TABLE_COLUMNS) for r in rows)
    return "\n".join(lines)


def _render_verify(
    report: VerificationReport, collisions: dict[int, list[tuple[int, int]]], fmt: OutputFormat
) -> str:
    if fmt is OutputFormat.JSON:
        return json.dumps(
            {
                "checks_run": report.checks_run,
                "failures": [
                    {"check": c, "p": p, "q": q, "q2": q2, "expected": e, "actual": a}
                    for c, p, q, q2, e, a in report.failures
                ],
                "elapsed_ms": report.elapsed_ms,
                "composite_collisions": {str(p): [list(t) for t in v] for p, v in collisions.items()},
            }
        )
    if fmt is OutputFormat.CSV:
        header = ("checks_run", "failures", "elapsed_ms")
        return _csv_text(header, [(report.checks_run, len(report.failures), f"{report.elapsed_ms:.1f}")])
    lines = [
        f"{report.checks_run} checks in {report.elapsed_ms:.1f} ms, "
        f"{len(report.failures)} failure(s)"
    ]
    for c, p, q, q2, expected, actual in report.failures:
        lines.append(f"FAIL {c}: p={p} q={q} q2={q2} expected={expected} actual={actual}")
    for p in sorted(collisions):
        rendered = " ".join(f"({a},{b})" for a, b in collisions[p])
        lines.append(f"note: composite p={p} collisions: {rendered}")
    lines.append("FAIL" if report.failures else "PASS")
    return "\n".join(lines)


def _render_search(pairs, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return json.dumps(
            [
                {
                    "first": [[s.p, s.q] for s in a.summands],
                    "second": [[s.p, s.q] for s in b.summands],
                }
                for a, b in pairs
            ]
        )
    if fmt is OutputFormat.CSV:
        return _csv_text(("first", "second"), [(str(a), str(b)) for a, b in pairs])
    return "\n".join(f"{a} ~h {b} (not homeo)" for a, b in pairs)


def _render_obstruct(payload: dict, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return json.dumps(payload)
    if fmt is OutputFormat.CSV:
        header = ("group_order", "h1_z2_trivial", "pullback_class", "modulus", "obstructed")
        row = tuple(str(payload[k]).lower() if isinstance(payload[k], bool) else payload[k] for k in header)
        return _csv_text(header, [row])
    verdict = "obstructed" if payload["obstructed"] else "unobstructed"
    return f"{verdict} (mod {payload['modulus']})"


def _dispatch(args: argparse.Namespace) -> tuple[str, int]:
    fmt = OutputFormat(args.format)
    if args.command == "invariant":
        return _render_invariant(invariant_payload(args.p, args.q, args.normalized), fmt), 0
    if args.command == "table":
        return _render_table(table_rows(args.p_min, args.p_max), fmt), 0
    if args.command == "verify":
        report, collisions = run_verification(args.max_p)
        return _render_verify(report, collisions, fmt), 2 if report.failures else 0
    if args.command == "search":
        return _render_search(find_exotic_pairs(args.max_p, args.summands), fmt), 0
    # obstruct
    modulus = framing_modulus(args.group_order, not args.h1_nontrivial)
    cls = FramingClass(args.pullback_class % modulus.m, modulus)
    data = QuotientData(args.group_order, not args.h1_nontrivial, cls)
    payload = {
        "group_order": args.group_order,
        "h1_z2_trivial": not args.h1_nontrivial,
        "pullback_class": cls.value,
        "modulus": modulus.m,
        "obstructed": universally_tight_obstructed(data),
    }
    return _render_obstruct(payload, fmt), 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default="plain",
        help="output format (default: plain)",
    )
    common.add_argument("--out", metavar="FILE", default=None, help="write output to FILE")

    parser = _Parser(
        prog="lensframe",
        description="Framing invariants of odd-order lens spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_inv = sub.add_parser("invariant", parents=[common], help="framing class of L(p, q)")
    p_inv.add_argument("p", type=int, help="odd group order >= 3")
    p_inv.add_argument("q", type=int, help="integer coprime to p")
    p_inv.add_argument(
        "--normalized", action="store_true", help="recentre by -1/2 (subtract 2^-1 mod p)"
    )

    p_table = sub.add_parser("table", parents=[common], help="invariant table over a range of odd p")
    p_table.add_argument("p_min", type=int)
    p_table.add_argument("p_max", type=int)

    p_verify = sub.add_parser("verify", parents=[common], help="exhaustive checks for all odd p <= max_p")
    p_verify.add_argument("max_p", type=int)

    p_search = sub.add_parser(
        "search", parents=[common], help="sums homotopy-matched but not homeomorphic"
    )
    p_search.add_argument("max_p", type=int)
    p_search.add_argument("summands", type=int, nargs="?", default=1, choices=(1, 2))

    p_obs = sub.add_parser(
        "obstruct", parents=[common], help="universally tight contact structure obstruction"
    )
    p_obs.add_argument("group_order", type=int)
    p_obs.add_argument("pullback_class", type=int)
    p_obs.add_argument(
        "--h1-nontrivial",
        action="store_true",
        dest="h1_nontrivial",
        help="the quotient has H_1(M; Z/2) != 0 (modulus halves)",
    )
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        if text:
            print(text)
        return
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(text)
        if text and not text.endswith("\n"):
            fh.write("\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = _dispatch(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        _emit(text, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
