"""Command-line front end: ``decomp``, ``tilt``, ``fock apply``, ``verify`` and ``picture``.

Exit codes: 0 on success, 1 when a ``verify`` suite has a failing check,
2 on invalid arguments (argparse errors, malformed partitions, out-of-range
bounds, p = 2 in modified mode). Output bytes depend only on the arguments.
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import branching, hecke, llt
from .fock import FockVector, apply_ops, parse_ops
from .partitions import parse_partition

# bounds accepted by ``verify``; larger runs belong in scripts/
MAX_SWEEP_N = 16
MAX_L = 12
MAX_M = 2000
MAX_LLT_N = 10

REPORT_HEADER = ["check", "instance", "row", "l", "q", "lhs", "rhs", "k", "result"]

SUITES = ("thm1", "thm3", "duality", "eq13", "eq5", "hecke", "erdmann", "bridge")


class UsageError(Exception):
    """Bad argument value detected after parsing; reported with exit code 2."""


@dataclass(frozen=True)
class ReportRow:
    check: str
    instance: str
    row: str
    l: str
    q: str
    lhs: str
    rhs: str
    k: str
    passed: bool

    def cells(self) -> list[str]:
        return [self.check, self.instance, self.row, self.l, self.q, self.lhs, self.rhs, self.k,
                "pass" if self.passed else "FAIL"]

    def sort_key(self):
        nums = tuple(int(x) for x in re.findall(r"-?\d+", self.instance))
        return (self.check, int(self.l or 0), len(nums), sum(nums), tuple(-x for x in nums), self.row, self.q)


def _from_sweep(r: branching.SweepRow) -> ReportRow:
    return ReportRow(r.check, ",".join(map(str, r.partition)), str(r.row), str(r.l), "",
                     str(r.lhs), str(r.rhs), "", r.passed)


def _from_llt(r: llt.LLTCheck) -> ReportRow:
    return ReportRow(r.check, r.instance, "", str(r.l), "", r.lhs, r.rhs, "", r.passed)


def _from_hecke(r: hecke.HeckeCheck) -> ReportRow:
    return ReportRow(r.identity, r.partition, r.i, "", str(r.q), r.lhs, r.rhs,
                     "" if r.k is None else str(r.k), r.passed)


def _bound(name: str, value: int, lo: int, hi: int) -> int:
    if not lo <= value <= hi:
        raise UsageError(f"{name} must be in [{lo}, {hi}], got {value}")
    return value


def _default_jobs() -> int:
    raw = os.environ.get("SPECFOCK_JOBS", "1")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"SPECFOCK_JOBS must be an integer, got {raw!r}") from None


def collect_rows(args: argparse.Namespace) -> list[ReportRow]:
    suite = args.suite
    ls = range(2, _bound("--max-l", args.max_l, 2, MAX_L) + 1)
    if suite in ("thm1", "thm3", "duality", "eq13"):
        max_n = args.max_n if args.max_n is not None else {"duality": 14, "eq13": 12}.get(suite, 10)
        _bound("--max-n", max_n, 0, MAX_SWEEP_N)
        sweep = {
            "thm1": branching.restriction_sweep,
            "thm3": branching.induction_sweep,
            "duality": branching.duality_sweep,
            "eq13": branching.weight_identity_sweep,
        }[suite]
        return [_from_sweep(r) for r in sweep(max_n, ls)]
    if suite in ("eq5", "bridge"):
        max_n = _bound("--max-n", args.max_n if args.max_n is not None else 8, 0, MAX_LLT_N)
        if suite == "eq5":
            ls = args.l or [2, 3]
            return [_from_llt(r) for r in llt.eq5_checks(max_n, ls, args.sign)]
        return [_from_llt(r) for r in llt.bridge_checks(max_n, args.l or [2, 3, 5, 7])]
    if suite == "erdmann":
        _bound("--max-m", args.max_m, 0, MAX_M)
        try:
            return [_from_llt(r) for r in llt.erdmann_checks(args.p, args.max_m, args.mode)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    # hecke
    _bound("--max-rank", args.max_rank, 1, hecke.MAX_RANK)
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    _bound("--jobs", jobs, 1, 256)
    if jobs == 1:
        rows = hecke.run_hecke_suite(args.max_rank, args.seed)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = hecke.run_hecke_suite(args.max_rank, args.seed, mapper=pool.map)
    return [_from_hecke(r) for r in rows]


def render_report(rows: Sequence[ReportRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_HEADER)
    for r in sorted(rows, key=ReportRow.sort_key):
        w.writerow(r.cells())
    return buf.getvalue()


# -- commands ----------------------------------------------------------------


def run_decomp(args: argparse.Namespace, out) -> int:
    if args.n < 0 or args.l < 2:
        raise UsageError("need n >= 0 and l >= 2")
    G = llt.canonical_basis(args.n, args.l, args.convention)
    out.write({"json": G.to_json() + "\n", "csv": G.to_csv(), "latex": G.to_latex()}[args.format])
    return 0


def run_tilt(args: argparse.Namespace, out) -> int:
    if args.m < 0:
        raise UsageError("m must be >= 0")
    _bound("--m", args.m, 0, MAX_M)
    try:
        t = llt.tilting_character(args.m, args.p, args.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fmt = args.format
    if fmt.startswith("picture-"):
        out.write(llt.render_alcove_picture(t, fmt.removeprefix("picture-")))
    else:
        out.write({"json": t.to_json() + "\n", "csv": t.to_csv(), "latex": t.to_latex()}[fmt])
    return 0


def run_picture(args: argparse.Namespace, out) -> int:
    args.format = "picture-" + args.format
    return run_tilt(args, out)


def run_fock(args: argparse.Namespace, out) -> int:
    if args.l < 2:
        raise UsageError("l must be >= 2")
    try:
        start = parse_partition(args.start)
        parse_ops(args.ops)
        for _, i, _ in parse_ops(args.ops):
            if not 0 <= i < args.l:
                raise ValueError(f"residue {i} out of range for l={args.l}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    v = apply_ops(FockVector.basis(start), args.ops, args.l, args.convention)
    out.write(v.to_json() + "\n" if args.format == "json" else str(v) + "\n")
    return 0


def run_verify(args: argparse.Namespace, out, err) -> int:
    rows = collect_rows(args)
    report = render_report(rows)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(report)
    else:
        out.write(report)
    failed = [r for r in rows if not r.passed]
    err.write(f"verify {args.suite}: {len(rows)} checks, {len(failed)} failed\n")
    for r in sorted(failed, key=ReportRow.sort_key)[:20]:
        err.write(f"  FAIL {r.check} {r.instance or '-'} row={r.row or '-'} l={r.l or '-'} q={r.q or '-'}\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="specfock", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decomp", help="graded decomposition matrix from the canonical basis")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--l", type=int, required=True)
    d.add_argument("--format", choices=["json", "csv", "latex"], default="json")
    d.add_argument("--convention", choices=["right", "left"], default="right")

    t = sub.add_parser("tilt", help="two-row tilting character T(m)")
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--m", type=int, required=True)
    t.add_argument("--mode", choices=["quantum", "modified"], default="modified")
    t.add_argument("--format", choices=["json", "csv", "latex", "picture-text", "picture-svg"], default="json")

    pic = sub.add_parser("picture", help="alcove picture of T(m)")
    pic.add_argument("--p", type=int, required=True)
    pic.add_argument("--m", type=int, required=True)
    pic.add_argument("--mode", choices=["quantum", "modified"], default="modified")
    pic.add_argument("--format", choices=["text", "svg"], default="text")

    f = sub.add_parser("fock", help="Fock space operators")
    fsub = f.add_subparsers(dest="fock_command", required=True)
    fa = fsub.add_parser("apply", help="apply an operator word to a basis vector")
    fa.add_argument("--l", type=int, required=True)
    fa.add_argument("--ops", required=True, help='word such as "f0 f3^(2) e1"; the rightmost acts first')
    fa.add_argument("--start", required=True, help='partition such as "2,1"; "" is the empty partition')
    fa.add_argument("--convention", choices=["right", "left"], default="right")
    fa.add_argument("--format", choices=["text", "json"], default="text")

    v = sub.add_parser("verify", help="run a verification suite and emit a CSV report")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--max-l", type=int, default=8)
    v.add_argument("--l", type=int, action="append", help="restrict eq5/bridge to these l (repeatable)")
    v.add_argument("--p", type=int, default=3)
    v.add_argument("--max-m", type=int, default=120)
    v.add_argument("--mode", choices=["quantum", "modified"], default="modified")
    v.add_argument("--sign", type=int, choices=[1, -1], default=1, help="eq5: exponent sign of the weight twist")
    v.add_argument("--max-rank", type=int, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=None, help="worker processes for hecke (default $SPECFOCK_JOBS or 1)")
    v.add_argument("--output", default=None, help="write the CSV report here instead of stdout")
    return ap


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "decomp":
            return run_decomp(args, out)
        if args.command == "tilt":
            return run_tilt(args, out)
        if args.command == "picture":
            return run_picture(args, out)
        if args.command == "fock":
            return run_fock(args, out)
        return run_verify(args, out, err)
    except UsageError as exc:
        err.write(f"specfock: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
