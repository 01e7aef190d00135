"""Command line front end: ``s2b <suite> [options]``.

Exit status is 0 when every executed case passed (inconclusive searches
included, with a warning), 1 when some case failed, and 2 on usage or
resource errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import suites
from .exactla import dimension_table_csv
from .suites import SuiteReport

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# degrees above these need --long-run
_LONG_RUN = {"dims": 8, "nilpotency": 10, "one-sided": 8, "identities": 9, "bounds": 8, "fuse": 7, "hecke": 8}


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="degree of the symmetric group")
    common.add_argument("--n-max", type=int, help="largest degree for table commands")
    common.add_argument("--seed", type=int, default=None, help="seed for sampled or searched cases")
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("--long-run", action="store_true", help="allow jobs that take a long time or much memory")
    common.add_argument("--out", help="write the report here instead of standard output")
    common.add_argument("--deterministic", action="store_true", help="report millis as 0 for byte-stable output")

    parser = argparse.ArgumentParser(prog="s2b", description="Exact verification suites for somewhere-to-below shuffles.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("identities", parents=[common], help="every identity among the shuffles")
    p = sub.add_parser("bounds", parents=[common], help="the two bound theorems and corollaries")
    p.add_argument("--cap", type=int, help="largest product length for the left bound")
    p = sub.add_parser("counterexamples", parents=[common], help="nonvanishing products outside [j]")
    p.add_argument("--explore", action="store_true", help="search the least annihilating length (n <= 5)")
    sub.add_parser("nilpotency", parents=[common], help="measured versus conjectured nilpotency indices")
    sub.add_parser("one-sided", parents=[common], help="powers of commutators of one-sided shuffles")
    sub.add_parser("dims", parents=[common], help="dimensions of Q[t_1, ..., t_n]")
    sub.add_parser("quadratic", parents=[common], help="quadratic span dimensions and right multiples")
    p = sub.add_parser("hecke", parents=[common], help="the q-deformed identity and its q = 0 failure")
    p.add_argument("--hecke-conjecture", action="store_true", help="scan nilpotency in the Hecke algebra (n <= 5)")
    sub.add_parser("fuse", parents=[common], help="the s^+ ideals, mu elements and their lemmas")
    p = sub.add_parser("all", parents=[common], help="every suite at one degree")
    p.add_argument("--cap", type=int)
    p.add_argument("--hecke-conjecture", action="store_true")
    return parser


def _need_n(args, default: int | None = None) -> int:
    n = args.n if args.n is not None else default
    if n is None:
        raise ValueError(f"{args.command} needs --n")
    if n < 1:
        raise ValueError("--n must be positive")
    return n


def _gate(command: str, n: int, long_run: bool) -> None:
    limit = _LONG_RUN.get(command)
    if limit is not None and n >= limit and not long_run:
        raise PermissionError(f"{command} at n={n} is a long run; pass --long-run")


def _run(args) -> list[SuiteReport]:
    cmd = args.command
    seed = args.seed
    if cmd == "dims":
        n_max = args.n_max if args.n_max is not None else _need_n(args)
        _gate("dims", n_max, args.long_run)
        return [suites.suite_dimensions(n_max, long_run=args.long_run)]
    if cmd == "quadratic":
        n_max = args.n_max if args.n_max is not None else (args.n or 7)
        return [suites.suite_quadratic(n_max)]
    n = _need_n(args)
    _gate(cmd if cmd != "all" else "identities", n, args.long_run)
    if cmd == "identities":
        return [suites.suite_identities(n)]
    if cmd == "bounds":
        return [suites.suite_bounds(n, cap=args.cap, seed=seed or 0)]
    if cmd == "counterexamples":
        return [suites.suite_counterexamples(n, explore=args.explore)]
    if cmd == "nilpotency":
        return [suites.suite_nilpotency(n)]
    if cmd == "one-sided":
        return [suites.scan_one_sided(n, seed=1 if seed is None else seed)]
    if cmd == "hecke":
        return [suites.suite_hecke(n, conjecture=args.hecke_conjecture, seed=seed or 0)]
    if cmd == "fuse":
        return [suites.suite_fuse(n)]
    if cmd == "all":
        for name in ("bounds", "fuse", "hecke", "one-sided"):
            _gate(name, n, args.long_run)
        reports = [
            suites.suite_identities(n),
            suites.suite_bounds(n, cap=args.cap, seed=seed or 0),
            suites.suite_counterexamples(n),
        ]
        if n >= 2:
            reports.append(suites.suite_nilpotency(n))
            reports.append(suites.suite_hecke(n, conjecture=args.hecke_conjecture and n <= 5, seed=seed or 0))
        reports.append(suites.suite_fuse(n))
        reports.append(suites.scan_one_sided(n, seed=1 if seed is None else seed))
        reports.append(suites.suite_dimensions(min(n, 7)))
        return reports
    raise ValueError(f"unknown command {cmd}")


def _render(reports: Sequence[SuiteReport], fmt: str, deterministic: bool) -> str:
    if fmt == "json":
        data = [r.to_json(deterministic) for r in reports]
        return json.dumps(data[0] if len(data) == 1 else data, indent=2, sort_keys=False) + "\n"
    if fmt == "csv":
        if len(reports) == 1 and reports[0].suite == "dims":
            return dimension_table_csv((c.input["n"], int(c.got)) for c in reports[0].cases)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "n", "id", "input", "expected", "got", "pass"])
        for r in reports:
            for c in r.cases:
                w.writerow([r.suite, r.n, c.id, json.dumps(c.input, sort_keys=True), c.expected, c.got,
                            "" if c.passed is None else str(c.passed).lower()])
        return buf.getvalue()
    lines = []
    for r in reports:
        for c in r.cases:
            mark = {True: "PASS", False: "FAIL", None: "INFO"}[c.passed]
            params = " ".join(f"{k}={v}" for k, v in c.input.items())
            lines.append(f"{mark} {r.suite} {c.id} {params} -> {c.got}")
        for w in r.warnings:
            lines.append(f"WARN {r.suite} {w}")
        millis = 0 if deterministic else r.millis
        lines.append(f"{r.suite} n={r.n}: {r.verdict} ({len(r.cases)} cases, {millis} ms)")
    return "\n".join(lines) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    try:
        reports = _run(args)
    except (ValueError, PermissionError) as exc:
        print(f"s2b: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MemoryError:
        print("s2b: error: out of memory", file=sys.stderr)
        return EXIT_USAGE
    text = _render(reports, args.format, args.deterministic)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_FAIL if any(r.verdict == "fail" for r in reports) else EXIT_PASS


if __name__ == "__main__":
    sys.exit(main())
