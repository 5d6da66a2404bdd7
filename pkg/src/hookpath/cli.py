"""Command-line driver: ``hookpath verify`` and ``hookpath show``.

Exit codes: 0 pass, 1 hard failure, 2 usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .cache import floor_table
from .core import is_odd_prime
from .diagram import class_vertex, predecessors
from .fibonacci import classify, fib_dp
from .genfun import genfun_for_class, series_coefficients
from .paths import enumerate_paths
from .stats import descent_set, inversion_set
from .suites import SUITES, estimated_paths, plan, run_job, summarize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
DEFAULT_MAX_PATHS = 5_000_000
CSV_FIELDS = ("schema_version", "suite", "check", "severity", "status", "p", "k", "floor", "l", "detail")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    p: int
    k_set: tuple[int, ...]
    max_floor: int
    suite: str = "all"
    format: str = "json"
    output_path: Path | None = None
    parallelism: int = 1
    force: bool = False
    max_paths: int = DEFAULT_MAX_PATHS

    def validate(self) -> None:
        if not is_odd_prime(self.p):
            raise UsageError("p must be an odd prime")
        if not self.k_set or any(k < 0 for k in self.k_set):
            raise UsageError("--k needs nonnegative integers")
        if self.max_floor < 2 * max(self.k_set) + 2:
            raise UsageError(f"--max-floor must be at least {2 * max(self.k_set) + 2} for k={max(self.k_set)}")
        if self.parallelism < 1:
            raise UsageError("--parallelism must be positive")

    def suites(self) -> list[str]:
        return list(SUITES) if self.suite == "all" else [self.suite]


def parse_k_set(text: str) -> tuple[int, ...]:
    try:
        return tuple(sorted({int(x) for x in text.split(",") if x.strip()}))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad k list {text!r}") from exc


def render_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for r in rows:
            flat = {key: r.get(key) for key in CSV_FIELDS}
            if r.get("suite") == "summary":
                flat["detail"] = json.dumps({key: r[key] for key in ("rows", "hard_failures", "soft_failures")})
            else:
                flat["detail"] = json.dumps(r["detail"], sort_keys=True)
            writer.writerow(flat)
        return buf.getvalue()
    lines = []
    for r in rows:
        if r.get("suite") == "summary":
            lines.append(f"summary: {r['rows']} rows, {r['hard_failures']} hard failures, {r['soft_failures']} soft failures")
            continue
        where = " ".join(f"{key}={r[key]}" for key in ("p", "k", "floor", "l") if r[key] is not None)
        lines.append(f"{r['status'].upper():4} {r['severity']:4} {r['suite']}/{r['check']} {where}")
    return "\n".join(lines) + "\n"


def cmd_verify(cfg: RunConfig, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    cfg.validate()
    cost = estimated_paths(cfg.p, list(cfg.k_set), cfg.max_floor)
    if cost > cfg.max_paths and not cfg.force:
        print(f"estimated {cost} paths exceeds the cap of {cfg.max_paths}; rerun with --force", file=err)
        return EXIT_RESOURCE
    jobs = plan(cfg.p, list(cfg.k_set), cfg.max_floor, cfg.suites())
    if cfg.parallelism > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            chunks = list(pool.map(run_job, jobs))
    else:
        chunks = [run_job(j) for j in jobs]
    rows = [r for chunk in chunks for r in chunk]
    summary = summarize(rows)
    text = render_rows(rows + [summary], cfg.format)
    if cfg.output_path is None:
        out.write(text)
    else:
        cfg.output_path.write_text(text)
        print(render_rows([summary], "text"), end="", file=err)
    return EXIT_FAIL if summary["hard_failures"] else EXIT_OK


def _stage(args: argparse.Namespace) -> int:
    if args.s is not None:
        return args.s
    if args.floor is None:
        raise UsageError("give --floor or --s")
    return args.floor // 2 - args.k


def cmd_show(args: argparse.Namespace, out=None) -> int:
    out = sys.stdout if out is None else out
    p, k, l = args.p, args.k, args.l
    if not is_odd_prime(p):
        raise UsageError("p must be an odd prime")
    what = args.what
    try:
        if what == "genfun":
            cls = None if k == 0 else (l if k == 1 else classify(p, k, k + 2, l))
            f = genfun_for_class(p, k, cls)
            print(f.render(), file=out)
            print(", ".join(str(c) for c in series_coefficients(f, args.terms)), file=out)
            return EXIT_OK
        if what == "fib":
            print(fib_dp(p, k, _stage(args))[l], file=out)
            return EXIT_OK
        floor = args.floor if args.floor is not None else 2 * (k + _stage(args))
        v = class_vertex(p, floor, k, l)
        if what == "vertex":
            print(json.dumps(v.to_dict(), sort_keys=True), file=out)
            for u, b in predecessors(v):
                print(f"  <- {u.name()} hook={u.hook} block=({b.horiz},{b.vert})", file=out)
        elif what == "paths":
            for path in enumerate_paths(v):
                ds = sorted(descent_set(path))
                inv = len(inversion_set(path))
                print(f"start={path.start_index} m={list(path.m_seq)} des={ds} inv={inv}", file=out)
        elif what == "poly":
            print(floor_table(p, k, floor)[l].render(), file=out)
    except (ValueError, LookupError) as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hookpath", description="Descent statistics on the hook-partition Bratteli diagram.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites and emit a report")
    v.add_argument("--p", type=int, required=True)
    v.add_argument("--k", type=parse_k_set, default=(0,), help="comma-separated classes, e.g. 0,1")
    v.add_argument("--max-floor", type=int, required=True)
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--format", choices=("json", "csv", "text"), default="json")
    v.add_argument("--out", type=Path, default=None, help="report file (default: stdout)")
    v.add_argument("--parallelism", type=int, default=1)
    v.add_argument("--force", action="store_true", help="run past the path-count guard")
    v.add_argument("--max-paths", type=int, default=DEFAULT_MAX_PATHS, help="path-count guard")

    s = sub.add_parser("show", help="print one object")
    s.add_argument("what", choices=("vertex", "paths", "poly", "fib", "genfun"))
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--floor", type=int, default=None)
    s.add_argument("--s", type=int, default=None, help="stage; floor = 2(k+s)")
    s.add_argument("--l", type=int, default=0)
    s.add_argument("--terms", type=int, default=5)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            cfg = RunConfig(
                p=args.p,
                k_set=args.k,
                max_floor=args.max_floor,
                suite=args.suite,
                format=args.format,
                output_path=args.out,
                parallelism=args.parallelism,
                force=args.force,
                max_paths=args.max_paths,
            )
            return cmd_verify(cfg)
        return cmd_show(args)
    except UsageError as exc:
        print(f"hookpath: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
