"""Command-line driver.

    sympsing gen --kind Y --d 5
    sympsing verify --suite identities --d 4..10 [--config FILE] [--out FILE]
    sympsing hilbert|quiver|slodowy [--d RANGE]
    sympsing all

Exit status is 0 iff no check failed, 1 otherwise, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib.metadata import PackageNotFoundError, version as _dist_version

from . import varieties
from .config import ConfigError, RunConfig, load_config, parse_range
from .report import VerificationReport
from .suites import RANGE_KEYS, SUITES, run_suites

GEN_KINDS = ("Q", "Z", "Y", "chart-Y0", "chart-Yd", "chart-Yr")


def tool_version() -> str:
    try:
        return _dist_version("artifact")
    except PackageNotFoundError:
        return "0+unknown"


class UsageError(Exception):
    pass


def _d_range(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    try:
        lo, hi = parse_range(text)
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    if lo < 4:
        raise UsageError(f"--d {text}: d must be >= 4")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sympsing", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=tool_version())
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a presentation as JSON")
    g.add_argument("--kind", choices=GEN_KINDS, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--r", type=int, help="chart index for chart-Yr")
    g.add_argument("--out")

    def common(sp, suite_flag: bool):
        if suite_flag:
            sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
        sp.add_argument("--d", help="N or LO..HI; narrows the selected suites")
        sp.add_argument("--config", help="JSON or key=value file with run settings")
        sp.add_argument("--out", help="report path (default: stdout)")
        sp.add_argument("--negative-controls", action="store_true",
                        help="also run corrupted inputs that must be rejected")

    common(sub.add_parser("verify", help="run check suites"), True)
    for name in ("hilbert", "quiver", "slodowy"):
        common(sub.add_parser(name, help=f"run the {name} suite"), False)
    common(sub.add_parser("all", help="run every suite"), False)
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _gen(args) -> int:
    if args.d < 4:
        raise UsageError("--d must be >= 4")
    if args.kind == "chart-Yr":
        if args.r is None or not 1 <= args.r <= args.d - 1:
            raise UsageError("chart-Yr needs --r in 1..d-1")
        pres = varieties.chart_presentation(args.kind, args.d, args.r)
    elif args.kind.startswith("chart-"):
        pres = varieties.chart_presentation(args.kind, args.d)
    else:
        pres = varieties.presentation(args.kind, args.d)
    _emit(pres.dumps(), args.out)
    return 0


def _verify(args) -> tuple[VerificationReport, RunConfig]:
    cfg = load_config(args.config)
    if args.command == "verify":
        names = SUITES if args.suite == "all" else (args.suite,)
    elif args.command == "all":
        names = SUITES
    else:
        names = (args.command,)
    rng = _d_range(args.d)
    if rng is not None:
        keys = [k for n in names for k in RANGE_KEYS[n]]
        cfg = cfg.with_range(keys, rng)
    for n in names:
        for k in RANGE_KEYS[n]:
            if cfg.ranges[k][0] < 4:
                raise UsageError(f"range for {k} starts below 4")
    rep = run_suites(names, cfg, controls=args.negative_controls)
    return rep, cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _gen(args)
        rep, cfg = _verify(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"sympsing: error: {exc}", file=sys.stderr)
        return 2
    except ConfigError as exc:
        print(f"sympsing: config error: {exc}", file=sys.stderr)
        return 2
    out = args.out or cfg.output
    _emit(rep.dumps(tool_version(), cfg.echo()), out)
    counts = rep.summary()
    print(json.dumps(counts, sort_keys=True), file=sys.stderr)
    if rep.skipped:
        print(f"sympsing: warning: {len(rep.skipped)} check(s) skipped on budget", file=sys.stderr)
    return 0 if not rep.failures else 1


if __name__ == "__main__":
    sys.exit(main())
