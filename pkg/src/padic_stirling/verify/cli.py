"""Command-line entry point: ``padic-stirling <subcommand> [flags]``.

Rows go to --out (or stdout) as CSV or JSON; the pass/fail summary goes to
stderr.  Exit status: 0 when every check passes, 1 on a mathematical
mismatch, 2 when a resource cap (search depth, precision guard, an L that is
too small) stopped the run.  A mismatch outranks a cap.

Settings resolve as flag, then PADIC_STIRLING_<NAME> in the environment,
then the built-in default.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from typing import Callable

from ..errors import DepthCapExceeded, GuardExceeded, StabilityNotReached, Unsupported
from ..partial_stirling import DEFAULT_DEPTH_CAP
from ..report import Report
from . import commands

EXIT_OK, EXIT_MISMATCH, EXIT_CAP = 0, 1, 2

log = logging.getLogger("padic_stirling")


def int_list(text: str) -> list[int]:
    """'3,4' or '3-5' or a mix: '1-4,10'."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        lo, sep, hi = part.partition("-")
        if sep and lo:
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _env(name: str, cast: Callable = str):
    raw = os.environ.get(f"PADIC_STIRLING_{name}")
    return None if raw in (None, "") else cast(raw)


def _setting(args, name: str, default, cast: Callable = int):
    value = getattr(args, name, None)
    if value is not None:
        return value
    value = _env(name.upper(), cast)
    return default if value is None else value


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, help="prime")
    parser.add_argument("--n-max", type=int, help="largest n")
    parser.add_argument("--t", type=int_list, help="t values, e.g. 3,4 or 3-5")
    parser.add_argument("--depth-cap", type=int, help=f"class-search depth cap (default {DEFAULT_DEPTH_CAP})")
    parser.add_argument("--format", choices=("csv", "json"), help="row format (default csv)")
    parser.add_argument("--out", help="write rows here instead of stdout")
    parser.add_argument("--report", help="also write the pass/fail report as JSON")
    parser.add_argument("--cache-dir", help="on-disk result cache")
    parser.add_argument("--jobs", type=int, help="worker processes (default 1)")
    parser.add_argument("--seed", type=int, help="seed for random spot checks (default 0)")
    parser.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="padic-stirling", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table1", help="e_2(n-1,n), max_k e_2(k,n) and its first k, against the stored table")
    _common(p)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--k-mod", type=int, default=1, help="search only k == n-1 mod this (1 = every k)")

    p = sub.add_parser("verify-main", help="e_p(n-1,n) = s_p(n) iff n is in the characterized set")
    _common(p)

    p = sub.add_parser("conjectures", help="scan the n = 2^t, 2^t+1 conjectures")
    _common(p)
    p.add_argument("--max-width", type=int, default=1 << 14, help="cap on the k-window width")

    p = sub.add_parser("james", help="James-number valuation formula")
    _common(p)
    p.add_argument("--n", type=int_list, default=[1, 2, 3, 4, 10])
    p.add_argument("--L", type=int_list, default=[4, 5])

    p = sub.add_parser("v1", help="exponent of the v1-periodic group in degree 2k of SU(n)")
    _common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("sweep-t", help="T-function closed forms and recurrences")
    _common(p)

    p = sub.add_parser("sweep-weisman", help="Weisman-type sums and the cyclotomic ring")
    _common(p)

    p = sub.add_parser("phi", help="mod 3 detectors tau and phi, special pairs")
    _common(p)
    return parser


def run(args) -> tuple[Report, list[dict]]:
    jobs = _setting(args, "jobs", 1)
    cache_dir = _setting(args, "cache_dir", None, str)
    depth_cap = _setting(args, "depth_cap", DEFAULT_DEPTH_CAP)
    seed = _setting(args, "seed", 0)
    cmd = args.command
    if cmd == "table1":
        return commands.cmd_table1(
            args.n_min, args.n_max or 38, args.p or 2, depth_cap, args.k_mod, jobs, cache_dir
        )
    if cmd == "verify-main":
        p = args.p or 2
        return commands.cmd_verify_main(p, args.n_max or (256 if p == 2 else 243), jobs, cache_dir)
    if cmd == "conjectures":
        return commands.cmd_conjectures(args.t or [3, 4], depth_cap, cache_dir, jobs, args.max_width)
    if cmd == "james":
        return commands.cmd_james(args.p or 3, args.n, args.L)
    if cmd == "v1":
        return commands.cmd_v1(args.p or 3, args.k, args.n)
    if cmd == "sweep-t":
        n2, n3 = (args.n_max, args.n_max) if args.n_max else (64, 81)
        return _checks_as_rows(commands.cmd_sweep_t(n2=n2, n3=n3))
    if cmd == "sweep-weisman":
        primes = [args.p] if args.p else [3, 5, 7]
        return _checks_as_rows(commands.cmd_sweep_weisman(args.n_max or 200, primes, seed, jobs))
    if cmd == "phi":
        return commands.cmd_phi(args.n_max or 243)
    raise AssertionError(cmd)


def _checks_as_rows(result):
    rep, rows = result
    return rep, rows or [{"check": c.name, "total": c.total, "failed": c.failed} for c in rep.checks.values()]


def render(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    fields: list[str] = []
    for row in rows:
        fields.extend(k for k in row if k not in fields)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, restval="", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def exit_code(rep: Report) -> int:
    if not rep.ok:
        return EXIT_MISMATCH
    return EXIT_CAP if rep.resource_limited else EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        rep, rows = run(args)
    except (DepthCapExceeded, GuardExceeded, StabilityNotReached) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except Unsupported as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_CAP
    fmt = _setting(args, "format", "csv", str)
    text = render(rows, fmt)
    out = _setting(args, "out", None, str)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(rep.to_dict(), fh, indent=1)
    print(f"# {rep.title}", file=sys.stderr)
    for line in rep.lines():
        print(line, file=sys.stderr)
    code = exit_code(rep)
    log.info("exit %d", code)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
