"""Command-line front end.

Two entry points:

  finalg check --ring Z/2 --group Q8 --property reversible
  finalg suite [--only znq8] [--json out.json] [--workers 4]

Running with no subcommand executes the full paper-scenario suite.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .exprs import ParseError, parse_group, parse_ring
from .groupring import GroupRing
from .properties import FAILS, HOLDS, Budget
from .scenarios import _CHECKERS, Report, run_suite, suite_to_json

_PROPERTY_CHOICES = ("reduced", "reversible", "symmetric", "si", "duo-left", "duo-right", "duo", "2primal")


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-pairs", type=int, default=1 << 24, metavar="N")
    p.add_argument("--budget-triples", type=int, default=1 << 26, metavar="N")
    p.add_argument("--mode", choices=("det", "rand"), default="det")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finalg",
        description="group rings over finite coefficient rings: property checks with witnesses",
    )
    sub = parser.add_subparsers(dest="command")

    check = sub.add_parser("check", help="run one property check on a ring or group ring")
    check.add_argument("--ring", required=True, help="ring expression, e.g. Z/4, GF(2^2), M2(GF(2)), GF(2)(+)Z/3")
    check.add_argument("--group", default=None, help="optional group expression, e.g. Q8, C6, Q8xC2")
    check.add_argument("--property", required=True, choices=_PROPERTY_CHOICES)
    check.add_argument("--json", dest="json_path", default=None, metavar="PATH")
    _add_budget_flags(check)

    suite = sub.add_parser("suite", help="run the built-in paper-scenario suite")
    suite.add_argument("--json", dest="json_path", default=None, metavar="PATH")
    suite.add_argument("--only", default=None, metavar="ID", help="only scenarios whose id contains this substring")
    suite.add_argument("--workers", type=int, default=1, metavar="N")
    return parser


def _run_check(args) -> int:
    try:
        ring = parse_ring(args.ring)
        if args.group:
            ring = GroupRing(ring, parse_group(args.group))
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    budget = Budget(
        max_pairs=args.budget_pairs,
        max_triples=args.budget_triples,
        mode=args.mode,
        seed=args.seed if args.mode == "rand" else None,
    )
    t0 = time.perf_counter()
    verdict = _CHECKERS[args.property](ring, budget)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    print(f"{ring.label} :: {verdict.property} -> {verdict.status}"
          f" (certified={verdict.certified}, work={verdict.work}, {wall_ms:.1f} ms)")
    if verdict.witness is not None:
        print("witness:")
        for idx, text in zip(verdict.witness, verdict.witness_text):
            print(f"  [{idx}] {text}")
    if verdict.notes:
        print(f"notes: {verdict.notes}")
    if args.json_path:
        payload = dict(verdict.to_json(), wall_ms=round(wall_ms, 3))
        with open(args.json_path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
        print(f"wrote {args.json_path}")
    return 0


def _run_suite(args) -> int:
    reports = run_suite(only=args.only, workers=args.workers)
    width = max((len(rep.scenario) for rep in reports), default=8) + 2
    for rep in reports:
        flag = "PASS" if rep.passed else "FAIL"
        print(f"{rep.scenario.ljust(width)} {flag}  ({rep.wall_ms:7.1f} ms)  {rep.description}")
    failed = [rep for rep in reports if not rep.passed]
    print(f"\n{len(reports) - len(failed)}/{len(reports)} scenarios passed")
    if args.json_path:
        with open(args.json_path, "w", encoding="utf-8") as fh:
            fh.write(suite_to_json(reports))
        print(f"wrote {args.json_path}")
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if not argv:
        argv = ["suite"]
    args = build_parser().parse_args(argv)
    if args.command == "check":
        return _run_check(args)
    return _run_suite(args)


if __name__ == "__main__":
    raise SystemExit(main())
