"""Command-line front end.

Exit codes: 0 when every report is confirmed or skipped, 1 on any mismatch,
2 on usage, parse or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from crossunion import bounds
from crossunion.compression import compress_pair
from crossunion.errors import CrossUnionError, FamilyFormatError
from crossunion.family import SetFamily, check_common_ground
from crossunion.properties import DEFAULT_SEED, run_property_suite
from crossunion.search import (
    search_katona,
    search_max_pair_antichain,
    search_max_pair_general,
    search_max_triple_antichain,
    search_milner,
    search_min_pair,
    search_wong_tay,
)
from crossunion.search.parallel import ENV_VAR
from crossunion.transforms import shift_families
from crossunion.verify import (
    CSV_HEADER,
    THEOREM_IDS,
    cmd_verify,
    needs_s,
    report_csv_row,
    verify_all,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
BOUNDS_N_MAX = 40
BOUNDS_HEADER = "n,s,maximal_pairs,value,katona_f,general_pair_bound"


class UsageError(Exception):
    pass


def _read_families(path: str) -> list[SetFamily]:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FamilyFormatError(f"invalid JSON in {path}: {exc}") from exc
    if isinstance(obj, dict):
        obj = [obj]
    if not isinstance(obj, list) or not obj:
        raise FamilyFormatError("expected a family object or a nonempty array of them")
    return [SetFamily.from_json_obj(o) for o in obj]


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text + "\n")
    else:
        Path(path).write_text(text + "\n")


def bounds_table(n_max: int) -> list[str]:
    """CSV lines, header first, one row per (n, s) with n >= 2s >= 2."""
    if not 2 <= n_max <= BOUNDS_N_MAX:
        raise UsageError(f"--n-max must be in [2, {BOUNDS_N_MAX}], got {n_max}")
    lines = [BOUNDS_HEADER]
    for n in range(2, n_max + 1):
        for s in range(1, n // 2 + 1):
            report = bounds.maximal_pairs(n, s)
            lines.append(
                f'{n},{s},"{report.format_pairs()}",{report.value},'
                f"{bounds.katona_f(n, s)},{bounds.general_pair_bound(n, s)}"
            )
    return lines


# -- subcommands ---------------------------------------------------------------


def _cmd_verify(args) -> int:
    if args.all:
        reports = verify_all(args.n_max, seed=args.seed, workers=args.threads)
    else:
        if args.theorem_id is None:
            raise UsageError("give a theorem id or --all")
        if args.theorem_id not in THEOREM_IDS:
            raise UsageError(f"unknown theorem id {args.theorem_id!r}; known: {', '.join(THEOREM_IDS)}")
        n = args.n
        if n is None:
            if args.theorem_id != "lemmas":
                raise UsageError(f"{args.theorem_id} needs --n")
            n = 40
        if needs_s(args.theorem_id) and args.s is None:
            raise UsageError(f"{args.theorem_id} needs --s")
        reports = [cmd_verify(args.theorem_id, n, args.s, seed=args.seed, workers=args.threads)]
    if args.json:
        print(json.dumps([r.to_json_obj() for r in reports], indent=2))
    else:
        print(CSV_HEADER)
        for r in reports:
            print(report_csv_row(r))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_MISMATCH


_SEARCHES = {
    "pair": lambda a: search_max_pair_antichain(a.n, a.s, a.forbid_empty, workers=a.threads),
    "triple": lambda a: search_max_triple_antichain(a.n, a.s, workers=a.threads),
    "general": lambda a: search_max_pair_general(a.n, a.s, workers=a.threads),
    "milner": lambda a: search_milner(a.n, a.s),
    "katona": lambda a: search_katona(a.n, a.s),
    "wong-tay": lambda a: search_wong_tay(a.n, workers=a.threads),
}


def _cmd_search(args) -> int:
    if args.kind != "wong-tay" and args.s is None:
        raise UsageError(f"search {args.kind} needs --s")
    if args.kind == "min-pair":
        out = {"max": search_min_pair(args.n, args.s, workers=args.threads)}
    else:
        out = _SEARCHES[args.kind](args).to_json_obj()
    print(json.dumps(out, indent=2 if args.json else None))
    return EXIT_OK


def _cmd_compress(args) -> int:
    fams = _read_families(args.input)
    if len(fams) != 2:
        raise FamilyFormatError(f"compress expects exactly two families, got {len(fams)}")
    (a, b), trace = compress_pair((fams[0], fams[1]), args.s)
    _write(json.dumps([a.to_json_obj(), b.to_json_obj()]), args.output)
    if args.trace:
        Path(args.trace).write_text(trace.dumps() + "\n")
    return EXIT_OK


def _cmd_shift(args) -> int:
    fams = _read_families(args.input)
    check_common_ground(fams)
    shifted = shift_families(fams)
    _write(json.dumps([f.to_json_obj() for f in shifted]), args.output)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    print("\n".join(bounds_table(args.n_max)))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    if not 1 <= args.exhaustive_n <= 5:
        raise UsageError(f"--exhaustive-n must be in [1, 5], got {args.exhaustive_n}")
    tallies = run_property_suite(seed=args.seed, random_cases=args.cases, exhaustive_n=args.exhaustive_n)
    if args.json:
        print(json.dumps(
            {name: {"checked": t.checked, "failures": t.failures[:20]} for name, t in tallies.items()},
            indent=2,
        ))
    else:
        print("property,checked,failures")
        for name, t in tallies.items():
            print(f"{name},{t.checked},{len(t.failures)}")
    return EXIT_OK if all(t.passed for t in tallies.values()) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossunion",
        description="Closed forms and exhaustive oracles for cross s-union families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    threads = argparse.ArgumentParser(add_help=False)
    threads.add_argument(
        "--threads", type=int, default=None,
        help=f"worker processes for searches (default: ${ENV_VAR}, else 1)",
    )
    seed = argparse.ArgumentParser(add_help=False)
    seed.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"seed for random cases (default {DEFAULT_SEED})")
    as_json = argparse.ArgumentParser(add_help=False)
    as_json.add_argument("--json", action="store_true", help="emit JSON instead of CSV")

    p = sub.add_parser("verify", parents=[threads, seed, as_json], help="check a statement against its oracle")
    p.add_argument("theorem_id", nargs="?", help=", ".join(THEOREM_IDS))
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--all", action="store_true", help="every statement at every admissible (n, s)")
    p.add_argument("--n-max", type=int, default=5, help="largest n for --all (default 5)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", parents=[threads, as_json], help="run one exhaustive search, print JSON")
    p.add_argument("kind", choices=[*_SEARCHES, "min-pair"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--forbid-empty", action="store_true", help="pair search: neither family may be {∅}")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("compress", help="compress a cross s-union antichain pair to full levels")
    p.add_argument("input", help="JSON array of two family objects, or - for stdin")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--trace", help="write the step trace as JSON to this path")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=_cmd_compress)

    p = sub.add_parser("shift", help="jointly shift families to a shifted fixed point")
    p.add_argument("input", help="JSON family object or array of them, or - for stdin")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(func=_cmd_shift)

    p = sub.add_parser("bounds", help="CSV table of maximal pairs and closed-form bounds")
    p.add_argument("--n-max", type=int, default=12)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("oracle", parents=[seed, as_json], help="run the operator property suite")
    p.add_argument("--cases", type=int, default=10_000, help="random cases on top of the exhaustive ones")
    p.add_argument("--exhaustive-n", type=int, default=5, help="largest n checked exhaustively (default 5)")
    p.set_defaults(func=_cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CrossUnionError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"crossunion {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
