"""Command-line entry point: ``prealign {filter,eval,gen,bench}``.

Exit status is 0 on success, 1 on a usage error and 2 on a data error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

from .errors import InvalidParameters, PrealignError
from .harness import evaluate, generate_pairs, load_pairs, run_filter, scaling_table, write_csv, write_pairs
from .harness.bench import bench
from .harness.evaluate import ALGORITHMS
from .oracle import banded_distances
from .shouji import DEFAULT_WIDTH

EXIT_USAGE = 1
EXIT_DATA = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _threshold_flags(p: argparse.ArgumentParser, multi: bool = False) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    kind = str if multi else int
    suffix = " (comma-separated list)" if multi else ""
    group.add_argument("--e", type=kind, help="edit distance threshold" + suffix)
    group.add_argument("--e-percent", type=kind if multi else float, dest="e_percent",
                       help="threshold as percent of the sequence length, floored" + suffix)


def _generator_flags(p: argparse.ArgumentParser, lengths: bool = False) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--len", type=str if lengths else int, dest="length", default="100" if lengths else 100,
                   help="sequence length" + (" (comma-separated list)" if lengths else ""))
    p.add_argument("--edits", default="0-5", help="planted edits per pair: K or A-B")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="prealign", description="Shouji and MAGNET pre-alignment filters.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("filter", help="filter the pairs of a TSV file")
    p.add_argument("--pairs", required=True, help="TEXT<TAB>PATTERN file, '-' for stdin")
    p.add_argument("--algo", choices=ALGORITHMS, default="shouji")
    _threshold_flags(p)
    p.add_argument("--width", type=int, default=DEFAULT_WIDTH)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--verbose", action="store_true", help="append edit estimate and oracle distance")
    p.add_argument("--report", help="write the JSON summary here instead of stderr")

    p = sub.add_parser("eval", help="score a filter against the edit-distance oracle")
    p.add_argument("--pairs", help="TEXT<TAB>PATTERN file; synthetic pairs are generated when omitted")
    _generator_flags(p)
    p.add_argument("--algo", choices=ALGORITHMS, default="shouji")
    _threshold_flags(p)
    p.add_argument("--width", type=int, default=DEFAULT_WIDTH)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--report", help="write the JSON report here instead of stderr")

    p = sub.add_parser("gen", help="write a seeded synthetic pair file to stdout")
    _generator_flags(p)

    p = sub.add_parser("bench", help="time a filter and emit a CSV scaling table")
    p.add_argument("--pairs", help="bench this file instead of generated pairs")
    _generator_flags(p, lengths=True)
    p.set_defaults(count=50)
    p.add_argument("--algo", choices=ALGORITHMS, default="shouji")
    _threshold_flags(p, multi=True)
    p.add_argument("--width", type=int, default=DEFAULT_WIDTH)
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--report", help="write the CSV here instead of stdout")
    return parser


def resolve_threshold(args, m: int) -> int:
    if args.e is not None:
        if args.e < 0:
            raise UsageError("--e must be non-negative")
        return args.e
    if args.e_percent < 0:
        raise UsageError("--e-percent must be non-negative")
    return math.floor(m * args.e_percent / 100)


def _int_list(text: str, flag: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects integers, got {text!r}") from None
    if not values or min(values) < 0:
        raise UsageError(f"{flag} expects non-negative integers, got {text!r}")
    return values


def _load(path: str):
    if path == "-":
        return load_pairs(sys.stdin.buffer, "<stdin>")
    with open(path, "rb") as fh:
        return load_pairs(fh, path)


def _emit(text: str, path: Optional[str], fallback) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        fallback.write(text)


def _pair_lines(results, verbose: bool, distances=None) -> str:
    lines = []
    for i, r in enumerate(results):
        if not verbose:
            lines.append("1" if r.accept else "0")
            continue
        dist = distances[i] if distances is not None else r.oracle_distance
        lines.append(f"{int(r.accept)}\t{r.edit_estimate}\t{'-' if dist is None else dist}")
    return "".join(line + "\n" for line in lines)


def cmd_filter(args) -> int:
    dataset = _load(args.pairs)
    e = resolve_threshold(args, dataset.m)
    results = run_filter(dataset, e, args.algo, args.width, args.threads)
    distances = None
    if args.verbose:
        raw = banded_distances(dataset.patterns(), dataset.texts(), e)
        distances = [int(d) if d <= e else None for d in raw]
    sys.stdout.write(_pair_lines(results, args.verbose, distances))
    accepted = sum(r.accept for r in results)
    summary = {"algo": args.algo, "e": e, "width": args.width, "m": dataset.m,
               "total": len(results), "accepted": accepted, "rejected": len(results) - accepted}
    _emit(json.dumps(summary, indent=2) + "\n", args.report, sys.stderr)
    return 0


def cmd_eval(args) -> int:
    if args.pairs:
        dataset = _load(args.pairs)
    else:
        dataset = generate_pairs(args.seed, args.count, args.length, args.edits)
    e = resolve_threshold(args, dataset.m)
    report, results = evaluate(dataset, e, args.algo, args.width, args.threads)
    sys.stdout.write(_pair_lines(results, args.verbose))
    payload = {"algo": args.algo, "width": args.width, "m": dataset.m, **report.to_dict()}
    _emit(json.dumps(payload, indent=2) + "\n", args.report, sys.stderr)
    return 0


def cmd_gen(args) -> int:
    dataset = generate_pairs(args.seed, args.count, args.length, args.edits)
    write_pairs(dataset, sys.stdout.buffer)
    sys.stdout.flush()
    return 0


def cmd_bench(args) -> int:
    if args.repeats < 1:
        raise UsageError("--repeats must be >= 1")
    if args.pairs:
        dataset = _load(args.pairs)
        thresholds = _thresholds_for(args, dataset.m)
        results = [bench(dataset, e, args.algo, args.repeats, args.width) for e in thresholds]
    else:
        lengths = _int_list(args.length, "--len")
        if args.e is not None:
            results = scaling_table(args.algo, lengths, _int_list(args.e, "--e"), args.count,
                                    args.seed, args.edits, args.repeats, args.width)
        else:
            results = []
            for m in lengths:
                results += scaling_table(args.algo, [m], _thresholds_for(args, m), args.count,
                                         args.seed, args.edits, args.repeats, args.width)
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="") as fh:
            write_csv(results, fh)
    else:
        write_csv(results, sys.stdout)
    return 0


def _thresholds_for(args, m: int) -> list[int]:
    if args.e is not None:
        return _int_list(args.e, "--e")
    percents = [float(p) for p in args.e_percent.split(",") if p.strip()]
    return [math.floor(m * p / 100) for p in percents]


COMMANDS = {"filter": cmd_filter, "eval": cmd_eval, "gen": cmd_gen, "bench": cmd_bench}


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "threads", 1) < 1:
        print("prealign: error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, InvalidParameters) as exc:
        print(f"prealign: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PrealignError, OSError) as exc:
        print(f"prealign: data error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run_cli())
