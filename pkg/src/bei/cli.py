"""Command-line surface.

Subcommands:
  invariants  full exact invariant report for one graph (table or JSON)
  primes      minimal-prime listing for one graph
  screen      batch Cohen-Macaulayness screening of a graph6 corpus to JSONL
  verify      run the executable property suites over all small graphs

Exit codes: 0 success, 1 property violation (verify), 2 parse/usage error,
3 size-cap violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Optional

from bei import verify as verify_mod
from bei._kernel import BACKEND
from bei.graphs import (
    Graph,
    GraphParseError,
    iter_graph6_lines,
    parse_edge_list,
    parse_graph6,
)
from bei.invariants import CM_CERTIFIED, NOT_CM_CERTIFIED
from bei.report import build_report, render_report

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2
EXIT_OVERSIZE = 3


def _read_graph(path: str, fmt: str, max_n: Optional[int]) -> Graph:
    with open(path, "rb") as fh:
        data = fh.read()
    if fmt == "graph6":
        lines = list(iter_graph6_lines(data))
        if not lines:
            raise GraphParseError("truncated", 0, "no graph6 line in input")
        if len(lines) > 1:
            raise GraphParseError(
                "bad-header",
                0,
                f"{len(lines)} graphs in input; use the screen subcommand for corpora",
            )
        return parse_graph6(lines[0][1], max_n=max_n)
    return parse_edge_list(data, max_n=max_n)


def _parse_exit(err: GraphParseError) -> int:
    return EXIT_OVERSIZE if err.kind == "oversize" else EXIT_PARSE


def cmd_invariants(args: argparse.Namespace) -> int:
    try:
        G = _read_graph(args.path, args.format, args.max_n)
    except GraphParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return _parse_exit(err)
    report = build_report(G)
    if args.json:
        print(json.dumps(report, separators=(",", ":")))
    else:
        print(render_report(report))
    return EXIT_OK


def cmd_primes(args: argparse.Namespace) -> int:
    try:
        G = _read_graph(args.path, args.format, args.max_n)
    except GraphParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return _parse_exit(err)
    report = build_report(G)
    primes = sorted(
        report["minimal_primes"],
        key=lambda p: (-p["dimension"], len(p["separator"]), p["separator"]),
    )
    for p in primes:
        sep = "{" + ",".join(map(str, p["separator"])) + "}"
        blocks = " ".join("{" + ",".join(map(str, b)) + "}" for b in p["blocks"])
        print(f"S={sep}  dim={p['dimension']}  blocks: {blocks}")
    return EXIT_OK


def _screen_one(item: tuple[int, bytes], max_n: Optional[int]) -> dict[str, Any]:
    lineno, raw = item
    record: dict[str, Any] = {"line": lineno, "graph6": raw.decode("ascii", "replace")}
    try:
        G = parse_graph6(raw, max_n=max_n)
        record["report"] = build_report(G)
    except GraphParseError as err:
        record["error"] = {"kind": err.kind, "offset": err.offset, "message": err.message}
    return record


def _screen_worker(packed: tuple[tuple[int, bytes], Optional[int]]) -> str:
    item, max_n = packed
    return json.dumps(_screen_one(item, max_n), separators=(",", ":"))


def cmd_screen(args: argparse.Namespace) -> int:
    with open(args.path, "rb") as fh:
        data = fh.read()
    items = list(iter_graph6_lines(data))
    max_n = args.max_n

    if args.parallel and args.parallel > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            chunk = max(1, len(items) // (args.parallel * 8))
            lines = list(
                pool.map(
                    _screen_worker,
                    [(item, max_n) for item in items],
                    chunksize=chunk,
                )
            )
    else:
        lines = [_screen_worker((item, max_n)) for item in items]

    with open(args.out, "w", encoding="utf-8") as out:
        for line in lines:
            out.write(line)
            out.write("\n")

    counts = {"cm": 0, "not_cm": 0, "inconclusive": 0, "errors": 0}
    for line in lines:
        record = json.loads(line)
        if "error" in record:
            counts["errors"] += 1
        else:
            status = record["report"]["screen"]["status"]
            if status == CM_CERTIFIED:
                counts["cm"] += 1
            elif status == NOT_CM_CERTIFIED:
                counts["not_cm"] += 1
            else:
                counts["inconclusive"] += 1
    total = len(lines)
    print(
        f"screened {total} graphs: {counts['cm']} certified CM, "
        f"{counts['not_cm']} certified not CM, "
        f"{counts['inconclusive']} inconclusive, {counts['errors']} errors"
    )
    if total > 0 and counts["errors"] == total:
        return EXIT_PARSE
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    def progress(msg: str) -> None:
        print(f"  .. {msg}", file=sys.stderr, flush=True)

    print(f"kernel backend: {BACKEND}")
    results = verify_mod.run_all(args.max_n, progress=progress)
    failed = 0
    for res in results:
        mark = "PASS" if res.ok else "FAIL"
        note = f"  ({res.note})" if res.note else ""
        print(f"[{mark}] {res.name}: {res.checked} cases{note}")
        if not res.ok:
            failed += 1
            for g6 in res.failures:
                print(f"       counterexample: {g6}")
    print(f"{len(results) - failed}/{len(results)} properties hold (max n = {args.max_n})")
    return EXIT_OK if failed == 0 else EXIT_VIOLATION


def _verify_max_n(value: str) -> int:
    n = int(value)
    if not 3 <= n <= 7:
        raise argparse.ArgumentTypeError("verify supports --max-n between 3 and 7")
    return n


def _cap_max_n(value: str) -> int:
    from bei.graphs import HARD_MAX_N

    n = int(value)
    if not 1 <= n <= HARD_MAX_N:
        raise argparse.ArgumentTypeError(f"--max-n must be in 1..{HARD_MAX_N}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bei",
        description="Exact invariants of binomial edge ideals from graph combinatorics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("path", help="input graph file")
        p.add_argument(
            "--format",
            choices=["edgelist", "graph6"],
            default="edgelist",
            help="input format (default: edgelist)",
        )
        p.add_argument(
            "--max-n",
            type=_cap_max_n,
            default=None,
            help="size cap for this run (default: BEI_MAX_N or 24)",
        )

    p_inv = sub.add_parser("invariants", help="full invariant report for one graph")
    add_common(p_inv)
    p_inv.add_argument("--json", action="store_true", help="emit exact JSON")
    p_inv.set_defaults(func=cmd_invariants)

    p_primes = sub.add_parser("primes", help="minimal prime listing for one graph")
    add_common(p_primes)
    p_primes.set_defaults(func=cmd_primes)

    p_screen = sub.add_parser("screen", help="batch-screen a graph6 corpus to JSONL")
    p_screen.add_argument("path", help="newline-separated graph6 corpus")
    p_screen.add_argument("--out", required=True, help="output JSONL path")
    p_screen.add_argument(
        "--parallel", type=int, default=0, metavar="K", help="worker processes"
    )
    p_screen.add_argument("--max-n", type=_cap_max_n, default=None)
    p_screen.set_defaults(func=cmd_screen)

    p_verify = sub.add_parser("verify", help="run the property suites")
    p_verify.add_argument(
        "--max-n",
        type=_verify_max_n,
        default=5,
        help="largest vertex count to enumerate exhaustively (3..7, default 5)",
    )
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    return code


if __name__ == "__main__":
    sys.exit(main())
