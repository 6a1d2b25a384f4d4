"""Command-line surface: reports, verification runs, fuzzing, and generation.

Exit codes: 0 success, 1 any fail verdict, 2 input error, 3 capacity
(unconditionally for truncated reports, under --strict for skipped checks).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Optional, TextIO

from .caps import Caps, caps_from_env
from .errors import CapacityError, InputError
from .generators import GenSpec, fixture, fixture_names, generate, random_graph
from .graph import (
    Graph,
    format_edge_list,
    format_graph6,
    parse_edge_list,
    parse_graph6,
)
from .report import build_report
from .theorems import CAPACITY_SKIPPED, FAIL, REGISTRY, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3


def _add_caps_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--solver-n", type=int, default=None)
    p.add_argument("--enumeration-n", type=int, default=None)
    p.add_argument("--matchings-n", type=int, default=None)
    p.add_argument("--crit-sets", type=int, default=None)
    p.add_argument("--cycle-work", type=int, default=None)


def _caps_from_args(args: argparse.Namespace) -> Caps:
    base = caps_from_env()
    overrides = {
        name: getattr(args, name)
        for name in ("solver_n", "enumeration_n", "matchings_n", "crit_sets", "cycle_work")
        if getattr(args, name, None) is not None
    }
    return base.with_overrides(**overrides) if overrides else base


def _add_source_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="graph file, or '-' for stdin")
    p.add_argument(
        "--format", choices=("edgelist", "graph6"), default="edgelist"
    )
    p.add_argument("--fixture", choices=fixture_names())
    p.add_argument("--gen", help="generator spec, e.g. kind=odd_cycle,k=2")


def _parse_genspec(text: str) -> GenSpec:
    kwargs: dict = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise InputError(f"bad generator spec fragment {part!r}")
        key, value = part.split("=", 1)
        key = key.strip()
        value = value.strip()
        if key in ("k", "n", "count", "seed"):
            kwargs[key] = int(value)
        elif key == "edge_probability":
            kwargs[key] = float(value)
        elif key == "connected_only":
            kwargs[key] = value.lower() in ("1", "true", "yes")
        elif key in ("kind", "fixture_name"):
            kwargs[key] = value
        else:
            raise InputError(f"unknown generator spec key {key!r}")
    if "kind" not in kwargs:
        raise InputError("generator spec requires kind=...")
    return GenSpec(**kwargs)


def _read_graphs(args: argparse.Namespace) -> Iterator[tuple[str, Graph]]:
    """Yield (graph_id, graph) from whichever source the flags select."""
    chosen = [x for x in (args.input, args.fixture, args.gen) if x]
    if len(chosen) != 1:
        raise InputError("choose exactly one of --input, --fixture, --gen")
    if args.fixture:
        yield args.fixture, fixture(args.fixture)
        return
    if args.gen:
        spec = _parse_genspec(args.gen)
        for i, g in enumerate(generate(spec)):
            yield f"{spec.kind}-{i}", g
        return
    if args.input == "-":
        text = sys.stdin.read()
        name = "stdin"
    else:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from exc
        name = args.input
    if not text.strip():
        raise InputError(f"empty input: {name}")
    if args.format == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        for i, ln in enumerate(lines):
            gid = name if len(lines) == 1 else f"{name}#{i}"
            yield gid, parse_graph6(ln)
    else:
        yield name, parse_edge_list(text)


def _open_out(path: Optional[str]) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w")


def cmd_report(args: argparse.Namespace) -> int:
    caps = _caps_from_args(args)
    out = _open_out(args.out)
    code = EXIT_OK
    try:
        for gid, g in _read_graphs(args):
            try:
                print(build_report(g, caps, graph_id=gid).to_json(), file=out)
            except CapacityError as exc:
                print(
                    json.dumps(
                        {
                            "graph_id": gid,
                            "partial": True,
                            "capacity_error": {
                                "cap": exc.cap_name,
                                "limit": exc.limit,
                                "actual": exc.actual,
                            },
                            "caps": caps.to_dict(),
                        },
                        separators=(",", ":"),
                    ),
                    file=out,
                )
                code = EXIT_CAPACITY
    finally:
        if out is not sys.stdout:
            out.close()
    return code


def _selection(arg: Optional[str]):
    if arg is None or arg == "all":
        return "all"
    ids = [x.strip() for x in arg.split(",") if x.strip()]
    unknown = [x for x in ids if x not in REGISTRY]
    if unknown:
        raise InputError(f"unknown theorem ids: {unknown}")
    return ids


def cmd_verify(args: argparse.Namespace) -> int:
    caps = _caps_from_args(args)
    selection = _selection(args.theorems)
    store = open(args.store, "a") if args.store else None
    fails = 0
    skips = 0
    out = sys.stdout
    try:
        for gid, g in _read_graphs(args):
            verdicts = run_suite(g, selection, caps, seed=args.seed)
            for v in verdicts:
                line = {"graph_id": gid, **v.to_dict()}
                print(json.dumps(line, separators=(",", ":")), file=out)
                if v.status == FAIL:
                    fails += 1
                    if store:
                        rec = {
                            "graph_id": gid,
                            "edge_list": format_edge_list(g),
                            **v.to_dict(),
                        }
                        print(json.dumps(rec, separators=(",", ":")), file=store)
                elif v.status == CAPACITY_SKIPPED:
                    skips += 1
    finally:
        if store:
            store.close()
    if fails:
        return EXIT_FAIL
    if skips and args.strict:
        return EXIT_CAPACITY
    return EXIT_OK


def _fuzz_stream(args: argparse.Namespace) -> Iterator[tuple[str, Graph]]:
    import random as _random

    if args.exhaustive:
        spec = GenSpec(kind="exhaustive", n=args.n_max, connected_only=True)
        for i, g in enumerate(generate(spec)):
            yield f"exhaustive-{args.n_max}-{i}", g
        return
    rng = _random.Random(args.seed)
    for i in range(args.count):
        n = rng.randint(1, args.n_max)
        yield f"random-{args.seed}-{i}", random_graph(n, args.p, rng)


def cmd_fuzz(args: argparse.Namespace) -> int:
    caps = _caps_from_args(args)
    selection = _selection(args.theorems)
    tally: dict[str, dict[str, int]] = {}
    fails = 0
    skips = 0
    store = open(args.store, "a") if args.store else None

    def handle(gid: str, verdicts) -> None:
        nonlocal fails, skips
        for v in verdicts:
            by = tally.setdefault(v.theorem_id, {})
            by[v.status] = by.get(v.status, 0) + 1
            if v.status == FAIL:
                fails += 1
                if store:
                    rec = {"graph_id": gid, **v.to_dict()}
                    print(json.dumps(rec, separators=(",", ":")), file=store)
            elif v.status == CAPACITY_SKIPPED:
                skips += 1

    stream = _fuzz_stream(args)
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        batch = [(gid, g) for gid, g in stream]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = pool.map(
                _fuzz_worker,
                [
                    (gid, g.n, sorted(g.edges), selection, caps.to_dict(), args.seed)
                    for gid, g in batch
                ],
                chunksize=64,
            )
            for gid, verdicts in results:
                handle(gid, verdicts)
    else:
        for gid, g in stream:
            try:
                handle(gid, run_suite(g, selection, caps, seed=args.seed))
            except CapacityError:
                skips += 1
    if store:
        store.close()
    for tid in sorted(tally):
        by = tally[tid]
        counts = " ".join(f"{k}={by[k]}" for k in sorted(by))
        print(f"{tid}: {counts}")
    print(f"total: fails={fails} capacity_skips={skips}")
    if fails:
        return EXIT_FAIL
    if skips and args.strict:
        return EXIT_CAPACITY
    return EXIT_OK


def _fuzz_worker(payload):
    gid, n, edges, selection, caps_dict, seed = payload
    g = Graph(n, edges)
    caps = Caps(**caps_dict)
    return gid, run_suite(g, selection, caps, seed=seed)


def cmd_gen(args: argparse.Namespace) -> int:
    spec = _parse_genspec(args.spec)
    out = _open_out(args.out)
    try:
        for g in generate(spec):
            if args.out_format == "graph6":
                print(format_graph6(g), file=out)
            else:
                print(format_edge_list(g), file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="kegraph",
        description="KE-landscape invariant reports and theorem verification",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="full invariant report as JSON")
    _add_source_args(p)
    _add_caps_args(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify", help="run theorem checks, emit JSONL verdicts")
    _add_source_args(p)
    _add_caps_args(p)
    p.add_argument("--theorems", default="all", help="comma list or 'all'")
    p.add_argument("--store", default=None, help="append fail records here")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="run the suite over a generated stream")
    _add_caps_args(p)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--theorems", default="all")
    p.add_argument("--store", default=None)
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("gen", help="emit graphs from a generator spec")
    p.add_argument("spec", help="e.g. kind=cycle_plus_trees,n=12,count=3,seed=1")
    p.add_argument("--out", default=None)
    p.add_argument(
        "--out-format", choices=("edgelist", "graph6"), default="edgelist"
    )
    p.set_defaults(func=cmd_gen)
    return top


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
