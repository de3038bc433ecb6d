"""Command-line front end: decompose, check, gen, fuzz.

Output is plain text with stable ordering and no timestamps; identical argv
(including seeds) must produce byte-identical stdout.  Exit codes: 0 ok,
1 not-in-class witness, 2 verification/property failure, 3 usage or parse
error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .decompose import decompose
from .errors import GraphError
from .generate import (
    SplitMix64,
    derive_seed,
    gen_edge_subgraph,
    gen_named,
    gen_random_apollonian,
    gen_series_parallel,
)
from .graph import Graph, format_edge_list, parse_edge_list, serialize_partition
from .params import ClassParams
from .structures import (
    AltCycle,
    LightEdge,
    NotInClassWitness,
    SmallVertex,
    find_configuration,
)
from .verify import brute_force_partition, verify_partition

_SUBGRAPH_PS = (0.5, 0.8, 1.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twoforests",
        description="Edge-partition graphs into two degree-capped forests "
        "plus a bounded-degree leftover.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser("decompose", help="decompose an edge-list file")
    p_dec.add_argument("--alpha", type=int, required=True)
    p_dec.add_argument("--input", required=True)
    p_dec.add_argument("--output")
    p_dec.add_argument("--verify", action="store_true")
    p_dec.set_defaults(func=cmd_decompose)

    p_chk = sub.add_parser("check", help="report the reducible configuration")
    p_chk.add_argument("--alpha", type=int, required=True)
    p_chk.add_argument("--input", required=True)
    p_chk.set_defaults(func=cmd_check)

    p_gen = sub.add_parser("gen", help="write a generated edge list to stdout")
    gen_sub = p_gen.add_subparsers(dest="family", required=True)
    g_named = gen_sub.add_parser("named")
    g_named.add_argument("--name", required=True)
    g_named.add_argument("--n", type=int, required=True)
    g_named.set_defaults(func=cmd_gen)
    g_apo = gen_sub.add_parser("apollonian")
    g_apo.add_argument("--n", type=int, required=True)
    g_apo.add_argument("--seed", type=int, default=0)
    g_apo.add_argument("--p", type=float, help="optional edge-keeping probability")
    g_apo.set_defaults(func=cmd_gen)
    g_sp = gen_sub.add_parser("series-parallel")
    g_sp.add_argument("--m", type=int, required=True)
    g_sp.add_argument("--seed", type=int, default=0)
    g_sp.add_argument("--p", type=float, help="optional edge-keeping probability")
    g_sp.set_defaults(func=cmd_gen)

    p_fuzz = sub.add_parser("fuzz", help="randomized decompose+verify campaign")
    p_fuzz.add_argument("--alpha", type=int, required=True)
    p_fuzz.add_argument("--count", type=int, required=True)
    p_fuzz.add_argument("--seed", type=int, required=True)
    p_fuzz.add_argument("--family", choices=("planar", "sp"), required=True)
    p_fuzz.add_argument("--max-n", type=int, default=40)
    p_fuzz.set_defaults(func=cmd_fuzz)
    return parser


def _load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as handle:
        return parse_edge_list(handle.read())


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    params = ClassParams(args.alpha)
    result = decompose(g, params)
    if isinstance(result, NotInClassWitness):
        print("witness: graph is not reducible for this alpha", file=sys.stderr)
        text = format_edge_list(result.graph)
        if text:
            print(text, file=sys.stderr)
        return 1
    text = serialize_partition(g, result)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text + ("\n" if text else ""))
    elif text:
        print(text)
    if args.verify:
        report = verify_partition(g, result, params)
        if not report.ok:
            for violation in report.violations:
                print(f"violation: {violation}", file=sys.stderr)
            return 2
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    cfg = find_configuration(g, ClassParams(args.alpha))
    if isinstance(cfg, SmallVertex):
        print(f"small-vertex {cfg.vertex}")
    elif isinstance(cfg, LightEdge):
        print(f"light-edge {cfg.u} {cfg.v}")
    elif isinstance(cfg, AltCycle):
        print("alt-cycle " + " ".join(map(str, cfg.vertices)))
    else:
        print("witness")
        text = format_edge_list(cfg.graph)
        if text:
            print(text)
        return 1
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "named":
        g = gen_named(args.name, args.n)
    elif args.family == "apollonian":
        g = gen_random_apollonian(args.n, args.seed)
    else:
        g = gen_series_parallel(args.m, args.seed)
    if args.family != "named" and args.p is not None:
        # subgraph sampling uses the derived seed of index 1
        g = gen_edge_subgraph(g, args.p, derive_seed(args.seed, 1))
    text = format_edge_list(g)
    if text:
        print(text)
    return 0


def _fuzz_instance(
    alpha: int, family: str, index: int, master_seed: int, max_n: int
) -> tuple[str, list[str]]:
    """Run one fuzz instance; the per-instance seed is derive_seed(master, index)
    so any instance can be reproduced in isolation."""
    params = ClassParams(alpha)
    rng = SplitMix64(derive_seed(master_seed, index))
    if family == "planar":
        n = 4 + rng.below(max(1, max_n - 3))
        base = gen_random_apollonian(n, rng.next_u64())
        desc = f"planar n={n}"
    else:
        m = 1 + rng.below(max_n)
        base = gen_series_parallel(m, rng.next_u64())
        desc = f"sp m={m}"
    p = _SUBGRAPH_PS[rng.below(3)]
    sub = gen_edge_subgraph(base, p, rng.next_u64())
    desc += f" p={p} edges={base.num_edges()}/{sub.num_edges()}"

    failures: list[str] = []
    for tag, graph in (("base", base), ("sub", sub)):
        result = decompose(graph, params)
        if isinstance(result, NotInClassWitness):
            failures.append(f"{tag}: unexpected witness")
            continue
        report = verify_partition(graph, result, params)
        if not report.ok:
            failures.append(f"{tag}: {len(report.violations)} violations")
            continue
        if graph.num_edges() <= 14 and brute_force_partition(graph, params) is None:
            failures.append(f"{tag}: brute force found no partition")
    return desc, failures


def cmd_fuzz(args: argparse.Namespace) -> int:
    ok = 0
    for i in range(args.count):
        desc, failures = _fuzz_instance(
            args.alpha, args.family, i, args.seed, args.max_n
        )
        if failures:
            print(f"instance {i:04d} {desc} FAIL: " + "; ".join(failures))
        else:
            print(f"instance {i:04d} {desc} ok")
            ok += 1
    print(f"fuzz: {ok}/{args.count} instances ok")
    return 0 if ok == args.count else 2


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 3
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
