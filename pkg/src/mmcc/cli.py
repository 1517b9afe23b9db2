"""Command line interface: ``mmcc <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .approx import approx_4, approx_4_run
from .bench import BenchConfig, records_to_csv, records_to_json, run_bench, sweep_synthetic
from .bound import clb_witness, compute_clb
from .exact import DEFAULT_LIMIT, bell, brute_force_opt
from .graph import (DEFAULT_TABLE_LIMIT, CapacityError, ParseError, build_intersection_table,
                    read_edge_list, write_edge_list)
from .greedy import ALL_CHOICES, VARIANT_A, DesignChoices, greedy_join, run_A_star
from .partition import max_disagreement, write_partition
from .synth import SynthSpec, planted_partition_graph

log = logging.getLogger("mmcc")


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_parse(args):
    g = read_edge_list(args.graph)
    if args.out:
        write_edge_list(g, args.out, original_labels=False)
    if args.mapping:
        with open(args.mapping, "w") as fh:
            fh.writelines(f"{lab}\t{v}\n" for v, lab in enumerate(g.labels))
    _emit({"n": g.node_count, "m": g.edge_count, "max_degree": g.max_degree,
           "self_loops_dropped": g.self_loops_dropped})


def cmd_clb(args):
    g = read_edge_list(args.graph)
    t0 = time.perf_counter()
    table = build_intersection_table(g, limit=args.limit)
    d, cert = compute_clb(g, table, scan=args.scan)
    elapsed = (time.perf_counter() - t0) * 1000
    below = clb_witness(g, table, d)
    out = {"d": d, "clusters": len(cert.pi_d), "max_per_node_bound": cert.max_bound,
           "witness": None, "witness_bound": None, "wall_time_ms": elapsed}
    if below is not None:
        out["witness"] = g.labels[below.witness]
        out["witness_bound"] = int(below.per_node_bound[below.witness])
    if args.out:
        write_partition(g, cert.pi_d, args.out)
    _emit(out)


def cmd_approx4(args):
    g = read_edge_list(args.graph)
    part, info = approx_4_run(g)
    if args.out:
        write_partition(g, part, args.out)
    _emit({"phi": max_disagreement(g, part), "iterations": info.iterations,
           "terminated_early": info.terminated_early})


def _selected_choices(args) -> DesignChoices:
    if args.named == "A":
        return VARIANT_A
    return DesignChoices(args.dc1, args.dc2, args.dc3, args.dc4)


def cmd_greedy(args):
    g = read_edge_list(args.graph)
    joins = 0

    def count(*_):
        nonlocal joins
        joins += 1

    t0 = time.perf_counter()
    init = approx_4(g)
    if args.all_variants:
        part, choices = run_A_star(g, init, n_jobs=args.jobs, discard_against=args.discard_against)
        joins = None
    else:
        choices = _selected_choices(args)
        part = greedy_join(g, init, choices, on_join=count, discard_against=args.discard_against)
    elapsed = (time.perf_counter() - t0) * 1000
    if args.out:
        write_partition(g, part, args.out)
    _emit({"phi": max_disagreement(g, part), "joins_performed": joins,
           "choices": choices.to_dict(), "discard_against": args.discard_against,
           "wall_time_ms": elapsed})


def cmd_exact(args):
    g = read_edge_list(args.graph)
    res = brute_force_opt(g, limit=args.limit)
    if args.out:
        write_partition(g, res.argmin, args.out)
    _emit({"opt": res.opt, "witness_file": args.out, "bell_n": bell(g.node_count)})


def cmd_synth(args):
    spec = SynthSpec(args.cliques, args.size, args.flips, args.seed)
    g = planted_partition_graph(spec)
    write_edge_list(g, args.out)
    _emit({"n": g.node_count, "m": g.edge_count, "seed": spec.seed, "rng": "numpy PCG64"})


def _write_records(records, args):
    text = records_to_csv(records) if args.format == "csv" else records_to_json(records) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args) -> BenchConfig:
    return BenchConfig(skip_clb=args.skip_clb, all_variants=args.all_variants,
                       table_limit=args.limit, n_jobs=args.jobs, discard_against=args.discard_against)


def cmd_bench(args):
    _write_records(run_bench(args.graphs, _config(args)), args)


def cmd_sweep(args):
    flips = [int(x) for x in args.flips.split(",")]
    records = sweep_synthetic(flips, args.repeats, args.seed, _config(args), args.cliques, args.size)
    _write_records(records, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mmcc", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="read an edge list and print its size")
    p.add_argument("graph")
    p.add_argument("--out", help="write the relabeled edge list here")
    p.add_argument("--mapping", help="write label<TAB>internal id lines here")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("clb", help="combinatorial lower bound")
    p.add_argument("graph")
    p.add_argument("--out", help="write the forced-together partition here")
    p.add_argument("--limit", type=int, default=DEFAULT_TABLE_LIMIT, help="largest n for the dense table")
    p.add_argument("--scan", action="store_true", help="also scan every budget and check agreement")
    p.set_defaults(func=cmd_clb)

    p = sub.add_parser("approx4", help="4-approximation")
    p.add_argument("graph")
    p.add_argument("--out")
    p.set_defaults(func=cmd_approx4)

    p = sub.add_parser("greedy", help="greedy joining from the 4-approximation")
    p.add_argument("graph")
    p.add_argument("--out")
    p.add_argument("--dc1", default=VARIANT_A.dc1.value, choices=["largest_degree", "smallest_degree"])
    p.add_argument("--dc2", default=VARIANT_A.dc2.value, choices=["increasing_degree", "decreasing_degree"])
    p.add_argument("--dc3", default=VARIANT_A.dc3.value,
                   choices=["combined", "intersection_only", "neg_symdiff_only"])
    p.add_argument("--dc4", default=VARIANT_A.dc4.value, choices=["base", "strict"])
    p.add_argument("--named", choices=["A"], help="use a named variant")
    p.add_argument("--all", "--all-variants", dest="all_variants", action="store_true",
                   help=f"best of all {len(ALL_CHOICES)} variants")
    p.add_argument("--discard-against", choices=["worst", "neighbor"], default="worst",
                   help="disagreement a joined cluster may not exceed")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("exact", help="brute-force optimum for small graphs")
    p.add_argument("graph")
    p.add_argument("--out")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("synth", help="planted-partition instance")
    p.add_argument("--cliques", type=int, default=10)
    p.add_argument("--size", type=int, default=10)
    p.add_argument("--flips", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_synth)

    def bench_flags(p):
        p.add_argument("--out")
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--skip-clb", action="store_true")
        p.add_argument("--all-variants", action="store_true")
        p.add_argument("--limit", type=int, default=DEFAULT_TABLE_LIMIT)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--discard-against", choices=["worst", "neighbor"], default="worst")

    p = sub.add_parser("bench", help="benchmark edge-list files")
    p.add_argument("graphs", nargs="+")
    bench_flags(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("sweep", help="synthetic flip sweep")
    p.add_argument("--flips", default=",".join(str(f) for f in range(0, 1001, 50)))
    p.add_argument("--repeats", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cliques", type=int, default=10)
    p.add_argument("--size", type=int, default=10)
    bench_flags(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        args.func(args)
    except (OSError, ParseError, CapacityError, ValueError) as exc:
        print(f"mmcc {args.command}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
