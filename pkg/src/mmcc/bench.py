"""Benchmark runner and CSV/JSON persistence of its records."""
from __future__ import annotations

import csv
import dataclasses
import io
import json
import logging
import os
import time
from dataclasses import dataclass, fields
from datetime import datetime, timezone
from typing import Iterable, Sequence

from .approx import approx_4
from .bound import compute_clb
from .graph import DEFAULT_TABLE_LIMIT, Graph, build_intersection_table, read_edge_list
from .greedy import VARIANT_A, greedy_join, run_A_star
from .partition import max_disagreement
from .synth import SynthSpec, planted_partition_graph

log = logging.getLogger(__name__)

CSV_VERSION = "# mmcc-bench-csv v1"


@dataclass
class BenchRecord:
    instance: str
    n: int | None = None
    m: int | None = None
    max_degree: int | None = None
    clb: int | None = None
    phi_A: int | None = None
    phi_A_star: int | None = None
    best_choices: str | None = None
    t_clb_ms: float | None = None
    t_A_ms: float | None = None
    t_A_star_ms: float | None = None
    flips: int | None = None
    seed: int | None = None
    timestamp: str = ""
    error: str | None = None

    def check(self) -> None:
        values = [x for x in (self.clb, self.phi_A_star, self.phi_A) if x is not None]
        if values != sorted(values):
            raise AssertionError(f"{self.instance}: expected clb <= phi_A* <= phi_A, got {values}")
        for t in (self.t_clb_ms, self.t_A_ms, self.t_A_star_ms):
            if t is not None and t < 0:
                raise AssertionError(f"{self.instance}: negative time")


_FIELDS = fields(BenchRecord)
COLUMNS = [f.name for f in _FIELDS]


@dataclass
class BenchConfig:
    skip_clb: bool = False
    all_variants: bool = False
    table_limit: int | None = DEFAULT_TABLE_LIMIT
    n_jobs: int = 1
    discard_against: str = "worst"


def _ms(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000.0


def bench_graph(name: str, g: Graph, config: BenchConfig, spec: SynthSpec | None = None) -> BenchRecord:
    rec = BenchRecord(instance=name, n=g.node_count, m=g.edge_count, max_degree=g.max_degree,
                      timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"))
    if spec is not None:
        rec.flips, rec.seed = spec.flips, spec.seed
    if not config.skip_clb:
        t0 = time.perf_counter()
        table = build_intersection_table(g, limit=config.table_limit)
        rec.clb, _ = compute_clb(g, table)
        rec.t_clb_ms = _ms(t0)
    t0 = time.perf_counter()
    init = approx_4(g)
    part = greedy_join(g, init, VARIANT_A, discard_against=config.discard_against)
    rec.t_A_ms = _ms(t0)
    rec.phi_A = max_disagreement(g, part)
    if config.all_variants:
        t0 = time.perf_counter()
        best, choices = run_A_star(g, approx_4(g), n_jobs=config.n_jobs,
                                   discard_against=config.discard_against)
        rec.t_A_star_ms = _ms(t0)
        rec.phi_A_star = max_disagreement(g, best)
        rec.best_choices = str(choices)
    rec.check()
    return rec


def run_bench(instances: Iterable[str | os.PathLike | SynthSpec], config: BenchConfig | None = None) -> list[BenchRecord]:
    """One record per instance; failures become records with ``error`` set."""
    config = config or BenchConfig()
    records = []
    for inst in instances:
        spec = inst if isinstance(inst, SynthSpec) else None
        name = spec.name if spec else os.path.basename(os.fspath(inst))
        try:
            g = planted_partition_graph(spec) if spec else read_edge_list(inst)
            rec = bench_graph(name, g, config, spec)
        except Exception as exc:  # per-instance failures are reported, not raised
            log.error("instance %s failed: %s", name, exc)
            rec = BenchRecord(instance=name, error=f"{type(exc).__name__}: {exc}",
                              timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"))
            if spec:
                rec.flips, rec.seed = spec.flips, spec.seed
        records.append(rec)
    return records


def sweep_synthetic(f_values: Sequence[int], repeats: int, base_seed: int = 0,
                    config: BenchConfig | None = None, cliques: int = 10, size: int = 10) -> list[BenchRecord]:
    """Records for every (flips, repeat); instance ``i`` of the grid uses seed ``base_seed + i``."""
    grid = [f for f in f_values for _ in range(repeats)]
    specs = [SynthSpec(cliques, size, f, base_seed + i) for i, f in enumerate(grid)]
    records = run_bench(specs, config)
    ratios = [r.phi_A / max(r.clb, 1) for r in records if r.clb is not None and r.phi_A is not None]
    if ratios:
        log.info("largest phi_A / max(clb, 1) over the sweep: %.3f", max(ratios))
    return records


def _coerce(kind, text: str):
    if kind == "str":
        return text
    if text == "":
        return None
    if kind == "int | None":
        return int(text)
    if kind == "float | None":
        return float(text)
    return text


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    buf.write(CSV_VERSION + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for rec in records:
        writer.writerow(["" if v is None else repr(v) if isinstance(v, float) else v
                         for v in dataclasses.astuple(rec)])
    return buf.getvalue()


def records_from_csv(text: str) -> list[BenchRecord]:
    lines = text.splitlines()
    if not lines or lines[0] != CSV_VERSION:
        raise ValueError(f"missing header line {CSV_VERSION!r}")
    reader = csv.reader(lines[1:])
    header = next(reader)
    if header != COLUMNS:
        raise ValueError(f"unexpected columns {header}")
    types = {f.name: f.type for f in _FIELDS}
    return [BenchRecord(**{c: _coerce(types[c], x) for c, x in zip(header, row)}) for row in reader]


def records_to_json(records: Iterable[BenchRecord]) -> str:
    return json.dumps([dataclasses.asdict(r) for r in records], indent=2)
