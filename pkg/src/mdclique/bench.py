"""Benchmark harness: solve instances with and without decomposition
preprocessing under a time cap, timing the decomposition separately, and
emit one CSV row per (instance, mode)."""
from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .graph import Graph, is_clique, parse_dimacs, set_weight
from .mdsolve import solve
from .wclique import Ordering, SolverConfig, max_weight_clique

CSV_COLUMNS = [
    "instance",
    "n",
    "m",
    "mode",
    "clique_weight",
    "status",
    "md_time_s",
    "solve_time_s",
    "total_time_s",
    "prime_nodes",
    "tree_depth",
]

MODE_MD = "MD"
MODE_PLAIN = "Plain"


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    n: int
    m: int
    mode: str
    clique_weight: int
    status: str
    md_time_s: float
    solve_time_s: float
    total_time_s: float
    prime_nodes: int
    tree_depth: int

    def row(self) -> list[str]:
        return [
            self.instance,
            str(self.n),
            str(self.m),
            self.mode,
            str(self.clique_weight),
            self.status,
            f"{self.md_time_s:.6f}",
            f"{self.solve_time_s:.6f}",
            f"{self.total_time_s:.6f}",
            str(self.prime_nodes),
            str(self.tree_depth),
        ]


def error_record(instance: str, mode: str) -> BenchRecord:
    return BenchRecord(instance, 0, 0, mode, 0, "ERROR", 0.0, 0.0, 0.0, 0, 0)


def bench_graph(instance: str, g: Graph, mode: str,
                config: SolverConfig) -> BenchRecord:
    """Solve one instance in one mode and build its record. The returned
    witness is re-verified against the graph; a mismatch is a hard error."""
    if mode == MODE_MD:
        solution, info = solve(g, config)
        md_s, solve_s = info.md_seconds, info.solve_seconds
        prime_nodes = info.tree.kind_counts()["prime"]
        tree_depth = info.tree.depth()
    elif mode == MODE_PLAIN:
        t0 = time.perf_counter()
        solution = max_weight_clique(g, config)
        md_s, solve_s = 0.0, time.perf_counter() - t0
        prime_nodes = 0
        tree_depth = 0
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if not is_clique(g, solution.vertices):
        raise RuntimeError(f"{instance}/{mode}: reported witness is not a clique")
    if set_weight(g, solution.vertices) != solution.weight:
        raise RuntimeError(f"{instance}/{mode}: witness weight mismatch")
    return BenchRecord(
        instance=instance,
        n=g.n,
        m=g.m,
        mode=mode,
        clique_weight=solution.weight,
        status=solution.status.value,
        md_time_s=md_s,
        solve_time_s=solve_s,
        total_time_s=md_s + solve_s,
        prime_nodes=prime_nodes,
        tree_depth=tree_depth,
    )


def expand_paths(paths: Iterable[str | Path]) -> list[Path]:
    """Files stay as given; directories expand to their sorted *.clq, *.col
    and *.dimacs files."""
    out: list[Path] = []
    for p in paths:
        p = Path(p)
        if p.is_dir():
            out.extend(
                sorted(
                    child
                    for child in p.iterdir()
                    if child.suffix in (".clq", ".col", ".dimacs") and child.is_file()
                )
            )
        else:
            out.append(p)
    return out


def run_bench(paths: Iterable[str | Path], modes: list[str],
              time_limit: float = 300.0,
              ordering: Ordering = Ordering.DEGREE_DESC) -> list[BenchRecord]:
    """One record per (instance, mode), instances in input order, MD before
    Plain. A file that fails to load yields ERROR rows and processing
    continues."""
    config = SolverConfig(time_limit=time_limit, ordering=ordering)
    records: list[BenchRecord] = []
    for path in expand_paths(paths):
        name = path.stem
        try:
            g = parse_dimacs(path.read_bytes())
        except (OSError, ValueError):
            records.extend(error_record(name, mode) for mode in modes)
            continue
        for mode in modes:
            records.append(bench_graph(name, g, mode, config))
    return records


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(record.row())
    return buf.getvalue()
