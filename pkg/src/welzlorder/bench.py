"""Benchmark harness: run matrices of (family, size, seed) order computations,
verify the results, and aggregate failure rates and runtime-scaling ratios."""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field

from . import engine as eng
from .generators import GenSpec, generate
from .setsystem import LinearityParams
from .verifier import certify

ROW_FIELDS = ("family", "n", "size_norm", "c", "d", "seed", "iterations",
              "wall_time", "crossing", "bound", "passed", "outcome")


@dataclass
class BenchReport:
    rows: list = field(default_factory=list)
    aggregates: dict = field(default_factory=dict)

    def to_tsv(self) -> str:
        lines = ["\t".join(ROW_FIELDS)]
        for row in self.rows:
            lines.append("\t".join(str(row[f]) for f in ROW_FIELDS))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"rows": self.rows, "aggregates": self.aggregates},
                          sort_keys=True)

    def summary(self) -> str:
        lines = [f"{len(self.rows)} runs"]
        for key, value in sorted(self.aggregates.items()):
            lines.append(f"{key}: {value}")
        return "\n".join(lines) + "\n"


def run_one(system, c, d, seed, trials=1):
    """One benchmark row: timed engine call plus post-hoc verification.

    c may be the string "auto", in which case the doubling wrapper picks it.
    """
    start = time.perf_counter()
    if c == "auto":
        try:
            order, c_used, traces = eng.with_unknown_c(
                system, seed, trials_per_level=trials, d=d)
        except eng.LinearityCapExceeded:
            order, c_used, traces = None, None, []
    else:
        order, traces = eng.boosted(system, c, trials, seed, d=d)
        c_used = c
    wall = time.perf_counter() - start

    trace = traces[-1] if traces else None
    row = {
        "n": system.n_elements,
        "size_norm": system.size_norm,
        "c": c_used,
        "d": d,
        "seed": seed,
        "iterations": trace.iterations if trace else 0,
        "wall_time": wall,
        "crossing": None,
        "bound": None,
        "passed": None,
        "outcome": "order" if order is not None else "false",
    }
    if order is not None:
        ok, report = certify(system, order, LinearityParams(c=c_used, d=d))
        row["crossing"] = report.max
        row["bound"] = report.bound
        row["passed"] = ok
    return row, order, traces


def run_suite(suite: dict) -> BenchReport:
    """Run every (entry, seed) combination of a suite spec.

    Suite format: {"runs": [{"family", "params", "c", "d", "seeds",
    "trials", "gen_seed"}, ...]}. Failures are recorded per row and never
    abort the suite.
    """
    report = BenchReport()
    for entry in suite["runs"]:
        family = entry["family"]
        params = tuple(entry["params"])
        c = entry.get("c", "auto")
        d = int(entry.get("d", 1))
        trials = int(entry.get("trials", 1))
        gen_seed = int(entry.get("gen_seed", 0))
        system = generate(GenSpec(family=family, params=params, seed=gen_seed))
        for seed in entry["seeds"]:
            try:
                row, _, _ = run_one(system, c, d, int(seed), trials=trials)
            except Exception as exc:   # record, keep going
                row = {f: None for f in ROW_FIELDS}
                row.update({"n": system.n_elements,
                            "size_norm": system.size_norm,
                            "c": c, "d": d, "seed": int(seed),
                            "outcome": f"error: {exc}"})
            row["family"] = family
            report.rows.append(row)
    _aggregate(report)
    return report


def scaling_ratio(row) -> float | None:
    """wall_time / (size_norm * log2(size_norm)), the near-linear statistic."""
    s = row["size_norm"]
    t = row["wall_time"]
    if not s or s <= 1 or t is None:
        return None
    return t / (s * math.log2(s))


def _aggregate(report: BenchReport):
    rows = report.rows
    total = len(rows)
    if not total:
        return
    failures = sum(1 for r in rows if r["outcome"] == "false")
    report.aggregates["failure_rate"] = failures / total
    ratios = [r for r in (scaling_ratio(row) for row in rows
                          if row["outcome"] == "order") if r is not None]
    if ratios:
        report.aggregates["scaling_ratio_min"] = min(ratios)
        report.aggregates["scaling_ratio_max"] = max(ratios)
        report.aggregates["scaling_ratio_spread"] = max(ratios) / min(ratios)
    bound_checked = [r for r in rows if r["passed"] is not None]
    if bound_checked:
        report.aggregates["bound_pass_rate"] = (
            sum(1 for r in bound_checked if r["passed"]) / len(bound_checked))
