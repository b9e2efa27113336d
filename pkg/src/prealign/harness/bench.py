"""Throughput and scaling measurements for the per-pair (scalar) filters."""

from __future__ import annotations

import csv
import gc
import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable, TextIO

from ..errors import InvalidParameters
from ..magnet import magnet_filter
from ..oracle import banded_edit_distance
from ..shouji import DEFAULT_WIDTH, shouji_filter
from .dataset import PairDataset, generate_pairs


@dataclass
class BenchResult:
    algo: str
    m: int
    e: int
    pairs: int
    median_s: float
    pairs_per_s: float
    bases_per_s: float
    runs: list[float] = field(default_factory=list, repr=False)


CSV_FIELDS = ("algo", "m", "e", "pairs", "median_s", "pairs_per_s", "bases_per_s", "m_ratio", "e_ratio")


def _runner(algo: str, e: int, width: int):
    if algo == "shouji":
        return lambda p, t: shouji_filter(p, t, e, width)
    if algo == "magnet":
        return lambda p, t: magnet_filter(p, t, e)
    if algo == "oracle":
        return lambda p, t: banded_edit_distance(p, t, e)
    raise InvalidParameters(f"unknown algorithm {algo!r}")


def _time_once(run, pairs) -> float:
    enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        for text, pattern in pairs:
            run(pattern, text)
        return time.perf_counter() - start
    finally:
        if enabled:
            gc.enable()


def _result(algo: str, dataset: PairDataset, e: int, runs: list[float]) -> BenchResult:
    median = statistics.median(runs)
    n = len(dataset)
    return BenchResult(algo, dataset.m, e, n, median, n / median, n * dataset.m / median, runs)


def bench(dataset: PairDataset, e: int, algo: str = "shouji", repeats: int = 5,
          width: int = DEFAULT_WIDTH, warmup: int = 1) -> BenchResult:
    """Median wall time of filtering every pair in ``dataset`` once, over ``repeats`` runs."""
    if repeats < 1:
        raise InvalidParameters("repeats must be >= 1")
    run = _runner(algo, e, width)
    for _ in range(warmup):
        _time_once(run, dataset.pairs)
    runs = [_time_once(run, dataset.pairs) for _ in range(repeats)]
    return _result(algo, dataset, e, runs)


def scaling_table(algo: str, lengths: Iterable[int], thresholds: Iterable[int], count: int = 20,
                  seed: int = 0, edits: str = "2", repeats: int = 5,
                  width: int = DEFAULT_WIDTH) -> list[BenchResult]:
    """Bench every (m, e) combination.

    One dataset per length is shared across thresholds, and the repeats
    are interleaved across configurations so slow drift in machine load
    affects every configuration alike.
    """
    if repeats < 1:
        raise InvalidParameters("repeats must be >= 1")
    thresholds = list(thresholds)
    configs = []
    for m in lengths:
        dataset = generate_pairs(seed, count, m, edits)
        for e in thresholds:
            configs.append((dataset, e, _runner(algo, e, width)))
    for dataset, _, run in configs:
        _time_once(run, dataset.pairs)
    runs = [[] for _ in configs]
    for _ in range(repeats):
        for timings, (dataset, _, run) in zip(runs, configs):
            timings.append(_time_once(run, dataset.pairs))
    return [_result(algo, dataset, e, timings) for timings, (dataset, e, _) in zip(runs, configs)]


def write_csv(results: list[BenchResult], out: TextIO) -> None:
    """CSV rows with time ratios against the smallest m (same e) and the smallest e (same m)."""
    base_m = {}
    base_e = {}
    for r in results:
        if r.e not in base_m or r.m < base_m[r.e].m:
            base_m[r.e] = r
        if r.m not in base_e or r.e < base_e[r.m].e:
            base_e[r.m] = r
    writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in results:
        row = {k: v for k, v in asdict(r).items() if k in CSV_FIELDS}
        row["m_ratio"] = f"{r.median_s / base_m[r.e].median_s:.4f}"
        row["e_ratio"] = f"{r.median_s / base_e[r.m].median_s:.4f}"
        for key in ("median_s", "pairs_per_s", "bases_per_s"):
            row[key] = f"{row[key]:.6g}"
        writer.writerow(row)
