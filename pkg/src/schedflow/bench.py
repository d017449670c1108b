"""Timing harness, log-log complexity regression, and quality metrics.

Timing measures the solver call only; instance generation happens outside
the timed region. Runs whose single-shot duration is below 1 ms are
re-measured in batches until the batch exceeds 10 ms, and the per-run time
is batch/k, which keeps small sizes above timer noise.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from statistics import mean, median
from typing import Callable, Iterable, Optional, Sequence, TextIO

from .coloring import dsatur, welsh_powell
from .errors import ConfigError
from .generators import GenConfig, gen_conflict_graph, gen_hospital
from .hospital import solve

MIN_RELIABLE_SECONDS = 1e-3
BATCH_TARGET_SECONDS = 1e-2

FLOW_SIZES = (20, 40, 60, 80, 100, 150, 200, 250, 300, 350, 400)
COLORING_SIZES = (50, 100, 200, 300, 400, 500, 600, 700, 800, 900, 1000)


@dataclass(frozen=True)
class TimingRecord:
    algorithm: str
    n: int
    trial: int
    seconds: float
    quality: int  # matching size, or colors used
    delta: Optional[int] = None  # max degree, coloring records only


@dataclass(frozen=True)
class RegressionFit:
    slope: float
    intercept: float
    r_squared: float


class RegressionError(ValueError):
    """Not enough distinct sizes for a log-log fit."""


def timed_run(fn: Callable[[], object]) -> tuple[float, object]:
    """Wall-clock one call of fn, batching repeats if it is too fast to time."""
    start = time.perf_counter()
    result = fn()
    seconds = time.perf_counter() - start
    if seconds >= MIN_RELIABLE_SECONDS:
        return seconds, result
    batch = 1
    while True:
        batch *= 2
        start = time.perf_counter()
        for _ in range(batch):
            result = fn()
        elapsed = time.perf_counter() - start
        if elapsed >= BATCH_TARGET_SECONDS:
            return elapsed / batch, result


def _check_suite_args(sizes: Sequence[int], trials: int) -> None:
    if not sizes:
        raise ConfigError("sizes must be nonempty")
    if trials < 1:
        raise ConfigError("trials must be >= 1")


def time_flow_suite(
    sizes: Sequence[int] = FLOW_SIZES, trials: int = 5, seed: int = 42
) -> list[TimingRecord]:
    """Time the hospital solver on freshly generated instances."""
    _check_suite_args(sizes, trials)
    rng = random.Random(seed)
    records = []
    for n in sizes:
        for trial in range(trials):
            inst = gen_hospital(GenConfig(seed=rng.randrange(2**63), n=n))
            seconds, assignment = timed_run(lambda: solve(inst))
            records.append(
                TimingRecord("flow", n, trial, seconds, assignment.admitted_count)
            )
    return records


def time_coloring_suite(
    sizes: Sequence[int] = COLORING_SIZES,
    trials: int = 5,
    density: float = 0.3,
    seed: int = 42,
) -> list[TimingRecord]:
    """Time Welsh-Powell and DSatur on identical graphs per trial."""
    _check_suite_args(sizes, trials)
    rng = random.Random(seed)
    records = []
    for n in sizes:
        for trial in range(trials):
            g = gen_conflict_graph(
                GenConfig(seed=rng.randrange(2**63), n=n, density=density)
            )
            delta = g.max_degree()
            wp_seconds, wp_coloring = timed_run(lambda: welsh_powell(g))
            ds_seconds, ds_coloring = timed_run(lambda: dsatur(g))
            records.append(
                TimingRecord("wp", n, trial, wp_seconds, wp_coloring.num_colors, delta)
            )
            records.append(
                TimingRecord("dsatur", n, trial, ds_seconds, ds_coloring.num_colors, delta)
            )
    return records


def _ols(xs: Sequence[float], ys: Sequence[float]) -> RegressionFit:
    mx, my = mean(xs), mean(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = my - slope * mx
    ss_res = sum((y - (intercept + slope * x)) ** 2 for x, y in zip(xs, ys))
    ss_tot = sum((y - my) ** 2 for y in ys)
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return RegressionFit(slope=slope, intercept=intercept, r_squared=r_squared)


def loglog_slope(records: Iterable[TimingRecord], algorithm: str) -> RegressionFit:
    """OLS fit of ln(mean seconds per size) against ln(n) for one algorithm."""
    by_size: dict[int, list[float]] = {}
    for rec in records:
        if rec.algorithm == algorithm:
            by_size.setdefault(rec.n, []).append(rec.seconds)
    if len(by_size) < 3:
        raise RegressionError(
            f"log-log fit needs >= 3 distinct sizes for {algorithm!r}, got {len(by_size)}"
        )
    sizes = sorted(by_size)
    xs = [math.log(n) for n in sizes]
    ys = [math.log(mean(by_size[n])) for n in sizes]
    return _ols(xs, ys)


def approximation_ratios(records: Iterable[TimingRecord]) -> dict[tuple[str, int], float]:
    """Mean colors/(max_degree+1) per (algorithm, size)."""
    ratios: dict[tuple[str, int], list[float]] = {}
    for rec in records:
        if rec.delta is not None:
            ratios.setdefault((rec.algorithm, rec.n), []).append(
                rec.quality / (rec.delta + 1)
            )
    return {key: mean(vals) for key, vals in ratios.items()}


def summarize(records: Sequence[TimingRecord]) -> list[dict]:
    """One row per size with per-algorithm means (and medians of seconds)."""
    if not records:
        raise ConfigError("no records to summarize")
    rows = []
    algorithms = sorted({rec.algorithm for rec in records})
    for n in sorted({rec.n for rec in records}):
        row: dict = {"n": n}
        for alg in algorithms:
            sample = [r for r in records if r.n == n and r.algorithm == alg]
            if not sample:
                continue
            row[alg] = {
                "mean_seconds": mean(r.seconds for r in sample),
                "median_seconds": median(r.seconds for r in sample),
                "mean_quality": mean(r.quality for r in sample),
            }
            deltas = [r.delta for r in sample if r.delta is not None]
            if deltas:
                row[alg]["mean_delta"] = mean(deltas)
        rows.append(row)
    return rows


CSV_HEADER = "algorithm,n,trial,seconds,quality,delta"


def write_csv(records: Iterable[TimingRecord], out: TextIO) -> None:
    """Canonical benchmark output: LF line endings, header mandatory."""
    out.write(CSV_HEADER + "\n")
    for rec in records:
        delta = "" if rec.delta is None else str(rec.delta)
        out.write(
            f"{rec.algorithm},{rec.n},{rec.trial},{rec.seconds!r},{rec.quality},{delta}\n"
        )
