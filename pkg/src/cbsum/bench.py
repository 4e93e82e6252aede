"""Repetition/statistics harness.

One repetition assigns fresh random identifiers to the vertices, runs the
two-step heuristic on the relabeled graph, maps the labeling back through
the identifier permutation, and scores it on the original graph.  Each
repetition draws its permutation from a sub-seed derived from (seed, index),
so a run is reproducible and independent of execution order, and repetitions
can spread over a process pool.

Wall time covers only the two heuristic steps, not graph generation,
relabeling, or I/O; the reported figure is mean seconds per repetition.

The robustness protocol nests a running minimum inside the repetitions: for
every outer repetition a shared stream of max(k) inner runs is drawn, and
"min over k" is the prefix minimum of that stream, which makes the reported
medians non-increasing in k by construction.
"""

from __future__ import annotations

import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import ContractViolationError
from .graph import Graph, Labeling, cbs, relabel_vertices
from .merge import merge_paths
from .pathfind import find_paths
from .reference import relative_distance
from .rng import SplitMix64, derive_seed

__all__ = ["RunStats", "RobustnessStats", "run_instance", "run_robustness", "single_run"]


@dataclass
class RunStats:
    """Aggregate of R repetitions on one instance."""

    instance: str
    n: int
    m: int
    values: list = field(default_factory=list)
    median_cbs: float = 0.0
    mad_cbs: float = 0.0
    min_cbs: float = 0.0
    ref: float | None = None
    ref_kind: str | None = None
    rd: float | None = None
    mean_time_s: float = 0.0

    def csv_row(self) -> list:
        return [
            self.instance,
            self.n,
            self.m,
            self.median_cbs,
            self.mad_cbs,
            self.min_cbs,
            "" if self.ref is None else self.ref,
            "" if self.ref_kind is None else self.ref_kind,
            "" if self.rd is None else f"{self.rd:.6f}",
            f"{self.mean_time_s:.6f}",
        ]


@dataclass
class RobustnessStats:
    """Median/MAD of min-over-k values, per k, over R outer repetitions."""

    instance: str
    n: int
    m: int
    k_values: list
    medians: dict
    mads: dict
    rds: dict
    overall_min: float


def _as_clean_number(x):
    """Collapse 29.0 to 29; objective statistics are integral on unweighted
    graphs and should print that way."""
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return x


def single_run(graph: Graph, sub_seed: int) -> tuple[float, float]:
    """One repetition: relabel with a random permutation, run both steps,
    score the back-mapped labeling on the original graph.

    Returns (objective, heuristic wall seconds).
    """
    rng = SplitMix64(sub_seed)
    perm = rng.permutation(graph.n)
    relabeled = relabel_vertices(graph, perm)
    t0 = time.perf_counter()
    labeling = merge_paths(find_paths(relabeled), relabeled)
    elapsed = time.perf_counter() - t0
    back = Labeling(tuple(labeling.perm[perm[v]] for v in range(graph.n)))
    return cbs(graph, back), elapsed


def _run_chunk(graph: Graph, sub_seeds: list[int]) -> list[tuple[float, float]]:
    return [single_run(graph, s) for s in sub_seeds]


def _pooled_runs(graph: Graph, sub_seeds: list[int], jobs: int) -> list[tuple[float, float]]:
    if jobs <= 1 or len(sub_seeds) < 2:
        return _run_chunk(graph, sub_seeds)
    jobs = min(jobs, len(sub_seeds))
    chunks = [sub_seeds[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_run_chunk, graph, chunk) for chunk in chunks]
        results = [f.result() for f in futures]
    # Stitch the round-robin chunks back into submission order.
    out: list[tuple[float, float]] = [None] * len(sub_seeds)  # type: ignore[list-item]
    for lane, chunk_result in enumerate(results):
        for j, item in enumerate(chunk_result):
            out[lane + j * jobs] = item
    return out


def run_instance(
    graph: Graph,
    repetitions: int,
    seed: int,
    instance: str = "",
    ref: float | None = None,
    ref_kind: str | None = None,
    jobs: int = 1,
) -> RunStats:
    """Run R randomized repetitions and aggregate median/MAD/min and rd."""
    if repetitions < 1:
        raise ContractViolationError("need at least one repetition")
    sub_seeds = [derive_seed(seed, r) for r in range(repetitions)]
    results = _pooled_runs(graph, sub_seeds, jobs)
    values = [v for v, _ in results]
    med = _as_clean_number(statistics.median(values))
    stats = RunStats(
        instance=instance,
        n=graph.n,
        m=graph.m,
        values=values,
        median_cbs=med,
        mad_cbs=_as_clean_number(statistics.median([abs(v - med) for v in values])),
        min_cbs=min(values),
        ref=ref,
        ref_kind=ref_kind,
        rd=None if ref is None else relative_distance(med, ref),
        mean_time_s=sum(t for _, t in results) / repetitions,
    )
    return stats


def run_robustness(
    graph: Graph,
    k_values,
    repetitions: int,
    seed: int,
    instance: str = "",
    jobs: int = 1,
) -> RobustnessStats:
    """Median/MAD of the best objective over k tries, for each k.

    For each of the R outer repetitions, max(k) inner runs are drawn from
    sub-seeds derived from (seed, outer, inner); "min over k" is the prefix
    minimum of that stream.  The reference for the relative distances is the
    smallest value seen anywhere.
    """
    k_values = sorted(set(int(k) for k in k_values))
    if not k_values or k_values[0] < 1:
        raise ContractViolationError("k values must be positive")
    if repetitions < 1:
        raise ContractViolationError("need at least one repetition")
    kmax = k_values[-1]
    pairs = [(r, j) for r in range(repetitions) for j in range(kmax)]
    sub_seeds = [derive_seed(seed, r, j) for r, j in pairs]
    results = _pooled_runs(graph, sub_seeds, jobs)
    values = {pair: results[idx][0] for idx, pair in enumerate(pairs)}

    medians = {}
    mads = {}
    for k in k_values:
        mins = []
        for r in range(repetitions):
            stream = [values[(r, j)] for j in range(k)]
            mins.append(min(stream))
        med = _as_clean_number(statistics.median(mins))
        medians[k] = med
        mads[k] = _as_clean_number(statistics.median([abs(v - med) for v in mins]))
    overall_min = min(values.values())
    rds = {k: relative_distance(medians[k], overall_min) for k in k_values}
    return RobustnessStats(
        instance=instance,
        n=graph.n,
        m=graph.m,
        k_values=k_values,
        medians=medians,
        mads=mads,
        rds=rds,
        overall_min=overall_min,
    )
