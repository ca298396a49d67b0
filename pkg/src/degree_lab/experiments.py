"""Seeded Monte Carlo experiments with machine-readable reports.

Each experiment kind runs `trials` independent trials, one derived seed
per trial, records an integer statistic (a maximum load or a maximum
degree), compares it against the matching prediction window, and
reduces everything to a ConcentrationReport.  Reports serialize to JSON
or CSV; reruns with the same master seed are byte-identical apart from
the wall-clock entry, which can be excluded.

Kinds and their statistic:

  nu        no trials; evaluates the typical load and its window
  bins      maximum load of k balls in n bins
  forest    maximum degree of a uniform rooted forest
  gnm       maximum degree of a uniform simple graph with m edges
  cs        maximum degree of a uniform complex-free graph
  complex   maximum degree of a uniform complex graph with given core
  pipeline  maximum degree of an assembled three-part graph
  census    no statistic; uniformity check of the gnm sampler
"""
from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .bins import max_load, throw_balls
from .concentration import (classify_regime, predicted_interval,
                            two_point_prediction, typical_max_load)
from .forests import sample_forest_degrees
from .graphs import LabeledGraph, core_of, split
from .samplers import (PipelineSpec, SamplingCapExceeded, exact_census_gnm,
                       sample_complex, sample_cs_counted, sample_gnm_counted,
                       sample_pipeline)
from .seeding import trial_seed

KINDS = ("nu", "bins", "forest", "gnm", "cs", "complex", "pipeline", "census")

DEFAULT_TRIALS = 100
DEFAULT_EPSILON = 0.25
DEFAULT_THRESHOLD = 0.9
DEFAULT_CENSUS_THRESHOLD = 0.05


@dataclass
class ExperimentConfig:
    """Parameters of one experiment; unused fields stay None."""

    kind: str
    n: int | None = None
    m: int | None = None
    k: int | None = None
    t: int | None = None
    q: int | None = None
    core: LabeledGraph | None = None
    large_order: int | None = None
    small_order: int | None = None
    epsilon: float = DEFAULT_EPSILON
    trials: int = DEFAULT_TRIALS
    master_seed: int = 0
    threshold: float | None = None
    shuffle_labels: bool = False

    def resolved_threshold(self) -> float:
        if self.threshold is not None:
            return float(self.threshold)
        if self.kind == "census":
            return DEFAULT_CENSUS_THRESHOLD
        return DEFAULT_THRESHOLD


@dataclass
class ConcentrationReport:
    """Outcome of one experiment run."""

    kind: str
    params: dict
    interval: tuple[int, int] | None
    anchor: int | None
    histogram: dict[int, int]
    hit_fraction: float | None
    verdict: str
    master_seed: int
    trial_seeds: list[int]
    elapsed_ms: float
    extras: dict = field(default_factory=dict)
    trial_stats: list[int | None] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def _forest_interval(order: float, eps: float) -> tuple[int, int]:
    """Degree window of a sparse forest: the load window shifted up by 1."""
    load = typical_max_load(order)
    return (math.floor(load - eps) + 1, math.floor(load + eps) + 1)


def _require(cfg: ExperimentConfig, *names: str) -> None:
    for name in names:
        if getattr(cfg, name) is None:
            raise ValueError(f"kind={cfg.kind!r} needs {name}")


def _core_degree_padding(core: LabeledGraph, q: int) -> np.ndarray:
    pad = np.zeros(q, dtype=np.int64)
    pad[:core.n] = core.degree_sequence()
    return pad


def run_experiment(cfg: ExperimentConfig) -> ConcentrationReport:
    if cfg.kind not in KINDS:
        raise ValueError(f"unknown experiment kind {cfg.kind!r}")
    start = time.perf_counter()
    threshold = cfg.resolved_threshold()

    if cfg.kind == "nu":
        _require(cfg, "n")
        k = cfg.k if cfg.k is not None else cfg.n
        load = typical_max_load(cfg.n, k)
        interval = predicted_interval(cfg.n, k, cfg.epsilon)
        report = ConcentrationReport(
            kind="nu",
            params={"n": cfg.n, "k": k, "eps": cfg.epsilon},
            interval=interval,
            anchor=math.floor(load - 1.0 / 3.0),
            histogram={},
            hit_fraction=None,
            verdict="pass",
            master_seed=cfg.master_seed,
            trial_seeds=[],
            elapsed_ms=0.0,
            extras={"typicalLoad": load},
        )
        report.elapsed_ms = (time.perf_counter() - start) * 1000.0
        return report

    if cfg.trials < 1:
        raise ValueError("trials must be at least 1")

    if cfg.kind == "census":
        _require(cfg, "n", "m")
        seed = trial_seed(cfg.master_seed, 0)
        result = exact_census_gnm(cfg.n, cfg.m, cfg.trials, seed)
        verdict = ("pass" if result.tv_distance <= threshold
                   and not result.insufficient_samples else "fail")
        report = ConcentrationReport(
            kind="census",
            params={"n": cfg.n, "m": cfg.m, "trials": cfg.trials,
                    "threshold": threshold},
            interval=None,
            anchor=None,
            histogram={i: c for i, c in enumerate(result.counts) if c},
            hit_fraction=None,
            verdict=verdict,
            master_seed=cfg.master_seed,
            trial_seeds=[seed],
            elapsed_ms=0.0,
            extras={
                "graphCount": result.graph_count,
                "tvDistance": result.tv_distance,
                "chiSquare": result.chi_square,
                "insufficientSamples": result.insufficient_samples,
            },
        )
        report.elapsed_ms = (time.perf_counter() - start) * 1000.0
        return report

    params: dict = {"trials": cfg.trials, "eps": cfg.epsilon,
                    "threshold": threshold}
    extras: dict = {}
    flags: dict[str, int] = {}

    def count(name: str, ok: bool) -> None:
        flags[name] = flags.get(name, 0) + (1 if ok else 0)

    if cfg.kind == "bins":
        _require(cfg, "n", "k")
        params = {"n": cfg.n, "k": cfg.k, **params}
        interval = predicted_interval(cfg.n, cfg.k, cfg.epsilon)
        anchor = math.floor(typical_max_load(cfg.n, cfg.k) - 1.0 / 3.0)

        def trial(seed):
            return max_load(throw_balls(cfg.n, cfg.k, seed))

    elif cfg.kind == "forest":
        _require(cfg, "n", "t")
        params = {"n": cfg.n, "t": cfg.t, **params}
        interval = _forest_interval(cfg.n, cfg.epsilon)
        anchor = math.floor(typical_max_load(cfg.n) - 1.0 / 3.0) + 1

        def trial(seed):
            deg = sample_forest_degrees(cfg.n, cfg.t, seed)
            stat = int(deg.max())
            count("rootGap", stat - int(deg[:cfg.t].max()) >= 1)
            return stat

    elif cfg.kind == "gnm":
        _require(cfg, "n", "m")
        params = {"n": cfg.n, "m": cfg.m, **params}
        interval = predicted_interval(cfg.n, 2 * cfg.m, cfg.epsilon)
        anchor = math.floor(typical_max_load(cfg.n, 2 * cfg.m) - 1.0 / 3.0)
        attempts_total = [0]

        def trial(seed):
            g, attempts = sample_gnm_counted(cfg.n, cfg.m, seed)
            attempts_total[0] += attempts
            return g.max_degree()

    elif cfg.kind == "cs":
        _require(cfg, "n", "m")
        params = {"n": cfg.n, "m": cfg.m, **params}
        interval = predicted_interval(cfg.n, None, cfg.epsilon)
        anchor = math.floor(typical_max_load(cfg.n) - 1.0 / 3.0)
        attempts_total = [0]

        def trial(seed):
            g, attempts = sample_cs_counted(cfg.n, cfg.m, seed)
            attempts_total[0] += attempts
            return g.max_degree()

    elif cfg.kind == "complex":
        _require(cfg, "core", "q")
        params = {"coreOrder": cfg.core.n, "coreSize": cfg.core.num_edges,
                  "q": cfg.q, **params}
        interval = _forest_interval(cfg.q, cfg.epsilon)
        anchor = math.floor(typical_max_load(cfg.q) - 1.0 / 3.0) + 1
        core_pad = _core_degree_padding(cfg.core, cfg.q)
        core_edge_set = cfg.core.edge_set()

        def trial(seed):
            g, forest = sample_complex(cfg.core, cfg.q, seed,
                                       return_forest=True)
            count("coreRecovery", core_of(g).edge_set() == core_edge_set)
            expected = forest.degree_sequence() + core_pad
            count("degreeIdentity",
                  bool(np.array_equal(g.degree_sequence(), expected)))
            return g.max_degree()

    elif cfg.kind == "pipeline":
        _require(cfg, "core", "large_order", "small_order", "n", "m")
        spec = PipelineSpec(cfg.core, cfg.large_order, cfg.small_order,
                            cfg.n, cfg.m)
        prediction = two_point_prediction(cfg.n, cfg.m)
        interval = prediction.as_tuple()
        anchor = prediction.lower
        extras["regime"] = prediction.regime
        params = {"n": cfg.n, "m": cfg.m, "l": cfg.large_order,
                  "r": cfg.small_order, "coreOrder": cfg.core.n,
                  "coreSize": cfg.core.num_edges,
                  "shuffleLabels": cfg.shuffle_labels, **params}
        params.pop("eps")
        track_parts = spec.small_order > 0 and spec.spare_order > 0

        def trial(seed):
            g = sample_pipeline(spec, seed,
                                shuffle_labels=cfg.shuffle_labels)
            parts = split(g)
            count("conservation",
                  g.n == cfg.n and g.num_edges == cfg.m)
            count("partOrders",
                  parts.large_complex.order == spec.large_order
                  and parts.small_complex.order == spec.small_order
                  and parts.non_complex.order == spec.spare_order)
            if track_parts:
                count("smallPartBelowSpare",
                      parts.small_complex.max_degree()
                      < parts.non_complex.max_degree())
            return g.max_degree()

    else:  # pragma: no cover - guarded by the KINDS check
        raise AssertionError(cfg.kind)

    seeds = [trial_seed(cfg.master_seed, i) for i in range(cfg.trials)]
    stats: list[int | None] = []
    failures = 0
    for seed in seeds:
        try:
            stats.append(int(trial(seed)))
        except SamplingCapExceeded:
            stats.append(None)
            failures += 1

    observed = [s for s in stats if s is not None]
    histogram: dict[int, int] = {}
    for s in observed:
        histogram[s] = histogram.get(s, 0) + 1
    lo, hi = interval
    hits = sum(1 for s in observed if lo <= s <= hi)
    hit_fraction = hits / cfg.trials

    for name, good in flags.items():
        extras[name + "Fraction"] = good / cfg.trials
    if cfg.kind in ("gnm", "cs"):
        extras["acceptanceFraction"] = cfg.trials / attempts_total[0]
    if failures:
        extras["failedTrials"] = failures

    report = ConcentrationReport(
        kind=cfg.kind,
        params=params,
        interval=(int(lo), int(hi)),
        anchor=int(anchor),
        histogram=dict(sorted(histogram.items())),
        hit_fraction=hit_fraction,
        verdict="pass" if hit_fraction >= threshold else "fail",
        master_seed=cfg.master_seed,
        trial_seeds=seeds,
        elapsed_ms=0.0,
        extras=extras,
        trial_stats=stats,
    )
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def emit_report(report: ConcentrationReport, fmt: str = "json", *,
                include_elapsed: bool = True) -> bytes:
    """Serialize a report.  JSON carries the full report; CSV carries
    one row per trial and exists only for kinds with per-trial rows."""
    if fmt == "json":
        doc: dict = {"kind": report.kind, "params": report.params}
        if report.interval is not None:
            doc["prediction"] = {"interval": list(report.interval),
                                 "h": report.anchor}
        else:
            doc["prediction"] = None
        doc["histogram"] = [[value, count]
                            for value, count in sorted(report.histogram.items())]
        doc["hitFraction"] = report.hit_fraction
        doc["verdict"] = report.verdict
        doc["masterSeed"] = report.master_seed
        doc["trialSeeds"] = report.trial_seeds
        if include_elapsed:
            doc["elapsedMs"] = round(report.elapsed_ms, 3)
        if report.extras:
            doc["extras"] = report.extras
        return (json.dumps(doc, indent=2) + "\n").encode()
    if fmt == "csv":
        if not report.trial_stats:
            raise ValueError(f"kind={report.kind!r} has no per-trial rows; "
                             "use the json format")
        lo, hi = report.interval
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["trialIndex", "seed", "statistic", "inInterval"])
        for i, (seed, stat) in enumerate(zip(report.trial_seeds,
                                             report.trial_stats)):
            if stat is None:
                writer.writerow([i, seed, "", "false"])
            else:
                writer.writerow([i, seed, stat,
                                 "true" if lo <= stat <= hi else "false"])
        return buf.getvalue().encode()
    raise ValueError(f"unknown format {fmt!r}")


__all__ = [
    "KINDS", "ExperimentConfig", "ConcentrationReport", "run_experiment",
    "emit_report", "classify_regime",
]
