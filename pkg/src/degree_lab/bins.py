"""Balls into bins: sampling, load statistics, expected census.

k balls land independently and uniformly in n bins.  A trial is
represented by its load vector (ball count per bin); everything else is
a cheap function of that vector.
"""
from __future__ import annotations

import math

import numpy as np


def throw_positions(n: int, k: int, rng=None) -> np.ndarray:
    """Landing bins of k balls, one entry per ball, each uniform on 1..n."""
    n = int(n)
    k = int(k)
    if n < 1:
        raise ValueError("need at least one bin")
    if k < 0:
        raise ValueError("ball count must be non-negative")
    rng = np.random.default_rng(rng)
    return rng.integers(1, n + 1, size=k)


def loads_from_positions(n: int, positions: np.ndarray) -> np.ndarray:
    """Load vector: entry j is the number of balls that landed in bin j + 1."""
    n = int(n)
    positions = np.asarray(positions, dtype=np.int64)
    if positions.size and (positions.min() < 1 or positions.max() > n):
        raise ValueError("ball position outside 1..n")
    return np.bincount(positions, minlength=n + 1)[1:]


def throw_balls(n: int, k: int, rng=None) -> np.ndarray:
    """Load vector of one trial (throw_positions followed by counting)."""
    return loads_from_positions(n, throw_positions(n, k, rng))


def max_load(loads: np.ndarray) -> int:
    loads = np.asarray(loads)
    if loads.size == 0:
        raise ValueError("empty load vector")
    return int(loads.max())


def prefix_max_load(loads: np.ndarray, t: int) -> int:
    """Maximum load among the first t bins."""
    loads = np.asarray(loads)
    t = int(t)
    if not 1 <= t <= loads.size:
        raise ValueError("prefix length out of range")
    return int(loads[:t].max())


def census(loads: np.ndarray) -> np.ndarray:
    """Observed census: entry l counts the bins with load exactly l."""
    loads = np.asarray(loads, dtype=np.int64)
    if loads.size == 0:
        return np.zeros(0, dtype=np.int64)
    return np.bincount(loads).astype(np.int64)


def expected_census(n: int, k: int, load: int) -> float:
    """Expected number of bins with the given load, for k balls in n bins.

    Equals n * C(k, load) * (1/n)**load * (1 - 1/n)**(k - load),
    evaluated in log space so large n and k are safe.
    """
    n = int(n)
    k = int(k)
    load = int(load)
    if n < 1:
        raise ValueError("need at least one bin")
    if k < 0:
        raise ValueError("ball count must be non-negative")
    if load < 0 or load > k:
        return 0.0
    if n == 1:
        return 1.0 if load == k else 0.0
    log_binom = (math.lgamma(k + 1) - math.lgamma(load + 1)
                 - math.lgamma(k - load + 1))
    log_val = (math.log(n) + log_binom - load * math.log(n)
               + (k - load) * math.log1p(-1.0 / n))
    return math.exp(log_val)
