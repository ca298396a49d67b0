"""
The typical maximum load and its two-point window
==================================================

Throw k balls into n bins uniformly at random.  The maximum load
concentrates around the positive root of a transcendental objective,
and for most (n, m) pairs the maximum degree of a sparse random graph
lands in a two-value integer window built from that root.

Run:  python3 demos/typical_load_curve.py
"""
import numpy as np

from degree_lab import (max_load, predicted_interval, throw_balls,
                        two_point_prediction, typical_max_load)

# --- the balanced curve -------------------------------------------------
# typical_max_load(n) solves for the load scale with k = n balls; it
# grows like log n / log log n, so doubling n barely moves it.
print("balanced case, k = n")
print(f"{'n':>12}  {'typical load':>12}  {'window (eps=0.25)':>18}")
for n in (1e3, 1e4, 1e5, 1e6, 1e8, 1e10, 1e12):
    load = typical_max_load(n)
    lo, hi = predicted_interval(n)
    print(f"{n:12.0e}  {load:12.4f}  {f'[{lo}, {hi}]':>18}")

# --- simulation against the window --------------------------------------
# At a desk-top scale the realized maxima sit a bit below the asymptotic
# root, so compare against a wide integer neighbourhood of the floor.
n = 200_000
trials = 40
floor = int(typical_max_load(n))
hits = np.zeros(trials, dtype=int)
for i in range(trials):
    hits[i] = max_load(throw_balls(n, n, rng=1000 + i))
print(f"\n{trials} throws of {n} balls into {n} bins")
counts = np.bincount(hits)
print("observed maxima:",
      ", ".join(f"{v}x{counts[v]}" for v in range(len(counts)) if counts[v]))
in_window = np.mean((hits >= floor - 2) & (hits <= floor + 1))
print(f"fraction inside [{floor - 2}, {floor + 1}]: {in_window:.2f}")

# --- two-point windows for graphs ---------------------------------------
# For a random graph with n vertices and m edges the predicted window
# depends on where m sits relative to n/2.
n = 10**6
print(f"\ntwo-point maximum-degree windows, n = {n}")
for m in (n // 2, n // 2 + 20_000, int(0.7 * n)):
    pred = two_point_prediction(n, m)
    print(f"  m = {m:>7}: regime {pred.regime:>3}, "
          f"window {{{pred.lower}, {pred.upper}}}")
