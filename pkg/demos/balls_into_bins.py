"""
Balls into bins: loads, censuses, and the prefix maximum
========================================================

A census counts how many bins received exactly j balls.  Its expected
shape has a closed form, so one large throw is enough to see the
agreement.  The second half looks at the maximum over a small prefix of
the bin labels, which lags well behind the overall maximum.
"""
from degree_lab import (census, expected_census, max_load, prefix_max_load,
                        throw_balls)

n = k = 300_000
loads = throw_balls(n, k, rng=7)
observed = census(loads)

print(f"{k} balls into {n} bins (seed 7)")
print(f"{'load':>4}  {'observed':>9}  {'expected':>11}  histogram")
for j in range(len(observed)):
    exp = expected_census(n, k, j)
    bar = "#" * max(1, round(40 * observed[j] / observed.max()))
    print(f"{j:>4}  {observed[j]:>9}  {exp:>11.1f}  {bar}")
print(f"maximum load: {max_load(loads)}")

# A block of t bins only sees about t*k/n balls, so the running
# maximum over the first t labels sits far below the global one until
# t approaches n.  This gap is what lets a small labelled part of a
# larger structure stay out of the way of the overall maximum degree.
print("\nmaximum over the first t bin labels (seed 7)")
for t in (int(n ** 0.5), n // 100, n // 10, n):
    print(f"  t = {t:>6}: {prefix_max_load(loads, t)}")
