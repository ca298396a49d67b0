"""Acceptance suite: thirteen numbered criteria, one test each.

Every test prints a single summary line (visible under normal pytest
capture) of the form

    ACCEPTANCE nn PASS|FAIL <measurements> [elapsed]

and then asserts the criterion as stated.  Master seed 0 throughout;
nothing here is tuned per seed.
"""
import itertools
import math
import time

import numpy as np

from degree_lab.bins import max_load, prefix_max_load, throw_balls
from degree_lab.concentration import (log_ball_count, log_bin_count,
                                      typical_max_load)
from degree_lab.experiments import (ExperimentConfig, emit_report,
                                    run_experiment)
from degree_lab.forests import (decode_sequence, degrees_from_sequence,
                                encode_forest, forest_count)
from degree_lab.graphs import LabeledGraph
from degree_lab.samplers import exact_census_gnm, sample_multigraph
from degree_lab.seeding import trial_seed
from oracles import enumerate_rooted_forests, is_rooted_forest

MASTER = 0

K4 = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def announce(capsys, number, ok, detail, elapsed):
    verdict = "PASS" if ok else "FAIL"
    with capsys.disabled():
        print(f"ACCEPTANCE {number:02d} {verdict} {detail} "
              f"[{elapsed:.1f}s]")


def all_sequences(n, t):
    if n == t:
        yield ()
        return
    for body in itertools.product(range(1, n + 1), repeat=n - t - 1):
        for last in range(1, t + 1):
            yield body + (last,)


def cubic_core(half):
    """Connected cubic graph: a 2*half cycle plus long chords."""
    size = 2 * half
    edges = [(i, i % size + 1) for i in range(1, size + 1)]
    edges += [(i, i + half) for i in range(1, half + 1)]
    return size, edges


def test_criterion_01_codec_bijection_exhaustive(capsys):
    start = time.perf_counter()
    families = codes = 0
    ok = True
    for n in range(1, 8):
        for t in range(1, min(3, n) + 1):
            families += 1
            seen = set()
            for seq in all_sequences(n, t):
                codes += 1
                f = decode_sequence(n, t, seq)
                if not is_rooted_forest(n, t, f.edge_set()):
                    ok = False
                if encode_forest(f) != seq:
                    ok = False
                seen.add(frozenset(f.edge_set()))
            expected = forest_count(n, t)
            if len(seen) != expected:
                ok = False
            if len(enumerate_rooted_forests(n, t)) != expected:
                ok = False
    elapsed = time.perf_counter() - start
    announce(capsys, 1, ok and elapsed < 30,
             f"codec bijection over {families} families, {codes} codes",
             elapsed)
    assert ok
    assert elapsed < 30


def test_criterion_02_degree_formula_exact(capsys):
    start = time.perf_counter()
    rng = np.random.default_rng(MASTER)
    mismatches = 0
    for _ in range(10_000):
        n = int(rng.integers(2, 1001))
        t = int(rng.integers(1, n + 1))
        if n == t:
            seq = ()
        else:
            body = rng.integers(1, n + 1, size=n - t - 1)
            seq = tuple(int(w) for w in body) + (int(rng.integers(1, t + 1)),)
        predicted = degrees_from_sequence(n, t, seq)
        actual = decode_sequence(n, t, seq).degree_sequence()
        if not np.array_equal(predicted, actual):
            mismatches += 1
    elapsed = time.perf_counter() - start
    announce(capsys, 2, mismatches == 0,
             f"degree formula on 10000 forests, {mismatches} mismatches",
             elapsed)
    assert mismatches == 0


def test_criterion_03_solver_identities(capsys):
    start = time.perf_counter()
    rng = np.random.default_rng(MASTER)
    worst = 0.0
    for _ in range(100):
        n = float(np.exp(rng.uniform(math.log(10.0), math.log(1e12))))
        k = max(float(np.exp(rng.uniform(0.0, math.log(n)))), 1.0)
        nu = typical_max_load(n, k)
        worst = max(worst, abs(log_ball_count(nu, n) - math.log(k)))
        hat = typical_max_load(n)
        worst = max(worst, abs(log_bin_count(hat) - math.log(n)))
    inverse_err = max(
        abs(typical_max_load(math.exp(log_bin_count(x))) - x)
        for x in (2.0, 3.0, 5.0))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-10 and inverse_err <= 1e-9 and elapsed < 1
    announce(capsys, 3,
             ok,
             f"identity residual {worst:.2e} (budget 1e-10), "
             f"inversion error {inverse_err:.2e} (budget 1e-9)",
             elapsed)
    assert worst <= 1e-10
    assert inverse_err <= 1e-9
    assert elapsed < 1


def test_criterion_04_solver_growth_laws(capsys):
    start = time.perf_counter()
    rng = np.random.default_rng(MASTER)
    problems = []

    pairs = []
    for _ in range(100):
        n = float(np.exp(rng.uniform(math.log(10.0), math.log(1e12))))
        k = max(float(np.exp(rng.uniform(0.0, math.log(n)))), 1.0)
        pairs.append((n, k))
    if not all(typical_max_load(n, k) > 1.0 for n, k in pairs):
        problems.append("a crossing point at or below 1")

    sparse = typical_max_load(1e9, float(int(1e9 ** (1 / 3))))
    if not sparse <= 5 / 3 + 0.05:
        problems.append(f"cube-root ball count gives {sparse:.3f} > 1.717")

    if not all(typical_max_load(n, math.floor(k))
               < typical_max_load(n, math.floor(k) + 1)
               for n, k in pairs if k >= 1):
        problems.append("not strictly increasing in the ball count")

    drift = abs(typical_max_load(1e9, 1e9 + math.isqrt(10 ** 9))
                - typical_max_load(1e9))
    if not drift < 0.05:
        problems.append(f"root-of-n extra balls move the point by "
                        f"{drift:.3f} (budget 0.05)")

    chain = [typical_max_load(10.0 ** e) for e in range(1, 13)]
    if not all(a < b for a, b in zip(chain, chain[1:])):
        problems.append("balanced crossing point not strictly increasing")

    doubling = abs(typical_max_load(2e9) - typical_max_load(1e9))
    if not doubling < 0.05:
        problems.append(f"doubling n moves the balanced point by "
                        f"{doubling:.3f} (budget 0.05)")

    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 1
    announce(capsys, 4, ok,
             "growth laws hold" if ok else "; ".join(problems), elapsed)
    assert not problems, problems
    assert elapsed < 1


def test_criterion_05_balanced_bins_window(capsys):
    start = time.perf_counter()
    report = run_experiment(ExperimentConfig(
        kind="bins", n=200_000, k=200_000, epsilon=0.25, trials=200,
        master_seed=MASTER))
    elapsed = time.perf_counter() - start
    ok = report.hit_fraction >= 0.90 and elapsed < 60
    announce(capsys, 5, ok,
             f"max load in {list(report.interval)} in "
             f"{report.hit_fraction:.3f} of 200 trials (target 0.90)",
             elapsed)
    assert report.hit_fraction >= 0.90
    assert elapsed < 60


def test_criterion_06_prefix_load_gap(capsys):
    start = time.perf_counter()
    n = 100_000
    t = math.isqrt(n)
    k = n - t - 1
    trials = 200
    gaps = 0
    for i in range(trials):
        loads = throw_balls(n, k, trial_seed(MASTER, i))
        if max_load(loads) - prefix_max_load(loads, t) >= 1:
            gaps += 1
    fraction = gaps / trials
    elapsed = time.perf_counter() - start
    ok = fraction >= 0.90 and elapsed < 60
    announce(capsys, 6, ok,
             f"overall max exceeds first-{t} max in {fraction:.3f} "
             f"of 200 trials (target 0.90)", elapsed)
    assert fraction >= 0.90
    assert elapsed < 60


def test_criterion_07_sampler_exactness(capsys):
    start = time.perf_counter()
    tv_a = exact_census_gnm(3, 2, 100_000, trial_seed(MASTER, 0)).tv_distance
    tv_b = exact_census_gnm(4, 3, 100_000, trial_seed(MASTER, 1)).tv_distance
    rng = np.random.default_rng(trial_seed(MASTER, 2))
    n = 10_000
    simple = sum(sample_multigraph(n, n // 2, rng).is_simple()
                 for _ in range(10_000))
    acceptance = simple / 10_000
    floor = math.exp(-2)
    elapsed = time.perf_counter() - start
    ok = tv_a < 0.03 and tv_b < 0.03 and acceptance > floor and elapsed < 120
    announce(capsys, 7, ok,
             f"census distance {tv_a:.4f} and {tv_b:.4f} (budget 0.03), "
             f"simplicity rate {acceptance:.3f} (floor {floor:.3f})",
             elapsed)
    assert tv_a < 0.03
    assert tv_b < 0.03
    assert acceptance > floor
    assert elapsed < 120


def test_criterion_08_sparse_gnm_window(capsys):
    start = time.perf_counter()
    report = run_experiment(ExperimentConfig(
        kind="gnm", n=100_000, m=50_000, epsilon=0.25, trials=200,
        master_seed=MASTER))
    lo, hi = report.interval
    width = hi - lo + 1
    elapsed = time.perf_counter() - start
    ok = report.hit_fraction >= 0.90 and width <= 2 and elapsed < 120
    announce(capsys, 8, ok,
             f"max degree in {list(report.interval)} in "
             f"{report.hit_fraction:.3f} of 200 trials (target 0.90), "
             f"window spans {width} integers", elapsed)
    assert width <= 2
    assert report.hit_fraction >= 0.90
    assert elapsed < 120


def test_criterion_09_complex_free_window(capsys):
    start = time.perf_counter()
    report = run_experiment(ExperimentConfig(
        kind="cs", n=100_000, m=50_000, epsilon=0.25, trials=100,
        master_seed=MASTER))
    acceptance = report.extras["acceptanceFraction"]
    elapsed = time.perf_counter() - start
    ok = (report.hit_fraction >= 0.90 and acceptance >= 0.05
          and elapsed < 300)
    announce(capsys, 9, ok,
             f"max degree in {list(report.interval)} in "
             f"{report.hit_fraction:.3f} of 100 samples (target 0.90), "
             f"rejection acceptance {acceptance:.3f} (floor 0.05)",
             elapsed)
    assert acceptance >= 0.05
    assert report.hit_fraction >= 0.90
    assert elapsed < 300


def test_criterion_10_forest_degree_window(capsys):
    start = time.perf_counter()
    report = run_experiment(ExperimentConfig(
        kind="forest", n=100_000, t=10, epsilon=0.25, trials=200,
        master_seed=MASTER))
    root_gap = report.extras["rootGapFraction"]
    elapsed = time.perf_counter() - start
    ok = (report.hit_fraction >= 0.90 and root_gap >= 0.90
          and elapsed < 120)
    announce(capsys, 10, ok,
             f"max degree in {list(report.interval)} in "
             f"{report.hit_fraction:.3f} of 200 trials (target 0.90), "
             f"root gap in {root_gap:.3f}", elapsed)
    assert root_gap >= 0.90
    assert report.hit_fraction >= 0.90
    assert elapsed < 120


def test_criterion_11_grown_core_window(capsys):
    start = time.perf_counter()
    report = run_experiment(ExperimentConfig(
        kind="complex", core=LabeledGraph(4, K4), q=100_000, epsilon=0.25,
        trials=100, master_seed=MASTER))
    recovery = report.extras["coreRecoveryFraction"]
    identity = report.extras["degreeIdentityFraction"]
    elapsed = time.perf_counter() - start
    ok = (recovery == 1.0 and identity == 1.0
          and report.hit_fraction >= 0.90 and elapsed < 120)
    announce(capsys, 11, ok,
             f"core recovered in {recovery:.2f}, degrees exact in "
             f"{identity:.2f}, max degree in {list(report.interval)} in "
             f"{report.hit_fraction:.3f} of 100 trials (target 0.90)",
             elapsed)
    assert recovery == 1.0
    assert identity == 1.0
    assert report.hit_fraction >= 0.90
    assert elapsed < 120


def test_criterion_12_pipeline_conservation(capsys):
    start = time.perf_counter()
    n = 100_000

    size_a, edges_a = cubic_core(61)          # 122 vertices, 183 edges
    theta_a = [(size_a + 1, size_a + 3), (size_a + 3, size_a + 2),
               (size_a + 1, size_a + 4), (size_a + 4, size_a + 5),
               (size_a + 5, size_a + 2), (size_a + 1, size_a + 6),
               (size_a + 6, size_a + 7), (size_a + 7, size_a + 2)]
    core_a = LabeledGraph(size_a + 7, edges_a + theta_a)
    la, ra = 6000, 600
    ua = n - la - ra
    ma = ua // 2 + core_a.num_edges - core_a.n + la + ra
    cfg_a = ExperimentConfig(kind="pipeline", core=core_a, large_order=la,
                             small_order=ra, n=n, m=ma, trials=50,
                             master_seed=MASTER)
    report_a = run_experiment(cfg_a)

    size_b, edges_b = cubic_core(500)         # 1000 vertices, 1500 edges
    theta_b = [(size_b + 1, size_b + 3), (size_b + 3, size_b + 2),
               (size_b + 1, size_b + 4), (size_b + 4, size_b + 5),
               (size_b + 5, size_b + 2), (size_b + 1, size_b + 6),
               (size_b + 6, size_b + 7), (size_b + 7, size_b + 2)]
    core_b = LabeledGraph(size_b + 7, edges_b + theta_b)
    lb, rb = 38_400, 598
    ub = n - lb - rb
    mb = ub // 2 + core_b.num_edges - core_b.n + lb + rb
    cfg_b = ExperimentConfig(kind="pipeline", core=core_b, large_order=lb,
                             small_order=rb, n=n, m=mb, trials=50,
                             master_seed=MASTER)
    report_b = run_experiment(cfg_b)

    regimes = (report_a.extras["regime"], report_b.extras["regime"])
    conserved = (report_a.extras["conservationFraction"],
                 report_b.extras["conservationFraction"])
    orders = (report_a.extras["partOrdersFraction"],
              report_b.extras["partOrdersFraction"])
    elapsed = time.perf_counter() - start
    ok = (regimes == ("II", "III") and conserved == (1.0, 1.0)
          and orders == (1.0, 1.0) and elapsed < 180)
    announce(capsys, 12, ok,
             f"regimes {regimes[0]}/{regimes[1]}, totals exact in "
             f"{conserved[0]:.2f}/{conserved[1]:.2f}, part orders exact in "
             f"{orders[0]:.2f}/{orders[1]:.2f} over 50+50 draws", elapsed)
    assert regimes == ("II", "III")
    assert conserved == (1.0, 1.0)
    assert orders == (1.0, 1.0)
    assert elapsed < 180


def test_criterion_13_deterministic_reports(capsys):
    start = time.perf_counter()
    core = LabeledGraph(4, K4)
    configs = [
        ExperimentConfig(kind="nu", n=100_000),
        ExperimentConfig(kind="bins", n=500, k=500, trials=10,
                         master_seed=3),
        ExperimentConfig(kind="forest", n=400, t=2, trials=10,
                         master_seed=3),
        ExperimentConfig(kind="gnm", n=300, m=150, trials=10, master_seed=3),
        ExperimentConfig(kind="cs", n=300, m=150, trials=10, master_seed=3),
        ExperimentConfig(kind="complex", core=core, q=60, trials=10,
                         master_seed=3),
        ExperimentConfig(kind="pipeline", core=core, large_order=10,
                         small_order=0, n=60, m=37, trials=10,
                         master_seed=3),
        ExperimentConfig(kind="census", n=3, m=2, trials=50, master_seed=3),
    ]
    stable = 0
    for cfg in configs:
        first = emit_report(run_experiment(cfg), "json",
                            include_elapsed=False)
        second = emit_report(run_experiment(cfg), "json",
                             include_elapsed=False)
        if first == second:
            stable += 1
    elapsed = time.perf_counter() - start
    ok = stable == len(configs)
    announce(capsys, 13, ok,
             f"byte-identical reruns for {stable} of {len(configs)} "
             "experiment kinds", elapsed)
    assert stable == len(configs)
