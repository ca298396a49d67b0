"""
Seeded experiments and machine-readable reports
===============================================

Every experiment derives one seed per trial from a master seed, so a
report names everything needed to replay any single trial.  The same
reports are available from the command line, e.g.

    degree-lab forest --n 20000 --t 10 --trials 100 --seed 7
    degree-lab nu --n 1e6 --format json
    degree-lab decompose graph.txt

Exit status: 0 for a pass verdict, 1 for fail, 2 for usage errors.
"""
import json

from degree_lab import ExperimentConfig, emit_report, run_experiment, trial_seed

cfg = ExperimentConfig(kind="forest", n=20_000, t=10, trials=100,
                       master_seed=7)
report = run_experiment(cfg)

# the window is asymptotic; at desk scale the realized maxima run a
# fraction below it, so the strict 90% gate often reports fail even
# though the histogram hugs the predicted pair (see README)
print(f"kind={report.kind}  verdict={report.verdict}  "
      f"hit fraction={report.hit_fraction:.2f}")
print(f"predicted window: {report.interval}, histogram of maxima: "
      f"{dict(sorted(report.histogram.items()))}")
print("first trial seed:", report.trial_seeds[0],
      "== trial_seed(7, 0):", report.trial_seeds[0] == trial_seed(7, 0))

# reports serialize to JSON (full document) or CSV (one row per trial);
# with timing stripped a rerun is byte-for-byte identical
doc = json.loads(emit_report(report))
print("\nJSON keys:", ", ".join(doc))
again = run_experiment(cfg)
same = (emit_report(report, include_elapsed=False)
        == emit_report(again, include_elapsed=False))
print("rerun with the same master seed is byte-identical:", same)

csv_rows = emit_report(report, "csv").decode().splitlines()
print("\nCSV head:")
for row in csv_rows[:4]:
    print(" ", row)

# a sampler uniformity check, by contrast, passes comfortably: compare
# empirical frequencies of every 3-vertex 2-edge graph against uniform
census = run_experiment(ExperimentConfig(kind="census", n=3, m=2,
                                         trials=20_000, master_seed=7))
print(f"\ncensus verdict: {census.verdict} "
      f"(tv distance {census.extras['tvDistance']:.4f} over "
      f"{census.extras['graphCount']} graphs)")
