"""degree_lab: concentration of maximum loads and maximum degrees.

A small laboratory for the near-critical behaviour of sparse random
graphs: balls-into-bins load statistics, the typical-maximum-load
function and its two-point degree windows, uniform samplers for rooted
forests, G(n,m), complex-free graphs and complex graphs with prescribed
cores, the three-way complex/non-complex decomposition, and a seeded
Monte Carlo experiment harness with JSON/CSV reports.
"""

from .bins import (census, expected_census, loads_from_positions, max_load,
                   prefix_max_load, throw_balls, throw_positions)
from .concentration import (OUT_OF_SCOPE, REGIME_ABOVE, REGIME_BELOW,
                            REGIME_WINDOW, TwoPointPrediction, classify_regime,
                            load_objective, log_ball_count, log_bin_count,
                            predicted_interval, two_point_prediction,
                            typical_max_load)
from .edgelist import format_edge_list, read_edge_list, write_edge_list
from .experiments import (ConcentrationReport, ExperimentConfig, emit_report,
                          run_experiment)
from .forests import (RootedForest, decode_sequence, degrees_from_sequence,
                      encode_forest, forest_count, sample_forest,
                      sample_forest_degrees)
from .graphs import (COMPLEX, TREE, UNICYCLIC, Decomposition, GraphError,
                     GraphSlice, LabeledGraph, MultiGraph, classify_component,
                     complex_part, components, core_of, has_complex_component,
                     split)
from .samplers import (PipelineSpec, SamplingCapExceeded, UniformityReport,
                       enumerate_gnm, exact_census_gnm, sample_complex,
                       sample_complex_degrees, sample_cs, sample_cs_counted,
                       sample_gnm, sample_gnm_counted, sample_multigraph,
                       sample_pipeline, validate_core_graph)
from .seeding import trial_seed

__version__ = "0.1.0"

__all__ = [
    "COMPLEX", "TREE", "UNICYCLIC", "OUT_OF_SCOPE", "REGIME_ABOVE",
    "REGIME_BELOW", "REGIME_WINDOW",
    "ConcentrationReport", "Decomposition", "ExperimentConfig", "GraphError",
    "GraphSlice", "LabeledGraph", "MultiGraph", "PipelineSpec", "RootedForest",
    "SamplingCapExceeded", "TwoPointPrediction", "UniformityReport",
    "census", "classify_component", "classify_regime", "complex_part",
    "components", "core_of", "decode_sequence", "degrees_from_sequence",
    "emit_report", "encode_forest", "enumerate_gnm", "exact_census_gnm",
    "expected_census", "forest_count", "format_edge_list",
    "has_complex_component", "load_objective", "loads_from_positions",
    "log_ball_count", "log_bin_count", "max_load", "predicted_interval",
    "prefix_max_load", "read_edge_list", "run_experiment", "sample_complex",
    "sample_complex_degrees", "sample_cs", "sample_cs_counted",
    "sample_forest", "sample_forest_degrees", "sample_gnm",
    "sample_gnm_counted", "sample_multigraph", "sample_pipeline", "split",
    "throw_balls", "throw_positions", "trial_seed", "two_point_prediction",
    "typical_max_load", "validate_core_graph", "write_edge_list",
]
