"""
Assembling a sparse graph from complex and non-complex parts
============================================================

A graph decomposes into its complex part (components carrying at least
two independent cycles), whose shape is pinned down by a core with all
degrees >= 2, and a complex-free rest.  The pipeline runs the other
way: prescribe the core, choose how many vertices each part gets, and
sample the rest uniformly.  Splitting the result recovers the parts.
"""
from degree_lab import (LabeledGraph, PipelineSpec, core_of, max_load,
                        sample_complex, sample_pipeline, split)

# the core: one two-hub component on 7 vertices and one K4, so the
# complex part has two components of different sizes
theta = [(1, 2), (1, 3), (3, 2), (1, 4), (4, 5), (5, 2), (1, 6), (6, 7),
         (7, 2)]
k4 = [(u + 7, v + 7) for u, v in
      [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]]
core = LabeledGraph(11, theta + k4)

spec = PipelineSpec(core=core, large_order=40, small_order=15, n=150, m=100)
g = sample_pipeline(spec, rng=2026)
print(f"pipeline output: {g.n} vertices, {g.num_edges} edges "
      f"(asked for n={spec.n}, m={spec.m})")
print("max degree:", max_load(g.degree_sequence()))

parts = split(g)
print("\nthree-way split")
print(f"  large complex part: {parts.large_complex.order} vertices, "
      f"{parts.large_complex.size} edges")
print(f"  small complex part: {parts.small_complex.order} vertices, "
      f"{parts.small_complex.size} edges")
print(f"  non-complex rest:   {parts.non_complex.order} vertices, "
      f"{parts.non_complex.size} edges")
print(f"  recovered core:     {parts.core.order} vertices, "
      f"{parts.core.size} edges (prescribed: {core.n}, {core.num_edges})")

# a single complex component grown from one core: attach a uniform
# rooted forest to K4 and peel it back off
k4_alone = LabeledGraph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
big = sample_complex(k4_alone, 5000, rng=5)
print(f"\nK4 grown to {big.n} vertices: max degree "
      f"{max_load(big.degree_sequence())}, "
      f"core recovered: {core_of(big).edge_set() == k4_alone.edge_set()}")
