"""Uniform samplers for sparse random graph families.

Four samplers, each exactly uniform over its target class:

  sample_multigraph  pairing model: 2m ball throws paired into m edges
  sample_gnm         simple graphs with m edges, by rejecting non-simple
                     multigraphs (uniform conditioned on simplicity)
  sample_cs          graphs whose components are all trees or unicyclic,
                     by rejecting G(n,m) draws with a complex component
  sample_complex     complex graphs with a prescribed core, by attaching
                     a uniform rooted forest to the core vertices

plus sample_pipeline, which assembles a full n-vertex, m-edge graph from
a core by drawing its large complex part, small complex part and
complex-free remainder on consecutive label blocks, and
exact_census_gnm, a brute-force uniformity check for sample_gnm.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .bins import throw_positions
from .forests import sample_forest, sample_forest_degrees
from .graphs import (GraphError, GraphSlice, LabeledGraph, MultiGraph,
                     _component_stats, has_complex_component)

DEFAULT_GNM_CAP = 10_000
DEFAULT_CS_CAP = 100_000


class SamplingCapExceeded(RuntimeError):
    """A rejection loop hit its attempt cap."""


def _draw_pairing(n: int, m: int, rng) -> tuple[np.ndarray, np.ndarray]:
    """One pairing draw: m edges as (lo, hi) endpoint arrays."""
    positions = throw_positions(n, 2 * m, rng)
    a = positions[0::2]
    b = positions[1::2]
    return np.minimum(a, b), np.maximum(a, b)


def _pairing_is_simple(n: int, u: np.ndarray, v: np.ndarray) -> bool:
    if u.size == 0:
        return True
    if (u == v).any():
        return False
    key = u * np.int64(n + 1) + v
    key.sort()
    return not (key[1:] == key[:-1]).any()


def sample_multigraph(n: int, m: int, rng=None) -> MultiGraph:
    """Pairing-model multigraph: edge i joins ball 2i-1 and ball 2i.

    The degree of vertex v equals the load of bin v in the underlying
    2m-ball throw, so with equal seeds the degree sequence matches
    throw_balls(n, 2 * m, seed).
    """
    n = int(n)
    m = int(m)
    if n < 1:
        raise ValueError("need at least one vertex")
    if m < 0:
        raise ValueError("edge count must be non-negative")
    rng = np.random.default_rng(rng)
    u, v = _draw_pairing(n, m, rng)
    return MultiGraph(n, np.column_stack((u, v)))


def sample_gnm_counted(n: int, m: int, rng=None, *,
                       max_attempts: int = DEFAULT_GNM_CAP
                       ) -> tuple[LabeledGraph, int]:
    """Uniform simple graph with m edges, plus the attempt count.

    Repeats the pairing draw until it is simple.  Conditioned on
    simplicity the pairing model is uniform, so the output is exactly
    uniform over simple graphs on {1..n} with m edges.
    """
    n = int(n)
    m = int(m)
    if n < 1:
        raise ValueError("need at least one vertex")
    if not 0 <= m <= comb(n, 2):
        raise ValueError("edge count out of range for a simple graph")
    rng = np.random.default_rng(rng)
    for attempt in range(1, max_attempts + 1):
        u, v = _draw_pairing(n, m, rng)
        if _pairing_is_simple(n, u, v):
            return LabeledGraph(n, np.column_stack((u, v))), attempt
    raise SamplingCapExceeded(
        f"no simple pairing in {max_attempts} attempts at n={n}, m={m}")


def sample_gnm(n: int, m: int, rng=None, *,
               max_attempts: int = DEFAULT_GNM_CAP) -> LabeledGraph:
    return sample_gnm_counted(n, m, rng, max_attempts=max_attempts)[0]


def sample_cs_counted(n: int, m: int, rng=None, *,
                      max_attempts: int = DEFAULT_CS_CAP,
                      gnm_attempts: int = DEFAULT_GNM_CAP
                      ) -> tuple[LabeledGraph, int]:
    """Uniform complex-free graph, plus the number of G(n,m) draws used.

    Rejects uniform G(n,m) draws until none of the components carries
    excess, which keeps the output exactly uniform over the complex-free
    class.  Feasible complex-free graphs need m <= n; the loop is only
    fast for m near n/2 or below.
    """
    n = int(n)
    m = int(m)
    if m > n:
        raise ValueError("a complex-free graph has at most n edges")
    rng = np.random.default_rng(rng)
    for attempt in range(1, max_attempts + 1):
        g, _ = sample_gnm_counted(n, m, rng, max_attempts=gnm_attempts)
        if not has_complex_component(g):
            return g, attempt
    raise SamplingCapExceeded(
        f"no complex-free draw in {max_attempts} attempts at n={n}, m={m}")


def sample_cs(n: int, m: int, rng=None, *,
              max_attempts: int = DEFAULT_CS_CAP) -> LabeledGraph:
    return sample_cs_counted(n, m, rng, max_attempts=max_attempts)[0]


def validate_core_graph(g: LabeledGraph) -> None:
    """Check that g can occur as the core of a complex part.

    Cores of complex parts have every vertex of degree at least two and
    every component of excess at least one; peeling changes neither the
    excess nor the component count, and a unicyclic piece would not be
    complex to begin with.  Raises GraphError otherwise.
    """
    if g.n == 0:
        return
    if g.num_edges == 0 or g.degree_sequence().min() < 2:
        raise GraphError("core graph needs minimum degree 2")
    _, vcounts, ecounts = _component_stats(g.n, g.edges)
    if (ecounts < vcounts + 1).any():
        raise GraphError("every core component needs excess >= 1")


def sample_complex(core: LabeledGraph, q: int, rng=None, *,
                   return_forest: bool = False):
    """Uniform complex graph on {1..q} whose core is the given graph.

    Draws a uniform rooted forest on q vertices with the core vertices
    1..v(core) as roots and unions its edges with the core edges, which
    amounts to growing a tree out of every core vertex.  Roots lie in
    distinct trees, so no forest edge can duplicate a core edge.  For
    each vertex the degree is the forest degree, plus the core degree
    for core vertices.  With return_forest=True the intermediate forest
    comes back alongside the graph.
    """
    validate_core_graph(core)
    if core.n == 0:
        raise ValueError("core must be non-empty")
    q = int(q)
    if q < core.n:
        raise ValueError("q must be at least the core order")
    forest = sample_forest(q, core.n, rng)
    edges = np.vstack((core.edges, forest.edges))
    g = LabeledGraph(q, edges)
    if return_forest:
        return g, forest
    return g


def sample_complex_degrees(core: LabeledGraph, q: int, rng=None) -> np.ndarray:
    """Degree sequence of sample_complex without building the graph.

    Stream-compatible: equals sample_complex(core, q, seed) degrees for
    the same seed.
    """
    validate_core_graph(core)
    if core.n == 0:
        raise ValueError("core must be non-empty")
    q = int(q)
    if q < core.n:
        raise ValueError("q must be at least the core order")
    deg = sample_forest_degrees(q, core.n, rng)
    deg[:core.n] += core.degree_sequence()
    return deg


def _relabel_to_prefix(vertices: np.ndarray, edges: np.ndarray) -> LabeledGraph:
    """Order-preserving relabeling of a slice onto {1..order}."""
    new = np.searchsorted(vertices, edges) + 1 if edges.size else edges
    return LabeledGraph(vertices.size, new)


def _core_components(core: LabeledGraph) -> tuple[GraphSlice, GraphSlice]:
    """Split a core into its largest component and the rest.

    Largest by vertex count; ties go to the component holding the
    smallest label.
    """
    labels, vcounts, _ = _component_stats(core.n, core.edges)
    best = int(np.argmax(vcounts))  # argmax takes the first, ids rise with min label
    vmask = labels == best
    emask = vmask[core.edges[:, 0] - 1] if core.edges.size else np.zeros(0, bool)
    large = GraphSlice(np.flatnonzero(vmask) + 1, core.edges[emask])
    rest = GraphSlice(np.flatnonzero(~vmask) + 1, core.edges[~emask])
    return large, rest


@dataclass(frozen=True)
class PipelineSpec:
    """Shape of a pipeline draw: core plus part orders and totals.

    The large complex part gets large_order vertices and hosts the
    core's largest component; the small complex part gets small_order
    vertices and hosts the remaining core components; the complex-free
    remainder gets the other spare_order vertices and spare_edges edges,
    chosen so that the whole graph has exactly m edges.
    """

    core: LabeledGraph
    large_order: int
    small_order: int
    n: int
    m: int
    _parts: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        validate_core_graph(self.core)
        if self.core.n == 0:
            large = rest = GraphSlice([], [])
        else:
            large, rest = _core_components(self.core)
        if self.large_order < large.order:
            raise ValueError("large_order smaller than the largest core component")
        if self.small_order < rest.order:
            raise ValueError("small_order smaller than the rest of the core")
        if (self.large_order > 0) != (large.order > 0):
            raise ValueError("large_order must be zero iff the core is empty")
        if (self.small_order > 0) != (rest.order > 0):
            raise ValueError("small_order must be zero iff the core has one component")
        if self.spare_order < 0:
            raise ValueError("part orders exceed n")
        if self.spare_edges < 0:
            raise ValueError("edge budget of the complex-free part is negative")
        if self.spare_edges > self.spare_order:
            raise ValueError("complex-free part cannot hold that many edges")
        object.__setattr__(self, "_parts", (large, rest))

    @property
    def spare_order(self) -> int:
        return self.n - self.large_order - self.small_order

    @property
    def spare_edges(self) -> int:
        return (self.m - self.core.num_edges + self.core.n
                - self.large_order - self.small_order)


def sample_pipeline(spec: PipelineSpec, rng=None, *,
                    shuffle_labels: bool = False,
                    cs_attempts: int = DEFAULT_CS_CAP,
                    gnm_attempts: int = DEFAULT_GNM_CAP) -> LabeledGraph:
    """Assemble a uniform-by-parts graph with n vertices and m edges.

    Draws, in order: the large complex part on labels {1..l}, the small
    complex part on {l+1..l+r}, and the complex-free remainder on
    {l+r+1..n}, where l and r are the requested part orders.  Core
    vertices map onto the low labels of their block in increasing
    order.  With shuffle_labels=True a uniform label permutation is
    applied at the end (drawn from the same generator, after the parts).
    """
    rng = np.random.default_rng(rng)
    large, rest = spec._parts
    l = spec.large_order
    r = spec.small_order
    blocks = []
    if l:
        core_l = _relabel_to_prefix(large.vertices, large.edges)
        blocks.append(sample_complex(core_l, l, rng).edges)
    if r:
        core_r = _relabel_to_prefix(rest.vertices, rest.edges)
        blocks.append(sample_complex(core_r, r, rng).edges + l)
    if spec.spare_order:
        spare = sample_cs(spec.spare_order, spec.spare_edges, rng,
                          max_attempts=cs_attempts)
        blocks.append(spare.edges + (l + r))
    edges = np.vstack(blocks) if blocks else np.empty((0, 2), dtype=np.int64)
    if shuffle_labels:
        perm = np.empty(spec.n + 1, dtype=np.int64)
        perm[1:] = rng.permutation(spec.n) + 1
        edges = perm[edges]
    return LabeledGraph(spec.n, edges)


@dataclass(frozen=True)
class UniformityReport:
    """Empirical-versus-uniform comparison over an enumerated class."""

    graph_count: int
    trials: int
    tv_distance: float
    chi_square: float | None
    insufficient_samples: bool
    counts: tuple[int, ...]


def enumerate_gnm(n: int, m: int, *, cap: int = 10_000) -> list[LabeledGraph]:
    """All simple graphs on {1..n} with m edges, in lexicographic order."""
    n = int(n)
    m = int(m)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    total = comb(len(pairs), m)
    if total > cap:
        raise ValueError(f"{total} graphs is too many to enumerate")
    return [LabeledGraph(n, subset)
            for subset in itertools.combinations(pairs, m)]


def exact_census_gnm(n: int, m: int, trials: int, rng=None, *,
                     cap: int = 10_000,
                     gnm_attempts: int = DEFAULT_GNM_CAP) -> UniformityReport:
    """Compare sample_gnm against brute-force enumeration.

    Draws `trials` samples, counts how often each enumerated graph
    appears, and reports the total-variation distance to uniform plus a
    chi-square statistic.  With trials = 0 the report carries the
    degenerate distance 1 - 1/graph_count and flags itself; the flag
    also trips whenever trials < graph_count.
    """
    graphs = enumerate_gnm(n, m, cap=cap)
    total = len(graphs)
    index = {g.edges.tobytes(): i for i, g in enumerate(graphs)}
    trials = int(trials)
    if trials < 0:
        raise ValueError("trials must be non-negative")
    rng = np.random.default_rng(rng)
    counts = [0] * total
    for _ in range(trials):
        g, _ = sample_gnm_counted(n, m, rng, max_attempts=gnm_attempts)
        counts[index[g.edges.tobytes()]] += 1
    if trials == 0:
        return UniformityReport(total, 0, 1.0 - 1.0 / total, None, True,
                                tuple(counts))
    uniform = 1.0 / total
    tv = 0.5 * sum(abs(c / trials - uniform) for c in counts)
    expected = trials / total
    chi = sum((c - expected) ** 2 / expected for c in counts)
    return UniformityReport(total, trials, tv, chi, trials < total,
                            tuple(counts))
