"""Graph value types and the complex-part / core decomposition.

Vertices carry labels 1..n.  A connected component with v vertices and e
edges has excess e - v; it is a tree (excess -1), unicyclic (excess 0),
or complex (excess >= 1, equivalently at least two independent cycles).
The complex part of a graph is the union of its complex components.  The
core is the maximal subgraph of the complex part with minimum degree at
least two, obtained by repeatedly peeling vertices of degree <= 1.

Everything here is immutable after construction.  Subgraphs extracted by
complex_part / core_of / split keep their original vertex labels.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _cs_components

TREE = "tree"
UNICYCLIC = "unicyclic"
COMPLEX = "complex"


class GraphError(Exception):
    """A graph value violates one of its invariants."""


def _as_edge_array(edges) -> np.ndarray:
    if isinstance(edges, np.ndarray):
        arr = edges.astype(np.int64, copy=True)
    else:
        arr = np.array([(int(u), int(v)) for u, v in edges], dtype=np.int64)
    if arr.size == 0:
        return np.empty((0, 2), dtype=np.int64)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise GraphError("edges must be a sequence of pairs")
    return arr


def _canonical_edges(n: int, edges, *, allow_loops: bool, allow_multi: bool) -> np.ndarray:
    """Validate endpoints and return edges as a lexsorted (m, 2) array."""
    arr = _as_edge_array(edges)
    if arr.size:
        if arr.min() < 1 or arr.max() > n:
            raise GraphError("edge endpoint outside 1..n")
        u = np.minimum(arr[:, 0], arr[:, 1])
        v = np.maximum(arr[:, 0], arr[:, 1])
        if not allow_loops and (u == v).any():
            raise GraphError("self-loop not allowed in a simple graph")
        order = np.lexsort((v, u))
        u, v = u[order], v[order]
        if not allow_multi and len(u) > 1:
            dup = (u[1:] == u[:-1]) & (v[1:] == v[:-1])
            if dup.any():
                raise GraphError("duplicate edge not allowed in a simple graph")
        arr = np.column_stack((u, v))
    arr.setflags(write=False)
    return arr


class LabeledGraph:
    """Simple undirected graph on vertex set {1..n}."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges=()):
        n = int(n)
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        self.n = n
        self.edges = _canonical_edges(n, edges, allow_loops=False, allow_multi=False)

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    def degree_sequence(self) -> np.ndarray:
        """Degree of vertex v at index v - 1."""
        return np.bincount(self.edges.ravel(), minlength=self.n + 1)[1:]

    def max_degree(self) -> int:
        if self.num_edges == 0:
            return 0
        return int(self.degree_sequence().max())

    def edge_set(self) -> set[tuple[int, int]]:
        return {(int(u), int(v)) for u, v in self.edges}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LabeledGraph)
            and self.n == other.n
            and np.array_equal(self.edges, other.edges)
        )

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self.n}, m={self.num_edges})"


class MultiGraph:
    """Undirected multigraph on {1..n}; loops and repeated edges allowed."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges=()):
        n = int(n)
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        self.n = n
        self.edges = _canonical_edges(n, edges, allow_loops=True, allow_multi=True)

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    def degree_sequence(self) -> np.ndarray:
        """Degrees; a loop at v contributes 2 to the degree of v."""
        return np.bincount(self.edges.ravel(), minlength=self.n + 1)[1:]

    def max_degree(self) -> int:
        if self.num_edges == 0:
            return 0
        return int(self.degree_sequence().max())

    def is_simple(self) -> bool:
        e = self.edges
        if e.shape[0] == 0:
            return True
        if (e[:, 0] == e[:, 1]).any():
            return False
        if e.shape[0] > 1:
            dup = (e[1:, 0] == e[:-1, 0]) & (e[1:, 1] == e[:-1, 1])
            if dup.any():
                return False
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiGraph)
            and self.n == other.n
            and np.array_equal(self.edges, other.edges)
        )

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.num_edges})"


class GraphSlice:
    """A subgraph extracted from a host graph, original labels kept."""

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices, edges=()):
        verts = np.unique(np.asarray(list(vertices), dtype=np.int64))
        if verts.size and verts[0] < 1:
            raise GraphError("slice vertex labels must be positive")
        arr = _as_edge_array(edges)
        if arr.size:
            u = np.minimum(arr[:, 0], arr[:, 1])
            v = np.maximum(arr[:, 0], arr[:, 1])
            if not (np.isin(u, verts).all() and np.isin(v, verts).all()):
                raise GraphError("slice edge endpoint outside the slice")
            order = np.lexsort((v, u))
            arr = np.column_stack((u[order], v[order]))
        verts.setflags(write=False)
        arr.setflags(write=False)
        self.vertices = verts
        self.edges = arr

    @property
    def order(self) -> int:
        return int(self.vertices.size)

    @property
    def size(self) -> int:
        return int(self.edges.shape[0])

    @property
    def is_empty(self) -> bool:
        return self.vertices.size == 0

    def vertex_set(self) -> set[int]:
        return set(int(v) for v in self.vertices)

    def edge_set(self) -> set[tuple[int, int]]:
        return {(int(u), int(v)) for u, v in self.edges}

    def degree_sequence(self) -> np.ndarray:
        """Degrees within the slice, aligned with .vertices."""
        if self.order == 0:
            return np.zeros(0, dtype=np.int64)
        hi = int(self.vertices.max())
        counts = np.bincount(self.edges.ravel(), minlength=hi + 1)
        return counts[self.vertices]

    def max_degree(self) -> int:
        if self.size == 0:
            return 0
        return int(self.degree_sequence().max())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GraphSlice)
            and np.array_equal(self.vertices, other.vertices)
            and np.array_equal(self.edges, other.edges)
        )

    def __repr__(self) -> str:
        return f"GraphSlice(order={self.order}, size={self.size})"


@dataclass(frozen=True)
class Decomposition:
    """Three-way split plus the core of the complex part.

    large_complex is the complex component containing the largest core
    component (ties broken toward the component holding the smallest
    vertex label); small_complex is the rest of the complex part;
    non_complex is everything else.  The three slices partition both the
    vertex set and the edge set of the input.
    """

    large_complex: GraphSlice
    small_complex: GraphSlice
    non_complex: GraphSlice
    core: GraphSlice
    core_largest_component: np.ndarray


def _component_labels(n: int, edges: np.ndarray) -> np.ndarray:
    """0-based component label per vertex, numbered by smallest member."""
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    if edges.shape[0] == 0:
        return np.arange(n, dtype=np.int64)
    u = edges[:, 0] - 1
    v = edges[:, 1] - 1
    data = np.ones(len(u), dtype=np.int8)
    adj = coo_matrix((data, (u, v)), shape=(n, n))
    ncomp, raw = _cs_components(adj, directed=False)
    # renumber so that component ids increase with their smallest vertex
    _, first_pos = np.unique(raw, return_index=True)
    perm = np.argsort(first_pos, kind="stable")
    remap = np.empty(ncomp, dtype=np.int64)
    remap[perm] = np.arange(ncomp)
    return remap[raw]


def _component_stats(n: int, edges: np.ndarray):
    labels = _component_labels(n, edges)
    ncomp = int(labels.max()) + 1 if n else 0
    vcounts = np.bincount(labels, minlength=ncomp)
    if edges.shape[0]:
        ecounts = np.bincount(labels[edges[:, 0] - 1], minlength=ncomp)
    else:
        ecounts = np.zeros(ncomp, dtype=np.int64)
    return labels, vcounts, ecounts


def components(g: LabeledGraph) -> list[tuple[np.ndarray, int]]:
    """Connected components as (sorted vertex labels, edge count) pairs.

    Components are listed in order of their smallest vertex label.
    """
    labels, _, ecounts = _component_stats(g.n, g.edges)
    if g.n == 0:
        return []
    order = np.argsort(labels, kind="stable")
    bounds = np.flatnonzero(np.diff(labels[order])) + 1
    groups = np.split(order + 1, bounds)
    return [(grp, int(ecounts[i])) for i, grp in enumerate(groups)]


def classify_component(vertex_count: int, edge_count: int) -> str:
    """Classify a connected component by its excess edge_count - vertex_count."""
    if edge_count < vertex_count - 1:
        raise GraphError("not a connected component: too few edges")
    excess = edge_count - vertex_count
    if excess == -1:
        return TREE
    if excess == 0:
        return UNICYCLIC
    return COMPLEX


def _complex_mask(g: LabeledGraph):
    """Per-vertex and per-edge masks selecting the complex part."""
    labels, vcounts, ecounts = _component_stats(g.n, g.edges)
    complex_comp = ecounts >= vcounts + 1
    vmask = complex_comp[labels] if g.n else np.zeros(0, dtype=bool)
    if g.edges.shape[0]:
        emask = complex_comp[labels[g.edges[:, 0] - 1]]
    else:
        emask = np.zeros(0, dtype=bool)
    return labels, vmask, emask


def has_complex_component(g: LabeledGraph) -> bool:
    _, vcounts, ecounts = _component_stats(g.n, g.edges)
    return bool((ecounts >= vcounts + 1).any())


def complex_part(g: LabeledGraph) -> GraphSlice:
    """Union of all components with excess >= 1, labels preserved."""
    _, vmask, emask = _complex_mask(g)
    return GraphSlice(np.flatnonzero(vmask) + 1, g.edges[emask])


def _peel_to_core(part: GraphSlice) -> GraphSlice:
    """Worklist peel of degree <= 1 vertices; O(order + size)."""
    if part.is_empty or part.size == 0:
        return GraphSlice([], [])
    hi = int(part.vertices.max())
    deg = np.bincount(part.edges.ravel(), minlength=hi + 1)
    # flat adjacency in CSR form over labels 0..hi
    src = np.concatenate((part.edges[:, 0], part.edges[:, 1]))
    dst = np.concatenate((part.edges[:, 1], part.edges[:, 0]))
    order = np.argsort(src, kind="stable")
    neighbors = dst[order].tolist()
    indptr = np.zeros(hi + 2, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=hi + 1), out=indptr[1:])
    indptr = indptr.tolist()
    degl = deg.tolist()

    alive = np.zeros(hi + 1, dtype=bool)
    alive[part.vertices] = True
    alive_l = alive.tolist()

    stack = [int(v) for v in part.vertices if degl[v] <= 1]
    while stack:
        y = stack.pop()
        if not alive_l[y] or degl[y] >= 2:
            continue
        alive_l[y] = False
        for w in neighbors[indptr[y]:indptr[y + 1]]:
            if alive_l[w]:
                degl[w] -= 1
                if degl[w] == 1:
                    stack.append(w)
    alive = np.asarray(alive_l)
    keep = alive[part.edges[:, 0]] & alive[part.edges[:, 1]]
    return GraphSlice(np.flatnonzero(alive), part.edges[keep])


def core_of(g: LabeledGraph) -> GraphSlice:
    """Maximal subgraph of the complex part with minimum degree >= 2."""
    return _peel_to_core(complex_part(g))


def split(g: LabeledGraph) -> Decomposition:
    """Three-way decomposition (large complex, small complex, rest) + core."""
    labels, vmask, emask = _complex_mask(g)
    cpart = GraphSlice(np.flatnonzero(vmask) + 1, g.edges[emask])
    core = _peel_to_core(cpart)

    if core.is_empty:
        empty = GraphSlice([], [])
        non_complex = GraphSlice(np.arange(1, g.n + 1), g.edges)
        return Decomposition(empty, empty, non_complex, core,
                             np.zeros(0, dtype=np.int64))

    # group core vertices by their component within the core
    core_labels = _component_labels(int(core.vertices.max()), core.edges)
    piece_of = core_labels[core.vertices - 1]
    order = np.argsort(piece_of, kind="stable")
    bounds = np.flatnonzero(np.diff(piece_of[order])) + 1
    pieces = np.split(core.vertices[order], bounds)
    # largest piece wins; ties go to the piece with the smallest label
    best = max(pieces, key=lambda p: (p.size, -int(p.min())))

    large_id = labels[int(best[0]) - 1]
    in_large_v = vmask & (labels == large_id)
    vert_ids = labels[g.edges[:, 0] - 1] if g.edges.shape[0] else labels[:0]
    in_large_e = emask & (vert_ids == large_id)

    large = GraphSlice(np.flatnonzero(in_large_v) + 1, g.edges[in_large_e])
    small = GraphSlice(np.flatnonzero(vmask & ~in_large_v) + 1,
                       g.edges[emask & ~in_large_e])
    rest = GraphSlice(np.flatnonzero(~vmask) + 1, g.edges[~emask])
    return Decomposition(large, small, rest, core, best)
