"""Graph homology over GF(2) and the evaluation pairing.

A 1-chain over GF(2) is nothing but its support, a set of edge indices,
and likewise for 0-chains and for cochains; addition is symmetric
difference.  The four wrapper types below pin the support to a specific
graph and keep the chain/cochain roles apart, because the pairing reads
one argument as a function on edges and the other as a formal sum of
edges even though both are edge sets under the hood.

The boundary of an edge is the sum of its endpoints, so loops die, and a
1-chain is a cycle exactly when every vertex meets an even number of its
non-loop support edges.  The coboundary of a vertex function marks the
edges whose endpoints get different values.  The pairing of a cocycle
with a cycle is the parity of their common support; on the canonical
bases hung off a spanning forest its Gram matrix is the identity, which
is the perfect-pairing statement this module exposes for testing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .graphs import EdgeSubset, MultiGraph
from .linalg import GF2Matrix

__all__ = [
    "Chain0",
    "Chain1",
    "Cochain0",
    "Cochain1",
    "HomologyBasis",
    "decompose_cycles",
    "graph_pairing",
    "homology_basis",
    "is_perfect_pairing",
    "is_simple_cycle",
    "pairing_gram",
]


def _check_edges(graph: MultiGraph, edges: frozenset) -> frozenset:
    edges = frozenset(int(e) for e in edges)
    for e in edges:
        if not (0 <= e < graph.edge_count):
            raise ValueError(f"edge index {e} out of range")
    return edges


def _check_vertices(graph: MultiGraph, vertices: frozenset) -> frozenset:
    vertices = frozenset(int(v) for v in vertices)
    for v in vertices:
        if not (0 <= v < graph.vertex_count):
            raise ValueError(f"vertex index {v} out of range")
    return vertices


@dataclass(frozen=True)
class Chain1:
    """GF(2) 1-chain: a formal sum of edges, stored as its support."""

    graph: MultiGraph
    edges: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", _check_edges(self.graph, self.edges))

    def __xor__(self, other: "Chain1") -> "Chain1":
        if self.graph != other.graph:
            raise ValueError("chains live on different graphs")
        return Chain1(self.graph, self.edges ^ other.edges)

    def boundary(self) -> "Chain0":
        """Sum of endpoints over GF(2); loops contribute nothing."""
        odd: set[int] = set()
        for e in self.edges:
            u, v = self.graph.edges[e]
            if u == v:
                continue
            odd ^= {u, v}
        return Chain0(self.graph, frozenset(odd))

    def is_cycle(self) -> bool:
        return not self.boundary().vertices


@dataclass(frozen=True)
class Chain0:
    """GF(2) 0-chain: a formal sum of vertices."""

    graph: MultiGraph
    vertices: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", _check_vertices(self.graph, self.vertices))

    def __xor__(self, other: "Chain0") -> "Chain0":
        if self.graph != other.graph:
            raise ValueError("chains live on different graphs")
        return Chain0(self.graph, self.vertices ^ other.vertices)


@dataclass(frozen=True)
class Cochain0:
    """GF(2) vertex function, stored as the set where it equals one."""

    graph: MultiGraph
    vertices: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", _check_vertices(self.graph, self.vertices))

    def __xor__(self, other: "Cochain0") -> "Cochain0":
        if self.graph != other.graph:
            raise ValueError("cochains live on different graphs")
        return Cochain0(self.graph, self.vertices ^ other.vertices)

    def coboundary(self) -> "Cochain1":
        """Edges whose two endpoints get different values.  Loops never do."""
        marked = [
            e
            for e, (u, v) in enumerate(self.graph.edges)
            if (u in self.vertices) != (v in self.vertices)
        ]
        return Cochain1(self.graph, frozenset(marked))


@dataclass(frozen=True)
class Cochain1:
    """GF(2) edge function, stored as the set where it equals one."""

    graph: MultiGraph
    edges: frozenset

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", _check_edges(self.graph, self.edges))

    def __xor__(self, other: "Cochain1") -> "Cochain1":
        if self.graph != other.graph:
            raise ValueError("cochains live on different graphs")
        return Cochain1(self.graph, self.edges ^ other.edges)

    def __call__(self, e: int) -> int:
        return int(e in self.edges)


def graph_pairing(gamma: Cochain1, alpha: Chain1) -> int:
    """Evaluate the cochain on the cycle: parity of the common support.

    ``alpha`` must be a cycle (lie in the kernel of the boundary); the
    pairing is only well defined on homology against cohomology.
    """
    if gamma.graph != alpha.graph:
        raise ValueError("pairing needs both arguments on the same graph")
    if not alpha.is_cycle():
        raise ValueError("second argument must be a cycle")
    return len(gamma.edges & alpha.edges) & 1


@dataclass(frozen=True)
class HomologyBasis:
    """Canonical dual bases of H1 and H^1 hung off a spanning forest.

    ``cycles[i]`` is the fundamental cycle of the i-th non-forest edge
    (that edge plus the forest path joining its endpoints) and
    ``cocycles[i]`` is the indicator cochain of the same edge.  Ordering
    follows ascending non-forest edge index, which makes the pairing Gram
    matrix the identity.
    """

    graph: MultiGraph
    forest: frozenset
    cycles: tuple[Chain1, ...]
    cocycles: tuple[Cochain1, ...]

    @property
    def genus(self) -> int:
        return len(self.cycles)


@lru_cache(maxsize=8192)
def homology_basis(graph: MultiGraph) -> HomologyBasis:
    """Fundamental cycle and cocycle bases from the greedy spanning forest."""
    forest = graph.spanning_forest()
    cycles: list[Chain1] = []
    cocycles: list[Cochain1] = []
    for e in range(graph.edge_count):
        if e in forest:
            continue
        u, v = graph.edges[e]
        path = graph.path_in_forest(forest, u, v)
        cycles.append(Chain1(graph, frozenset(path) | {e}))
        cocycles.append(Cochain1(graph, frozenset({e})))
    return HomologyBasis(graph, forest, tuple(cycles), tuple(cocycles))


def pairing_gram(graph: MultiGraph) -> GF2Matrix:
    """Gram matrix of the pairing on the canonical bases."""
    basis = homology_basis(graph)
    g = basis.genus
    gram = GF2Matrix.zeros(g, g)
    for i, gamma in enumerate(basis.cocycles):
        for j, alpha in enumerate(basis.cycles):
            gram.data[i, j] = graph_pairing(gamma, alpha)
    return gram


def is_perfect_pairing(graph: MultiGraph) -> tuple[bool, GF2Matrix]:
    """Whether the Gram matrix on the canonical bases is invertible."""
    gram = pairing_gram(graph)
    return gram.is_invertible(), gram


def is_simple_cycle(alpha: Chain1) -> bool:
    """True when the support is one cycle: distinct edges through distinct
    vertices, closed up.  A loop is a cycle of length one, a parallel pair
    a cycle of length two.

    Characterization used: the support is connected and every vertex it
    touches has exactly two endpoints in it (a loop counts twice).
    """
    support = alpha.edges
    if not support:
        return False
    graph = alpha.graph
    degree: dict[int, int] = {}
    for e in support:
        u, v = graph.edges[e]
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    if any(d != 2 for d in degree.values()):
        return False
    # connectivity of the support subgraph
    touched = set(degree)
    start = next(iter(touched))
    stack = [start]
    seen = {start}
    remaining = set(support)
    while stack:
        x = stack.pop()
        for e in graph.incident_edges(x):
            if e not in remaining:
                continue
            y = graph.edge_other_end(e, x)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == touched


def decompose_cycles(alpha: Chain1) -> list[Chain1]:
    """Split a cycle into edge-disjoint simple cycles summing to it.

    Greedy peeling: walk unused support edges from the lowest-index one
    until a vertex repeats, cut out the simple cycle between the two
    visits, return the leftover walk to the pool, repeat.  Works because
    a cycle's support has even non-loop degree everywhere.
    """
    if not alpha.is_cycle():
        raise ValueError("argument must be a cycle")
    graph = alpha.graph
    pool = set(alpha.edges)
    pieces: list[Chain1] = []
    while pool:
        start_edge = min(pool)
        u, v = graph.edges[start_edge]
        if u == v:
            pool.remove(start_edge)
            pieces.append(Chain1(graph, frozenset({start_edge})))
            continue
        # walk from u through start_edge until some vertex repeats
        walk_vertices = [u, v]
        walk_edges = [start_edge]
        used = {start_edge}
        while True:
            here = walk_vertices[-1]
            step = None
            for e in graph.incident_edges(here):
                if e in pool and e not in used:
                    step = e
                    break
            # even degrees guarantee a way out until the walk closes up
            assert step is not None
            nxt = graph.edge_other_end(step, here)
            used.add(step)
            walk_edges.append(step)
            if graph.is_loop(step):
                pieces.append(Chain1(graph, frozenset({step})))
                pool.remove(step)
                walk_edges.pop()
                used.discard(step)
                continue
            if nxt in walk_vertices:
                cut = walk_vertices.index(nxt)
                cycle_edges = frozenset(walk_edges[cut:])
                pieces.append(Chain1(graph, cycle_edges))
                pool -= cycle_edges
                break
            walk_vertices.append(nxt)
    return pieces
