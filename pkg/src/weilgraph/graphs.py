"""Undirected multigraphs with positional edge identity.

Vertices are the integers ``0 .. vertex_count - 1``.  Edges are unordered
endpoint pairs kept in a tuple; parallel edges and loops are allowed, and an
edge is identified by its index in that tuple, never by its endpoints.
Chains, cochains, stabilizer assignments and subdivision bookkeeping all key
off those indices, which is why the tuple order is part of the value.

Nothing here is oriented.  The homology this feeds lives over GF(2), where an
edge is just the multiset of its endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

__all__ = [
    "EdgeSubset",
    "MultiGraph",
    "SubdivisionMap",
    "bouquet_graph",
    "cycle_graph",
    "dumbbell_graph",
    "path_graph",
    "theta_graph",
]

# Edge subsets are plain frozensets of edge indices into MultiGraph.edges.
EdgeSubset = frozenset


@dataclass(frozen=True)
class MultiGraph:
    """A finite undirected multigraph.

    Parameters
    ----------
    vertex_count:
        Number of vertices, labeled ``0 .. vertex_count - 1``.
    edges:
        Tuple of ``(u, v)`` endpoint pairs.  Position in the tuple is the
        edge's identity; two parallel edges are distinct edges.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        for u, v in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(
                    f"edge ({u}, {v}) out of range for {self.vertex_count} vertices"
                )

    # -- basic structure ---------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_loop(self, e: int) -> bool:
        u, v = self.edges[e]
        return u == v

    def degree(self, v: int) -> int:
        """Number of edge endpoints at ``v``.  A loop counts twice."""
        return sum((u == v) + (w == v) for u, w in self.edges)

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        # Per-vertex tuple of incident edge indices; a loop is listed once.
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            if v != u:
                inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Edges touching ``v``, in index order.  Loops appear once."""
        return self._incidence[v]

    def edge_other_end(self, e: int, v: int) -> int:
        """The endpoint of ``e`` opposite ``v`` (equal to ``v`` for a loop)."""
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    # -- connectivity and genus --------------------------------------------

    @cached_property
    def connected_components(self) -> tuple[frozenset[int], ...]:
        """Vertex sets of the components, ordered by smallest member."""
        seen = [False] * self.vertex_count
        comps: list[frozenset[int]] = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            stack = [start]
            seen[start] = True
            comp = [start]
            while stack:
                v = stack.pop()
                for e in self._incidence[v]:
                    w = self.edge_other_end(e, v)
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return tuple(comps)

    @property
    def component_count(self) -> int:
        return len(self.connected_components)

    def is_connected(self) -> bool:
        return self.component_count <= 1

    def genus(self) -> int:
        """First Betti number: ``edges - vertices + components``."""
        return self.edge_count - self.vertex_count + self.component_count

    # -- forests, paths, separating edges ------------------------------------

    def spanning_forest(self) -> EdgeSubset:
        """Greedy lowest-index spanning forest.  Loops never qualify."""
        parent = list(range(self.vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        picked: list[int] = []
        for e, (u, v) in enumerate(self.edges):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                picked.append(e)
        return frozenset(picked)

    def path_in_forest(self, forest: Iterable[int], u: int, v: int) -> tuple[int, ...]:
        """Edge indices of the unique ``u`` to ``v`` path inside ``forest``.

        Empty when ``u == v``.  Raises ValueError when the two vertices lie
        in different forest components (then no path exists).
        """
        forest = frozenset(forest)
        if u == v:
            return ()
        # BFS from u restricted to forest edges; forests make the path unique.
        prev: dict[int, tuple[int, int]] = {}
        frontier = [u]
        seen = {u}
        while frontier and v not in seen:
            nxt: list[int] = []
            for x in frontier:
                for e in self._incidence[x]:
                    if e not in forest:
                        continue
                    y = self.edge_other_end(e, x)
                    if y not in seen:
                        seen.add(y)
                        prev[y] = (x, e)
                        nxt.append(y)
            frontier = nxt
        if v not in seen:
            raise ValueError(f"no forest path joins {u} and {v}")
        path: list[int] = []
        x = v
        while x != u:
            x, e = prev[x]
            path.append(e)
        path.reverse()
        return tuple(path)

    def non_separating_edges(self) -> EdgeSubset:
        """Edges whose deletion does not raise the component count.

        Equivalently the edges lying on some cycle.  Loops always qualify.
        """
        result: list[int] = []
        for e, (u, v) in enumerate(self.edges):
            if u == v:
                result.append(e)
                continue
            # e is non-separating iff u still reaches v after dropping e.
            stack = [u]
            seen = {u}
            found = False
            while stack and not found:
                x = stack.pop()
                for f in self._incidence[x]:
                    if f == e:
                        continue
                    y = self.edge_other_end(f, x)
                    if y == v:
                        found = True
                        break
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if found:
                result.append(e)
        return frozenset(result)

    # -- derived graphs ------------------------------------------------------

    def delete_edges(self, drop: Iterable[int]) -> tuple["MultiGraph", tuple[int, ...]]:
        """Remove the edges in ``drop``, keeping the vertex set.

        Returns ``(child, kept)`` where ``kept[j]`` is the parent index of
        child edge ``j``.  Relative edge order is preserved.
        """
        dropset = frozenset(drop)
        for e in dropset:
            if not (0 <= e < self.edge_count):
                raise ValueError(f"edge index {e} out of range")
        kept = tuple(e for e in range(self.edge_count) if e not in dropset)
        child = MultiGraph(self.vertex_count, tuple(self.edges[e] for e in kept))
        return child, kept

    def subdivide(self, r: int, which: Iterable[int] | None = None) -> "SubdivisionMap":
        """Divide each edge in ``which`` into ``r`` equal parts.

        ``which`` defaults to every edge.  Parent vertices keep their labels;
        the interior vertices of the subdivided edges are appended after
        them, in parent edge order.  ``r == 1`` leaves the graph unchanged.
        """
        if r < 1:
            raise ValueError("subdivision parameter must be at least 1")
        chosen = frozenset(range(self.edge_count)) if which is None else frozenset(which)
        for e in chosen:
            if not (0 <= e < self.edge_count):
                raise ValueError(f"edge index {e} out of range")

        new_edges: list[tuple[int, int]] = []
        edge_paths: list[tuple[int, ...]] = []
        next_vertex = self.vertex_count
        for e, (u, v) in enumerate(self.edges):
            if e not in chosen or r == 1:
                edge_paths.append((len(new_edges),))
                new_edges.append((u, v))
                continue
            waypoints = [u] + [next_vertex + i for i in range(r - 1)] + [v]
            next_vertex += r - 1
            path = []
            for a, b in zip(waypoints, waypoints[1:]):
                path.append(len(new_edges))
                new_edges.append((a, b))
            edge_paths.append(tuple(path))
        child = MultiGraph(next_vertex, tuple(new_edges))
        return SubdivisionMap(
            parent=self,
            child=child,
            original_vertices=frozenset(range(self.vertex_count)),
            edge_paths=tuple(edge_paths),
        )


@dataclass(frozen=True)
class SubdivisionMap:
    """Bookkeeping for an edge subdivision.

    ``original_vertices`` holds the child labels of the parent vertices (the
    embedding is the identity: parent vertex ``i`` is child vertex ``i``).
    ``edge_paths[e]`` lists the child edges that parent edge ``e`` became, in
    order from its first endpoint to its second.
    """

    parent: MultiGraph
    child: MultiGraph
    original_vertices: frozenset[int]
    edge_paths: tuple[tuple[int, ...], ...]

    def subdivided_edges(self) -> EdgeSubset:
        return frozenset(e for e, p in enumerate(self.edge_paths) if len(p) > 1)

    def interior_vertices(self) -> frozenset[int]:
        """Child vertices created by the subdivision."""
        return frozenset(range(self.parent.vertex_count, self.child.vertex_count))


# -- small stock graphs used throughout tests and demos ----------------------


def cycle_graph(k: int) -> MultiGraph:
    """Cycle of length ``k``: a loop for k=1, a parallel pair for k=2."""
    if k < 1:
        raise ValueError("cycle length must be at least 1")
    return MultiGraph(k, tuple((i, (i + 1) % k) for i in range(k)))


def path_graph(k: int) -> MultiGraph:
    """Path on ``k`` vertices (k - 1 edges)."""
    if k < 1:
        raise ValueError("path needs at least one vertex")
    return MultiGraph(k, tuple((i, i + 1) for i in range(k - 1)))


def theta_graph() -> MultiGraph:
    """Two vertices joined by three parallel edges.  Genus 2."""
    return MultiGraph(2, ((0, 1), (0, 1), (0, 1)))


def dumbbell_graph() -> MultiGraph:
    """Loop, bridge, loop.  Genus 2 with a separating middle edge."""
    return MultiGraph(2, ((0, 0), (0, 1), (1, 1)))


def bouquet_graph(k: int) -> MultiGraph:
    """Single vertex carrying ``k`` loops."""
    if k < 0:
        raise ValueError("loop count must be non-negative")
    return MultiGraph(1, ((0, 0),) * k)
