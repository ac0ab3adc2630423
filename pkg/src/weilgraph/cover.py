"""Double covers of graphs classified by GF(2) edge functions.

A cochain gamma on a graph picks out the edges that cross between the two
sheets of a double cover; edges off gamma stay inside their sheet.  The
cover is connected exactly when gamma is not a coboundary, and the lift of
a simple cycle of length l is either one cycle of length 2l or two disjoint
cycles of length l, according to whether the pairing of gamma with the
cycle is one or zero.  Both routes to that bit, the combinatorial lift and
the algebraic pairing, are exposed here so they can be checked against each
other wholesale.

Numbering is fixed so tests can freeze values: sheet a is vertices
``0 .. n-1`` of the total graph, sheet b is ``n .. 2n-1``, and base edge
``e`` lifts to total edges ``2e`` (the lift whose first endpoint is on
sheet a) and ``2e + 1`` (its deck translate).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import MultiGraph
from .homology import Chain1, Cochain1, graph_pairing, is_simple_cycle

__all__ = [
    "DoubleCover",
    "build_double_cover",
    "check_lift_shape",
    "cover_to_dot",
    "lift_cycle",
    "pairing_via_cover",
]


@dataclass(frozen=True)
class DoubleCover:
    """A double cover with its base, total graph and classifying cochain."""

    base: MultiGraph
    classifying: Cochain1
    total: MultiGraph

    def project_vertex(self, w: int) -> int:
        return w % self.base.vertex_count

    def project_edge(self, k: int) -> int:
        return k // 2

    def deck_vertex(self, w: int) -> int:
        """The sheet-swapping involution on total vertices."""
        n = self.base.vertex_count
        return (w + n) % (2 * n)

    def deck_edge(self, k: int) -> int:
        return k ^ 1

    def is_connected(self) -> bool:
        """Connectivity of the total graph over a connected base.

        Equivalent to the classifying cochain being cohomologically
        nontrivial; the implementation just walks the total graph so the
        equivalence stays checkable from outside.
        """
        if not self.base.is_connected():
            raise ValueError("connectivity of the cover needs a connected base")
        return self.total.is_connected()


def build_double_cover(base: MultiGraph, gamma: Cochain1) -> DoubleCover:
    """Assemble the double cover classified by ``gamma``.

    Sheet-crossing edges are exactly the support of ``gamma``.  A loop with
    gamma one lifts to the two parallel edges joining its endpoint's sheet
    copies, so the deck involution stays free on edges.
    """
    if gamma.graph != base:
        raise ValueError("classifying cochain lives on a different graph")
    n = base.vertex_count
    lifted: list[tuple[int, int]] = []
    for e, (u, v) in enumerate(base.edges):
        if e in gamma.edges:
            lifted.append((u, v + n))
            lifted.append((u + n, v))
        else:
            lifted.append((u, v))
            lifted.append((u + n, v + n))
    total = MultiGraph(2 * n, tuple(lifted))
    return DoubleCover(base=base, classifying=gamma, total=total)


def lift_cycle(cover: DoubleCover, alpha: Chain1) -> tuple[int, tuple[frozenset, ...]]:
    """Connected components of the preimage of a simple cycle.

    Returns ``(count, components)`` with each component given as a
    frozenset of total-graph edge indices, ordered by smallest member.
    The count is always one or two: one cycle of twice the length, or two
    disjoint copies.
    """
    if alpha.graph != cover.base:
        raise ValueError("cycle lives on a different graph")
    if not is_simple_cycle(alpha):
        raise ValueError("lift needs a single simple cycle")
    preimage = [k for e in sorted(alpha.edges) for k in (2 * e, 2 * e + 1)]
    total = cover.total
    # component split of the preimage subgraph, walking only preimage edges
    adjacency: dict[int, list[int]] = {}
    for k in preimage:
        u, v = total.edges[k]
        adjacency.setdefault(u, []).append(k)
        if v != u:
            adjacency.setdefault(v, []).append(k)
    unvisited = set(preimage)
    components: list[frozenset] = []
    while unvisited:
        seed = min(unvisited)
        comp = {seed}
        unvisited.remove(seed)
        stack = list(total.edges[seed])
        seen_vertices = set(stack)
        while stack:
            x = stack.pop()
            for k in adjacency.get(x, ()):
                if k in unvisited:
                    unvisited.remove(k)
                    comp.add(k)
                y = total.edge_other_end(k, x)
                if y not in seen_vertices:
                    seen_vertices.add(y)
                    stack.append(y)
        components.append(frozenset(comp))
    components.sort(key=min)
    return len(components), tuple(components)


def pairing_via_cover(base: MultiGraph, gamma: Cochain1, alpha: Chain1) -> int:
    """The pairing bit read off the cover: one when the lift is connected.

    This is the independent route to ``graph_pairing(gamma, alpha)``: it
    never sums supports, it builds the cover and counts components.
    """
    cover = build_double_cover(base, gamma)
    count, _ = lift_cycle(cover, alpha)
    return 1 if count == 1 else 0


def check_lift_shape(cover: DoubleCover, alpha: Chain1) -> bool:
    """Lift shape sanity: one 2l-cycle or two l-cycles, nothing else."""
    length = len(alpha.edges)
    count, components = lift_cycle(cover, alpha)
    if count == 1:
        return len(components[0]) == 2 * length
    if count == 2:
        return all(len(c) == length for c in components)
    return False


def cover_to_dot(cover: DoubleCover) -> str:
    """Graphviz text for the total graph.

    Vertices are named ``v<i>_a`` and ``v<i>_b`` by sheet; sheet-crossing
    edges are dashed and every edge is labeled with its base edge index.
    Output is deterministic.
    """
    n = cover.base.vertex_count

    def name(w: int) -> str:
        return f"v{w % n}_{'a' if w < n else 'b'}"

    lines = ["graph cover {"]
    for w in range(2 * n):
        lines.append(f"  {name(w)};")
    for k, (u, v) in enumerate(cover.total.edges):
        e = k // 2
        style = ' style=dashed' if e in cover.classifying.edges else ""
        lines.append(f"  {name(u)} -- {name(v)} [label={e}{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
