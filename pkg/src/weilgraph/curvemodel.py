"""Combinatorial models of stable stacky curves and their 2-torsion.

A model is a dual graph decorated with a geometric genus per vertex and a
stabilizer order per edge (order one meaning an ordinary node).  That data
already determines the size of the 2-torsion of the Picard group and an
explicit GF(2) Gram matrix for the Weil pairing on it, assembled from three
kinds of classes:

* h classes, pulled back from graph cohomology of the dual graph,
* component classes, 2-torsion on the normalization, one standard
  symplectic block of size twice the genus per vertex,
* q classes, indexed by cycles of the reduced graph (the dual graph with
  the odd-order edges deleted), pairing against the h classes through the
  graph pairing.

The h block is isotropic and pairs with nothing but the q block.  Blocks
the theory leaves undetermined (q with q, component with q) are set to
zero; that choice is a documented representative and nothing downstream
reads those blocks.  The form is non-degenerate exactly when every
non-separating edge has even stabilizer order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import EdgeSubset, MultiGraph
from .homology import Chain1, Cochain1, graph_pairing, homology_basis
from .linalg import GF2Matrix

__all__ = [
    "TwistedCurveModel",
    "TwoTorsionClass",
    "WeilFormModel",
    "coarse_pairing",
]


@dataclass(frozen=True)
class TwistedCurveModel:
    """Dual graph plus per-vertex genus and per-edge stabilizer order."""

    graph: MultiGraph
    vertex_genus: tuple[int, ...]
    edge_order: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertex_genus", tuple(int(x) for x in self.vertex_genus))
        object.__setattr__(self, "edge_order", tuple(int(x) for x in self.edge_order))
        if len(self.vertex_genus) != self.graph.vertex_count:
            raise ValueError("one genus per vertex required")
        if len(self.edge_order) != self.graph.edge_count:
            raise ValueError("one stabilizer order per edge required")
        if any(g < 0 for g in self.vertex_genus):
            raise ValueError("vertex genera must be non-negative")
        if any(s < 1 for s in self.edge_order):
            raise ValueError("stabilizer orders must be positive")

    # -- genus bookkeeping ---------------------------------------------------

    def graph_genus(self) -> int:
        return self.graph.genus()

    def arithmetic_genus(self) -> int:
        """Total genus: vertex genera plus the graph genus."""
        return sum(self.vertex_genus) + self.graph.genus()

    # -- the reduced graph and torsion count ---------------------------------

    def even_edges(self) -> EdgeSubset:
        return frozenset(e for e, s in enumerate(self.edge_order) if s % 2 == 0)

    def reduced_graph(self) -> tuple[MultiGraph, tuple[int, ...]]:
        """Drop the odd-order edges.  Returns the child and the kept map."""
        odd = frozenset(range(self.graph.edge_count)) - self.even_edges()
        return self.graph.delete_edges(odd)

    def reduced_genus(self) -> int:
        reduced, _ = self.reduced_graph()
        return reduced.genus()

    def two_torsion_order(self) -> int:
        """Size of the 2-torsion of the Picard group.

        Exponent: twice the arithmetic genus, minus the graph genus, plus
        the reduced graph genus.  Equals ``2 ** (2 g)`` exactly when every
        non-separating edge has even order.
        """
        g = self.arithmetic_genus()
        return 2 ** (2 * g - self.graph_genus() + self.reduced_genus())

    def is_nondegenerate(self) -> bool:
        """Even stabilizer order on every non-separating edge."""
        even = self.even_edges()
        return all(e in even for e in self.graph.non_separating_edges())

    # -- the Weil form --------------------------------------------------------

    def weil_form(self) -> "WeilFormModel":
        """Assemble the GF(2) Gram matrix of the Weil pairing.

        Coordinates are ordered h block, component block, q block.  The
        h x q corner is the graph pairing of the cohomology basis against
        the reduced graph's cycle basis pushed into the parent graph.
        """
        basis = homology_basis(self.graph)
        cocycles = basis.cocycles
        h_dim = len(cocycles)
        reduced, kept = self.reduced_graph()
        pushed = tuple(
            Chain1(self.graph, frozenset(kept[j] for j in c.edges))
            for c in homology_basis(reduced).cycles
        )
        q_dim = len(pushed)
        comp_dim = 2 * sum(self.vertex_genus)
        total = h_dim + comp_dim + q_dim
        gram = GF2Matrix.zeros(total, total)
        for i, gamma in enumerate(cocycles):
            for j, alpha in enumerate(pushed):
                bit = graph_pairing(gamma, alpha)
                gram.data[i, h_dim + comp_dim + j] = bit
                gram.data[h_dim + comp_dim + j, i] = bit
        off = h_dim
        for gv in self.vertex_genus:
            for k in range(gv):
                gram.data[off + k, off + gv + k] = 1
                gram.data[off + gv + k, off + k] = 1
            off += 2 * gv
        return WeilFormModel(
            model=self,
            gram=gram,
            h_dim=h_dim,
            component_dim=comp_dim,
            q_dim=q_dim,
            cocycles=cocycles,
            reduced_cycles=pushed,
        )


@dataclass(frozen=True)
class TwoTorsionClass:
    """A 2-torsion class in block coordinates (h, component, q)."""

    h_part: tuple[int, ...]
    component_part: tuple[int, ...]
    q_part: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "h_part", tuple(int(x) & 1 for x in self.h_part))
        object.__setattr__(
            self, "component_part", tuple(int(x) & 1 for x in self.component_part)
        )
        object.__setattr__(self, "q_part", tuple(int(x) & 1 for x in self.q_part))

    def vector(self) -> tuple[int, ...]:
        return self.h_part + self.component_part + self.q_part


@dataclass(frozen=True)
class WeilFormModel:
    """The Weil pairing Gram matrix with its block layout and provenance.

    ``cocycles[i]`` is the cochain behind h coordinate ``i``;
    ``reduced_cycles[j]`` is the parent-graph cycle behind q coordinate
    ``j``.  Those witnesses let the pairing be re-derived through double
    covers instead of through this matrix.
    """

    model: TwistedCurveModel
    gram: GF2Matrix
    h_dim: int
    component_dim: int
    q_dim: int
    cocycles: tuple[Cochain1, ...]
    reduced_cycles: tuple[Chain1, ...]

    @property
    def total_dim(self) -> int:
        return self.h_dim + self.component_dim + self.q_dim

    def pair(self, x: TwoTorsionClass, y: TwoTorsionClass) -> int:
        """Evaluate the form: x transposed, Gram, y, over GF(2)."""
        shape = (self.h_dim, self.component_dim, self.q_dim)
        for cls in (x, y):
            got = (len(cls.h_part), len(cls.component_part), len(cls.q_part))
            if got != shape:
                raise ValueError(f"class blocks {got} do not match the form {shape}")
        gy = self.gram.mul_vec(y.vector())
        return int(sum(a * b for a, b in zip(x.vector(), gy)) & 1)

    def is_alternating(self) -> bool:
        return self.gram.is_symmetric() and self.gram.has_zero_diagonal()


def coarse_pairing(model: TwistedCurveModel, x: Sequence[int], y: Sequence[int]) -> int:
    """Componentwise pairing: the per-vertex symplectic sum.

    ``x`` and ``y`` are component-block coordinate vectors (length twice
    the genus sum); the result is the sum of the standard symplectic
    pairings over the vertices, which is how the pairing of pullback
    classes decomposes over the normalization.
    """
    comp_dim = 2 * sum(model.vertex_genus)
    xs = tuple(int(a) & 1 for a in x)
    ys = tuple(int(a) & 1 for a in y)
    if len(xs) != comp_dim or len(ys) != comp_dim:
        raise ValueError("component vectors must have length twice the genus sum")
    total = 0
    off = 0
    for gv in model.vertex_genus:
        for k in range(gv):
            total ^= xs[off + k] & ys[off + gv + k]
            total ^= xs[off + gv + k] & ys[off + k]
        off += 2 * gv
    return total
