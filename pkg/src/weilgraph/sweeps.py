"""Exhaustive verification sweeps over all small connected multigraphs.

The enumerator generates one representative per sorted first-use edge list:
edge lists are lexicographically nondecreasing, vertex labels make their
first appearance in increasing order, and a new vertex may only enter as
the second endpoint of an edge anchored at an already-used vertex (a new
vertex opening a fresh component could never reconnect later, the edge
list being sorted).  Every connected multigraph is isomorphic to at least
one generated graph: relabel it so its sorted edge list is
lexicographically minimal, and that minimal code has increasing first use.
A test cross-validates this against brute-force relabeling.

Each sweep pits two independent routes to the same bit or count against
each other and records counterexamples instead of raising, so callers can
print them and exit nonzero.  ``inject_fault=True`` deliberately corrupts
the first comparison of a sweep; it exists so the harness can demonstrate
that it would actually catch a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from .cover import build_double_cover, lift_cycle, pairing_via_cover
from .curvemodel import TwistedCurveModel
from .graphs import MultiGraph
from .homology import (
    Chain1,
    Cochain1,
    decompose_cycles,
    graph_pairing,
    is_perfect_pairing,
    is_simple_cycle,
)
from .linalg import GF2Matrix
from .sandpile import Divisor, divisors_equivalent, verify_torsion_on_subdivision

__all__ = [
    "SweepResult",
    "all_cochains",
    "all_simple_cycles",
    "connected_multigraphs",
    "model_sweep",
    "pairing_equivalence_sweep",
    "perfect_pairing_sweep",
    "torsion_sweep",
]

_MAX_RECORDED = 10


@dataclass
class SweepResult:
    """Outcome of one sweep: instance count and recorded counterexamples."""

    name: str
    instances: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def record(self, **info) -> None:
        self.failure_count += 1
        if len(self.failures) < _MAX_RECORDED:
            self.failures.append(info)

    def summary(self) -> str:
        state = "ok" if self.ok else f"FAIL ({self.failure_count} counterexamples)"
        return f"{self.name}: {self.instances} instances, {state}"


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def connected_multigraphs(max_edges: int, min_edges: int = 0) -> Iterator[MultiGraph]:
    """All connected multigraphs with ``min_edges .. max_edges`` edges.

    One representative per sorted first-use edge list; every isomorphism
    class appears at least once.  The single-vertex edgeless graph is the
    unique zero-edge case.
    """
    if max_edges < 0:
        raise ValueError("edge bound must be non-negative")
    if min_edges <= 0:
        yield MultiGraph(1, ())
    for m in range(max(1, min_edges), max_edges + 1):
        yield from _connected_with_edges(m)


def _connected_with_edges(m: int) -> Iterator[MultiGraph]:
    edges: list[tuple[int, int]] = []

    def grow(used: int) -> Iterator[MultiGraph]:
        if len(edges) == m:
            yield MultiGraph(used, tuple(edges))
            return
        lu, lv = edges[-1] if edges else (0, 0)
        for u in range(lu, used):
            start = lv if u == lu else u
            for v in range(start, used + 1):
                edges.append((u, v))
                yield from grow(used + 1 if v == used else used)
                edges.pop()

    yield from grow(1)


def all_cochains(graph: MultiGraph) -> Iterator[Cochain1]:
    """Every GF(2) edge function, in bitmask order."""
    m = graph.edge_count
    for mask in range(1 << m):
        yield Cochain1(graph, frozenset(e for e in range(m) if mask >> e & 1))


def all_simple_cycles(graph: MultiGraph) -> tuple[Chain1, ...]:
    """Every simple cycle, by subset search.  Exponential; sweep-sized only."""
    out: list[Chain1] = []
    m = graph.edge_count
    for size in range(1, m + 1):
        for combo in combinations(range(m), size):
            chain = Chain1(graph, frozenset(combo))
            if is_simple_cycle(chain):
                out.append(chain)
    return tuple(out)


def _is_coboundary(graph: MultiGraph, gamma: Cochain1) -> bool:
    # gamma lies in the image of the vertex-function coboundary map
    inc = GF2Matrix.zeros(graph.edge_count, graph.vertex_count)
    for e, (u, v) in enumerate(graph.edges):
        if u != v:
            inc.data[e, u] ^= 1
            inc.data[e, v] ^= 1
    target = [1 if e in gamma.edges else 0 for e in range(graph.edge_count)]
    return inc.solve(target) is not None


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------


def perfect_pairing_sweep(max_edges: int = 6) -> SweepResult:
    """Canonical bases pair to the identity Gram on every small graph."""
    res = SweepResult("perfect-pairing")
    for graph in connected_multigraphs(max_edges):
        res.instances += 1
        ok, gram = is_perfect_pairing(graph)
        genus = graph.genus()
        if not ok or gram != GF2Matrix.identity(genus):
            res.record(kind="gram", graph=graph.edges, genus=genus)
    return res


def pairing_equivalence_sweep(max_edges: int = 6, inject_fault: bool = False) -> SweepResult:
    """Cover-side pairing against algebraic pairing, every (graph, cochain,
    simple cycle) triple; lift shapes and cover connectivity ride along.

    ``instances`` counts the triples.
    """
    res = SweepResult("cover-lift-pairing")
    fault = inject_fault
    for graph in connected_multigraphs(max_edges):
        cycles = all_simple_cycles(graph)
        for gamma in all_cochains(graph):
            cover = build_double_cover(graph, gamma)
            connected = cover.is_connected()
            if connected == _is_coboundary(graph, gamma):
                res.record(
                    kind="connectivity",
                    graph=graph.edges,
                    gamma=sorted(gamma.edges),
                    connected=connected,
                )
            for alpha in cycles:
                res.instances += 1
                count, comps = lift_cycle(cover, alpha)
                bit_cover = 1 if count == 1 else 0
                if fault:
                    bit_cover ^= 1
                    fault = False
                bit_algebraic = graph_pairing(gamma, alpha)
                length = len(alpha.edges)
                shape_ok = (count == 1 and len(comps[0]) == 2 * length) or (
                    count == 2 and all(len(c) == length for c in comps)
                )
                if bit_cover != bit_algebraic or not shape_ok:
                    res.record(
                        kind="pairing",
                        graph=graph.edges,
                        gamma=sorted(gamma.edges),
                        alpha=sorted(alpha.edges),
                        cover_bit=bit_cover,
                        algebraic_bit=bit_algebraic,
                        components=[sorted(c) for c in comps],
                    )
    return res


def model_sweep(max_edges: int = 5, inject_fault: bool = False) -> SweepResult:
    """Torsion counts and Weil form over all small models.

    Enumerates every connected graph up to the bound, every stabilizer
    parity pattern, every genus-0/1 assignment.  Checks, per instance: the
    two-torsion order exponent against the assembled form dimension, the
    full-size criterion (order equals 2^(2g) exactly when all
    non-separating edges are even), invertibility of the Gram against the
    same criterion, the Gram being alternating, the h block isotropic and
    orthogonal to the component block, and, on all-even genus-free models,
    the h x q Gram entries against the double-cover pairing.
    """
    res = SweepResult("torsion-order-and-form")
    fault = inject_fault
    for graph in connected_multigraphs(max_edges):
        m = graph.edge_count
        n = graph.vertex_count
        nonsep = graph.non_separating_edges()
        for parity_mask in range(1 << m):
            orders = tuple(2 if parity_mask >> e & 1 else 1 for e in range(m))
            all_even_nonsep = all(orders[e] % 2 == 0 for e in nonsep)
            for genera_mask in range(1 << n):
                genera = tuple(genera_mask >> v & 1 for v in range(n))
                model = TwistedCurveModel(graph, genera, orders)
                res.instances += 1
                form = model.weil_form()
                if fault and form.total_dim > 0:
                    form.gram.data[0, form.total_dim - 1] ^= 1
                    fault = False
                order = model.two_torsion_order()
                g = model.arithmetic_genus()
                problems = []
                if order != 2 ** form.total_dim:
                    problems.append("order-vs-dimension")
                if (order == 2 ** (2 * g)) != all_even_nonsep:
                    problems.append("full-size-criterion")
                if form.gram.is_invertible() != all_even_nonsep:
                    problems.append("invertibility-criterion")
                if not form.is_alternating():
                    problems.append("alternating")
                h, c = form.h_dim, form.component_dim
                if form.gram.data[:h, : h + c].any():
                    problems.append("h-isotropy")
                if problems:
                    res.record(
                        kind=",".join(problems),
                        graph=graph.edges,
                        orders=orders,
                        genera=genera,
                    )
            # cover consistency once per graph, on the all-even genus-free model
            if parity_mask == (1 << m) - 1:
                model = TwistedCurveModel(graph, (0,) * n, orders)
                form = model.weil_form()
                h, c = form.h_dim, form.component_dim
                for i, gamma in enumerate(form.cocycles):
                    for j, alpha in enumerate(form.reduced_cycles):
                        res.instances += 1
                        expected = int(form.gram.data[i, h + c + j])
                        pieces = all_simple_pieces_pairing(graph, gamma, alpha)
                        if pieces != expected:
                            res.record(
                                kind="cover-consistency",
                                graph=graph.edges,
                                gamma=sorted(gamma.edges),
                                alpha=sorted(alpha.edges),
                            )
    return res


def all_simple_pieces_pairing(graph: MultiGraph, gamma: Cochain1, alpha: Chain1) -> int:
    """Pair a not-necessarily-simple cycle through covers, piece by piece.

    Splits the cycle into edge-disjoint simple cycles and sums the
    cover-route bits; bilinearity makes that the pairing of the whole.
    """
    total = 0
    for piece in decompose_cycles(alpha):
        total ^= pairing_via_cover(graph, gamma, piece)
    return total


def torsion_sweep(
    max_edges: int = 6,
    rs: Sequence[int] = (2, 3, 4, 5),
    inject_fault: bool = False,
) -> SweepResult:
    """Subdivision r-torsion on every small graph, both subdivision modes.

    Per instance: the realized torsion count must be r to the graph genus,
    every generator must have degree zero and support inside the child's
    vertex set, and r times each generator must reduce to zero (checked by
    burning, not by the Smith form that produced the generator).
    """
    res = SweepResult("subdivision-r-torsion")
    fault = inject_fault
    for graph in connected_multigraphs(max_edges):
        for r in rs:
            if r < 1:
                raise ValueError("torsion indices must be positive")
            for mode in ("all", "nonsep"):
                res.instances += 1
                report = verify_torsion_on_subdivision(graph, r, mode)
                count = report.torsion_count
                if fault:
                    count += 1
                    fault = False
                problems = []
                if count != report.expected or not report.verdict:
                    problems.append("count")
                child = report.subdivision.child
                for gen in report.generators:
                    if gen.degree() != 0:
                        problems.append("generator-degree")
                        break
                    if not divisors_equivalent(
                        child, gen.scale(r), Divisor.zero(child), base=0
                    ):
                        problems.append("generator-order")
                        break
                if problems:
                    res.record(
                        kind=",".join(problems),
                        graph=graph.edges,
                        r=r,
                        mode=mode,
                        count=count,
                        expected=report.expected,
                        factors=report.invariant_factors,
                    )
    return res
