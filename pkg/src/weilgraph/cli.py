"""Command line front end.

Subcommands:

* ``homology``  cycle/cocycle bases and the intersection Gram matrix
* ``cover``     build a double cover, optionally lift a cycle through it
* ``torsion``   two-torsion order and Weil form of a decorated model
* ``tropical``  r-torsion of the critical group on an r-subdivision
* ``verify``    exhaustive consistency sweeps over small graphs

Input graphs and models are JSON documents (see ``documents``).  Exit
codes: 0 success, 2 malformed document or usage, 3 violated
precondition (e.g. a chain that is not a simple cycle), 4 a
verification check found a counterexample.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from .cover import build_double_cover, cover_to_dot, lift_cycle
from .documents import DocumentError, InputDocument, Report
from .graphs import MultiGraph
from .homology import Chain1, Cochain1, graph_pairing, homology_basis, is_perfect_pairing
from .linalg import GF2Matrix
from .sandpile import verify_torsion_on_subdivision
from .sweeps import (
    model_sweep,
    pairing_equivalence_sweep,
    perfect_pairing_sweep,
    torsion_sweep,
)

EXIT_OK = 0
EXIT_DOCUMENT = 2
EXIT_PRECONDITION = 3
EXIT_COUNTEREXAMPLE = 4

# model_sweep enumerates all (parity, genus) decorations per graph, so its
# instance count grows much faster than the other sweeps; cap its edge
# budget independently of --max-edges.
_MODEL_SWEEP_CAP = 5


def _read_document(path: str) -> InputDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as err:
            raise DocumentError(f"cannot read {path}: {err}") from err
    return InputDocument.parse(text)


def _parse_edge_list(text: str, graph: MultiGraph, what: str) -> frozenset[int]:
    """Comma-separated edge indices; the empty string is the zero chain."""
    if text.strip() == "":
        return frozenset()
    indices = []
    for part in text.split(","):
        try:
            indices.append(int(part))
        except ValueError:
            raise DocumentError(f"{what}: {part!r} is not an edge index") from None
    bad = [i for i in indices if not 0 <= i < graph.edge_count]
    if bad:
        raise ValueError(f"{what}: edge indices {bad} out of range")
    return frozenset(indices)


def _gram_rows(gram: GF2Matrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in gram.data]


def _emit(report: Report, human_lines: list[str], as_json: bool) -> None:
    if as_json:
        print(report.to_json())
    else:
        for line in human_lines:
            print(line)


def cmd_homology(args) -> int:
    doc = _read_document(args.graph)
    graph = doc.graph()
    basis = homology_basis(graph)
    perfect, gram = is_perfect_pairing(graph)

    payload = {
        "vertices": graph.vertex_count,
        "edges": graph.edge_count,
        "components": graph.component_count,
        "genus": basis.genus,
        "cycles": [sorted(c.edges) for c in basis.cycles],
        "cocycles": [sorted(z.edges) for z in basis.cocycles],
        "gram": _gram_rows(gram),
        "perfect": perfect,
    }
    lines = [
        f"graph: {graph.vertex_count} vertices, {graph.edge_count} edges,"
        f" genus {basis.genus}",
        "cycle basis:",
        *(f"  c{i}: edges {sorted(c.edges)}" for i, c in enumerate(basis.cycles)),
        "cocycle basis:",
        *(f"  z{i}: edges {sorted(z.edges)}" for i, z in enumerate(basis.cocycles)),
        "gram matrix:",
        *("  " + "".join(str(x) for x in row) for row in payload["gram"]),
        f"pairing is perfect: {'yes' if perfect else 'no'}",
    ]
    _emit(Report("homology", doc.digest(), payload), lines, args.json)
    return EXIT_OK


def cmd_cover(args) -> int:
    doc = _read_document(args.graph)
    graph = doc.graph()
    gamma = Cochain1(graph, _parse_edge_list(args.gamma, graph, "--gamma"))
    cover = build_double_cover(graph, gamma)

    payload = {
        "gamma": sorted(gamma.edges),
        "total_vertices": cover.total.vertex_count,
        "total_edges": cover.total.edge_count,
        "connected": cover.is_connected(),
    }
    lines = [
        f"gamma: edges {sorted(gamma.edges)}",
        f"cover: {cover.total.vertex_count} vertices,"
        f" {cover.total.edge_count} edges",
        f"cover is connected: {'yes' if payload['connected'] else 'no'}",
    ]

    exit_code = EXIT_OK
    if args.alpha is not None:
        alpha = Chain1(graph, _parse_edge_list(args.alpha, graph, "--alpha"))
        count, components = lift_cycle(cover, alpha)
        bit_cover = 1 if count == 1 else 0
        bit_algebraic = graph_pairing(gamma, alpha)
        agree = bit_cover == bit_algebraic
        payload.update(
            {
                "alpha": sorted(alpha.edges),
                "lift_count": count,
                "lift_sizes": [len(c) for c in components],
                "pairing_cover": bit_cover,
                "pairing_algebraic": bit_algebraic,
                "agree": agree,
            }
        )
        shape = (
            f"one cycle of length {len(components[0])}"
            if count == 1
            else " and ".join(f"a cycle of length {len(c)}" for c in components)
        )
        lines += [
            f"alpha: edges {sorted(alpha.edges)}",
            f"lift: {shape}",
            f"pairing via cover: {bit_cover}",
            f"pairing via intersection: {bit_algebraic}",
            f"agreement: {'yes' if agree else 'NO'}",
        ]
        if not agree:
            exit_code = EXIT_COUNTEREXAMPLE

    if args.dot is not None:
        dot = cover_to_dot(cover)
        if args.dot == "-":
            print(dot, end="")
        else:
            with open(args.dot, "w", encoding="utf-8") as fh:
                fh.write(dot)
            lines.append(f"wrote {args.dot}")

    _emit(Report("cover", doc.digest(), payload), lines, args.json)
    return exit_code


def cmd_torsion(args) -> int:
    doc = _read_document(args.graph)
    model = doc.model()
    form = model.weil_form()

    payload = {
        "arithmetic_genus": model.arithmetic_genus(),
        "graph_genus": model.graph_genus(),
        "reduced_genus": model.reduced_genus(),
        "two_torsion_order": model.two_torsion_order(),
        "nondegenerate": model.is_nondegenerate(),
        "form_dimension": form.total_dim,
        "block_dimensions": [form.h_dim, form.component_dim, form.q_dim],
        "gram": _gram_rows(form.gram),
        "alternating": form.is_alternating(),
        "invertible": form.gram.is_invertible(),
    }
    lines = [
        f"arithmetic genus: {payload['arithmetic_genus']}"
        f" (graph contributes {payload['graph_genus']})",
        f"reduced graph genus: {payload['reduced_genus']}",
        f"two-torsion order: {payload['two_torsion_order']}",
        f"full-size two-torsion: {'yes' if model.is_nondegenerate() else 'no'}",
        f"weil form dimension: {form.total_dim}"
        f" = {form.h_dim} + {form.component_dim} + {form.q_dim}",
        "gram matrix:",
        *("  " + "".join(str(x) for x in row) for row in payload["gram"]),
        f"alternating: {'yes' if payload['alternating'] else 'no'}",
        f"invertible: {'yes' if payload['invertible'] else 'no'}",
    ]
    _emit(Report("torsion", doc.digest(), payload), lines, args.json)
    return EXIT_OK


def cmd_tropical(args) -> int:
    doc = _read_document(args.graph)
    graph = doc.graph()
    report = verify_torsion_on_subdivision(graph, args.r, mode=args.mode)

    payload = {
        "r": args.r,
        "mode": args.mode,
        "graph_genus": graph.genus(),
        "subdivision_vertices": report.subdivision.child.vertex_count,
        "subdivision_edges": report.subdivision.child.edge_count,
        "invariant_factors": list(report.invariant_factors),
        "torsion_count": report.torsion_count,
        "expected": report.expected,
        "generator_count": len(report.generators),
        "verdict": report.verdict,
    }
    group = (
        " x ".join(f"Z/{d}" for d in report.invariant_factors)
        if report.invariant_factors
        else "trivial"
    )
    lines = [
        f"graph genus: {graph.genus()}",
        f"subdivision: {args.mode} edges, r = {args.r}"
        f" ({payload['subdivision_vertices']} vertices,"
        f" {payload['subdivision_edges']} edges)",
        f"critical group of subdivision: {group}",
        f"r-torsion count: {report.torsion_count}, expected {report.expected}",
        f"verdict: {'PASS' if report.verdict else 'FAIL'}",
    ]
    _emit(Report("tropical", doc.digest(), payload), lines, args.json)
    return EXIT_OK if report.verdict else EXIT_COUNTEREXAMPLE


def cmd_verify(args) -> int:
    rs = tuple(int(part) for part in args.r.split(","))
    if any(r < 1 for r in rs):
        raise ValueError("subdivision factors must be at least 1")
    params = {
        "max_edges": args.max_edges,
        "rs": list(rs),
        "inject_fault": args.inject_fault,
    }
    digest = hashlib.sha256(
        json.dumps(params, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()

    results = [
        perfect_pairing_sweep(args.max_edges),
        pairing_equivalence_sweep(args.max_edges, inject_fault=args.inject_fault),
        model_sweep(
            min(args.max_edges, _MODEL_SWEEP_CAP), inject_fault=args.inject_fault
        ),
        torsion_sweep(args.max_edges, rs=rs, inject_fault=args.inject_fault),
    ]

    payload = {
        "parameters": params,
        "sweeps": [
            {
                "name": res.name,
                "instances": res.instances,
                "failures": res.failure_count,
                "examples": res.failures,
            }
            for res in results
        ],
        "ok": all(res.ok for res in results),
    }
    lines = [res.summary() for res in results]
    for res in results:
        for failure in res.failures:
            lines.append(f"  counterexample in {res.name}: {failure}")
    lines.append("all sweeps passed" if payload["ok"] else "FAILURES FOUND")
    _emit(Report("verify", digest, payload), lines, args.json)
    return EXIT_OK if payload["ok"] else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weilgraph",
        description="Pairings, double covers and chip-firing on dual graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph(p):
        p.add_argument(
            "--graph",
            required=True,
            metavar="FILE",
            help="input JSON document ('-' reads stdin)",
        )
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("homology", help="cycle/cocycle bases and Gram matrix")
    add_graph(p)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("cover", help="double cover from a classifying cochain")
    add_graph(p)
    p.add_argument(
        "--gamma",
        default="",
        metavar="EDGES",
        help="classifying cochain as comma-separated edge indices (default empty)",
    )
    p.add_argument(
        "--alpha",
        default=None,
        metavar="EDGES",
        help="simple cycle to lift, as comma-separated edge indices",
    )
    p.add_argument(
        "--dot",
        default=None,
        metavar="FILE",
        help="write the cover in DOT format ('-' prints it)",
    )
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("torsion", help="two-torsion order and Weil form")
    add_graph(p)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("tropical", help="r-torsion on an r-subdivision")
    add_graph(p)
    p.add_argument("--r", type=int, default=2, help="subdivision factor (default 2)")
    p.add_argument(
        "--mode",
        choices=("all", "nonsep"),
        default="all",
        help="subdivide all edges or only non-separating ones",
    )
    p.set_defaults(func=cmd_tropical)

    p = sub.add_parser("verify", help="consistency sweeps over small graphs")
    p.add_argument(
        "--max-edges",
        type=int,
        default=4,
        help="largest edge count to enumerate (default 4)",
    )
    p.add_argument(
        "--r",
        default="2,3",
        metavar="LIST",
        help="subdivision factors for the torsion sweep (default 2,3)",
    )
    p.add_argument(
        "--inject-fault",
        action="store_true",
        help="deliberately corrupt the sweeps to demonstrate failure detection",
    )
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOCUMENT
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PRECONDITION


def console_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
