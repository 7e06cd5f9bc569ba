"""Graph serialization: a JSON schema and a DIMACS-like text format.

JSON: {"left": int, "right": int, "edges": [[l, r], ...]} with edges in
lexicographic order.  DIMACS-like: header line "p bip L R E" followed by
one "e l r" line per edge, 1-based.  Both round-trip bit-exactly.
"""

from __future__ import annotations

import json

from .bipartite import BipartiteGraph, GraphError


def to_json_dict(g: BipartiteGraph) -> dict:
    return {"left": g.left_size, "right": g.right_size,
            "edges": [[l, r] for l, r in g.edges()]}


def from_json_dict(d: dict) -> BipartiteGraph:
    try:
        return BipartiteGraph.from_edges(int(d["left"]), int(d["right"]),
                                         [(int(l), int(r)) for l, r in d["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"bad JSON graph: {exc}") from exc


def to_json(g: BipartiteGraph) -> str:
    return json.dumps(to_json_dict(g), separators=(",", ":"))


def from_json(text: str) -> BipartiteGraph:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"bad JSON graph: {exc}") from exc
    return from_json_dict(d)


def to_dimacs(g: BipartiteGraph) -> str:
    lines = [f"p bip {g.left_size} {g.right_size} {g.edge_count}"]
    lines.extend(f"e {l + 1} {r + 1}" for l, r in g.edges())
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> BipartiteGraph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if header is not None:
                raise GraphError(f"line {lineno}: duplicate header")
            if len(fields) != 5 or fields[1] != "bip":
                raise GraphError(f"line {lineno}: expected 'p bip L R E'")
            header = (int(fields[2]), int(fields[3]), int(fields[4]))
        elif fields[0] == "e":
            if header is None:
                raise GraphError(f"line {lineno}: edge before header")
            if len(fields) != 3:
                raise GraphError(f"line {lineno}: expected 'e l r'")
            edges.append((int(fields[1]) - 1, int(fields[2]) - 1))
        else:
            raise GraphError(f"line {lineno}: unknown record {fields[0]!r}")
    if header is None:
        raise GraphError("missing 'p bip' header")
    left, right, ecount = header
    if len(edges) != ecount:
        raise GraphError(f"header announces {ecount} edges, found {len(edges)}")
    return BipartiteGraph.from_edges(left, right, edges)


def parse_graph(text: str) -> BipartiteGraph:
    """Parse either format, sniffing by the first non-blank character."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json(text)
    return from_dimacs(text)
