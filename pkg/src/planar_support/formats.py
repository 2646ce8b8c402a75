"""Text formats: ``.hg`` hypergraphs, ``.pg`` plane graphs, sequence JSON.

``.hg``: ``#`` starts a comment; an optional ``vertices: v1 v2 ...`` line
declares the universe (it must precede all hyperedges); every other
non-blank line is one hyperedge given as whitespace-separated vertex ids.

``.pg``: ``outerface: v1 v2 ...`` gives the outer face walk; every other
line ``v: u1 u2 ...`` lists the neighbours of ``v`` in clockwise order.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Any, Iterable

from .hypergraph import Hypergraph, normalize
from .plane_graph import EmbeddingError, PlaneGraph

FORMAT_VERSION = "1"


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None, source: str = "") -> None:
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        where = source or "<input>"
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")

    def to_json(self) -> dict:
        return {"message": self.message, "line": self.line, "column": self.column, "source": self.source}


@dataclass(frozen=True)
class Diagnostic:
    line: int
    message: str


def sha256_of(data: str | bytes) -> str:
    if isinstance(data, str):
        data = data.encode()
    return hashlib.sha256(data).hexdigest()


def _tokens(line: str) -> list[tuple[int, str]]:
    """Whitespace-separated tokens with their 1-based columns."""
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((i + 1, line[i:j]))
        i = j
    return out


def _strip_comment(line: str) -> str:
    k = line.find("#")
    return line if k < 0 else line[:k]


def _check_id(tok: str, lineno: int, col: int, source: str) -> None:
    if ":" in tok:
        raise FormatError(f"unexpected ':' in vertex id {tok!r}", lineno, col + tok.index(":"), source)


# ----------------------------------------------------------------------
# hypergraphs


def parse_hg(text: str, source: str = "") -> tuple[Hypergraph, list[Diagnostic]]:
    """Parse ``.hg`` text; diagnostics report hyperedges dropped by normalization."""
    declared: list[str] | None = None
    edges: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        head = line.lstrip()
        if head.startswith("vertices:") or head.startswith("vertices :"):
            if declared is not None:
                raise FormatError("second 'vertices:' header", lineno, 1, source)
            if edges:
                raise FormatError("'vertices:' header after hyperedges", lineno, 1, source)
            offset = line.index(":") + 1
            declared = []
            for col, tok in _tokens(line[offset:]):
                _check_id(tok, lineno, col + offset, source)
                if tok in declared:
                    raise FormatError(f"vertex {tok!r} declared twice", lineno, col + offset, source)
                declared.append(tok)
            continue
        toks = _tokens(line)
        for col, tok in toks:
            _check_id(tok, lineno, col, source)
        if declared is not None:
            for col, tok in toks:
                if tok not in declared:
                    raise FormatError(f"vertex {tok!r} not declared in header", lineno, col, source)
        edges.append((lineno, [t for _, t in toks]))
    diags = []
    seen: set = set()
    for lineno, e in edges:
        s = frozenset(e)
        if len(s) < 2:
            diags.append(Diagnostic(lineno, "hyperedge of size <= 1 dropped"))
        elif s in seen:
            diags.append(Diagnostic(lineno, "duplicate hyperedge dropped"))
        seen.add(s)
    return normalize(declared, [e for _, e in edges]), diags


def emit_hg(H: Hypergraph) -> str:
    idx = {v: i for i, v in enumerate(H.vertices)}
    lines = ["vertices: " + " ".join(map(str, H.vertices))]
    for e in H.edges:
        lines.append(" ".join(str(v) for v in sorted(e, key=idx.__getitem__)))
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# plane graphs


def parse_pg(text: str, source: str = "") -> PlaneGraph:
    outer: list[str] | None = None
    outer_line = None
    rotation: dict[str, list[str]] = {}
    line_of: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        if ":" not in line:
            raise FormatError("expected 'vertex: neighbours' or 'outerface: walk'", lineno, 1, source)
        k = line.index(":")
        head = line[:k].strip()
        rest = _tokens(line[k + 1 :])
        for col, tok in rest:
            _check_id(tok, lineno, col + k + 1, source)
        if head == "outerface":
            if outer is not None:
                raise FormatError("second 'outerface:' line", lineno, 1, source)
            outer = [t for _, t in rest]
            outer_line = lineno
            continue
        if not head or any(c.isspace() for c in head):
            raise FormatError(f"bad vertex id {head!r}", lineno, 1, source)
        if head in rotation:
            raise FormatError(f"vertex {head!r} listed twice", lineno, 1, source)
        rotation[head] = [t for _, t in rest]
        line_of[head] = lineno
    for v, nbrs in rotation.items():
        for u in nbrs:
            if u not in rotation:
                raise FormatError(f"neighbour {u!r} of {v!r} has no rotation line", line_of[v], None, source)
    try:
        G = PlaneGraph(rotation)
    except EmbeddingError as exc:
        raise FormatError(str(exc), None, None, source) from None
    if not G.euler_ok():
        raise FormatError("rotation system is not planar", None, None, source)
    if outer is None:
        if G.edge_count:
            raise FormatError("missing 'outerface:' line", None, None, source)
        return G
    for u in outer:
        if u not in rotation:
            raise FormatError(f"outer face uses unknown vertex {u!r}", outer_line, None, source)
    if not G.edge_count:
        return G
    if len(outer) < 2:
        raise FormatError("outer face walk needs at least two vertices", outer_line, None, source)
    try:
        H = PlaneGraph(rotation, (outer[0], outer[1]))
    except EmbeddingError as exc:
        raise FormatError(str(exc), outer_line, None, source) from None
    if list(H.outer_walk()) != outer:
        raise FormatError("outer face walk does not match the rotation system", outer_line, None, source)
    return H


def emit_pg(G: PlaneGraph) -> str:
    lines = []
    if G.outer_dart is not None:
        lines.append("outerface: " + " ".join(map(str, G.outer_walk())))
    elif G.n:
        lines.append(f"outerface: {G.vertices[0]}")
    for v in G.vertices:
        nbrs = " ".join(map(str, G.rotation[v]))
        lines.append(f"{v}: {nbrs}".rstrip())
    return "\n".join(lines) + "\n"


def stringify_vertices(G: PlaneGraph) -> PlaneGraph:
    """Relabel every vertex by ``str`` so that the graph survives a text round trip."""
    mapping = {v: str(v) for v in G.vertices}
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("vertex ids collide after conversion to strings")
    return G.relabeled(mapping)


# ----------------------------------------------------------------------
# JSON


def envelope(command: str, inputs: dict[str, str] | None = None, **payload: Any) -> dict:
    """Common frame of every JSON document: version plus input digests."""
    doc = {"version": FORMAT_VERSION, "command": command, "inputs": inputs or {}}
    doc.update(payload)
    return doc


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def sorted_ids(vs: Iterable) -> list[str]:
    return sorted(map(str, vs))
