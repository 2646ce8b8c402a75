"""Separator triples, sequences and nice separations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Sequence

from ..hypergraph import vertex_order
from ..plane_graph import PlaneGraph

Vertex = Hashable

PATH = "path"
CYCLE = "cycle"


@dataclass(frozen=True)
class SeparatorTriple:
    """One separator ``(A, S, B)``.

    ``inner`` holds the indexed vertices ``v_1 .. v_p'``. For a path this is
    the whole separator. For a cycle the anchors ``vstar`` and ``vdagger``
    close it up; they may coincide.
    """

    A: frozenset
    inner: tuple
    B: frozenset
    shape: str = PATH
    vstar: Vertex | None = None
    vdagger: Vertex | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        object.__setattr__(self, "inner", tuple(self.inner))
        if self.shape not in (PATH, CYCLE):
            raise ValueError(f"unknown separator shape {self.shape!r}")
        if self.shape == CYCLE and (self.vstar is None or self.vdagger is None):
            raise ValueError("cycle separators need both anchors")
        if self.shape == PATH and (self.vstar is not None or self.vdagger is not None):
            raise ValueError("path separators carry no anchors")

    @property
    def anchors(self) -> tuple:
        if self.shape == PATH:
            return ()
        if self.vstar == self.vdagger:
            return (self.vstar,)
        return (self.vdagger, self.vstar)

    @property
    def S(self) -> tuple:
        """All separator vertices, indexed: ``v_1 .. v_p'`` then the anchors."""
        return self.inner + self.anchors

    @property
    def separator(self) -> frozenset:
        return frozenset(self.S)

    @property
    def p(self) -> int:
        return len(self.separator)

    @property
    def p_prime(self) -> int:
        return len(self.inner)

    def cycle_order(self) -> tuple:
        """The cycle ``(v*, v_1, .., v_p', v†)`` without repeating v*."""
        if self.shape != CYCLE:
            raise ValueError("not a cycle separator")
        if self.vstar == self.vdagger:
            return (self.vstar,) + self.inner
        return (self.vstar,) + self.inner + (self.vdagger,)

    def to_json(self) -> dict:
        doc: dict[str, Any] = {
            "A": [str(v) for v in vertex_order(self.A)],
            "S": [str(v) for v in self.inner],
            "B": [str(v) for v in vertex_order(self.B)],
            "shape": self.shape,
        }
        if self.shape == CYCLE:
            doc["anchors"] = {"vstar": str(self.vstar), "vdagger": str(self.vdagger)}
        return doc

    @classmethod
    def from_json(cls, doc: dict, lookup: dict | None = None) -> "SeparatorTriple":
        get = (lambda x: lookup[x]) if lookup is not None else (lambda x: x)
        anchors = doc.get("anchors") or {}
        shape = doc.get("shape", PATH)
        return cls(
            frozenset(map(get, doc["A"])),
            tuple(map(get, doc["S"])),
            frozenset(map(get, doc["B"])),
            shape,
            get(anchors["vstar"]) if shape == CYCLE else None,
            get(anchors["vdagger"]) if shape == CYCLE else None,
        )


@dataclass(frozen=True)
class WfsSequence:
    triples: tuple[SeparatorTriple, ...]
    host: PlaneGraph | None = field(default=None, compare=False)
    provenance: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "triples", tuple(self.triples))

    @property
    def length(self) -> int:
        return len(self.triples)

    @property
    def width(self) -> int:
        return self.triples[0].p if self.triples else 0

    @property
    def shape(self) -> str | None:
        return self.triples[0].shape if self.triples else None

    def __len__(self) -> int:
        return len(self.triples)

    def __getitem__(self, i: int) -> SeparatorTriple:
        return self.triples[i]

    def __iter__(self):
        return iter(self.triples)

    def to_json(self) -> list[dict]:
        return [t.to_json() for t in self.triples]


def sequence_from_json(doc: Any, G: PlaneGraph | None = None) -> WfsSequence:
    """Read a sequence document: a bare list of triples or an object with a
    ``sequence`` list. Ids are mapped onto the vertices of ``G`` by their
    string form when ``G`` is given."""
    items = doc.get("sequence") if isinstance(doc, dict) else doc
    if not isinstance(items, list):
        raise ValueError("sequence JSON must be a list of triples")
    lookup = None
    if G is not None:
        lookup = {str(v): v for v in G.vertices}
    triples = []
    for k, item in enumerate(items, start=1):
        try:
            triples.append(SeparatorTriple.from_json(item, lookup))
        except KeyError as exc:
            raise ValueError(f"triple {k}: unknown vertex or missing field {exc}") from None
    return WfsSequence(tuple(triples), G)


@dataclass(frozen=True)
class NiceSeparation:
    """A nice separation of order two (an L1 edge) or three (a path
    ``u - m - w`` with ``u, w`` on L1 and ``m`` off it)."""

    A: frozenset
    B: frozenset
    witness: tuple

    @property
    def order(self) -> int:
        return len(self.witness)

    @property
    def S(self) -> frozenset:
        return self.A & self.B

    def l1_part(self) -> frozenset:
        """The two L1 vertices of the separator."""
        return frozenset((self.witness[0], self.witness[-1]))

    def is_triangular(self, G: PlaneGraph) -> bool:
        return self.order == 3 and G.has_edge(self.witness[0], self.witness[2])

    def is_l1_nontrivial(self, G: PlaneGraph) -> bool:
        L1 = G.layer_decomposition[1]
        return bool((self.A - self.B) & L1) and bool((self.B - self.A) & L1)


def sequence_of(triples: Iterable[SeparatorTriple], G: PlaneGraph, provenance: str = "") -> WfsSequence:
    return WfsSequence(tuple(triples), G, provenance)


def order_path(G: PlaneGraph, path: Sequence, A: frozenset, B: frozenset) -> tuple:
    """Orient a separator path so that ``v_1`` starts the L1 arc of A.

    The L1 arc of A runs along the outer walk from one endpoint to the other
    through the vertices of A - B; when that arc has no interior the arc of
    B decides instead.
    """
    walk = G.outer_walk()
    pos = {v: i for i, v in enumerate(walk)}
    a, b = path[0], path[-1]
    k = len(walk)
    ia, ib = pos[a], pos[b]
    fwd = [walk[(ia + s) % k] for s in range(1, (ib - ia) % k)]  # interior of a -> b
    bwd = [walk[(ib + s) % k] for s in range(1, (ia - ib) % k)]  # interior of b -> a
    only_a = A - B
    only_b = B - A
    if fwd and all(v in only_a for v in fwd):
        start = a
    elif bwd and all(v in only_a for v in bwd):
        start = b
    elif fwd and all(v in only_b for v in fwd):
        start = b
    elif bwd and all(v in only_b for v in bwd):
        start = a
    else:
        start = a if not fwd else b
    return tuple(path) if start == a else tuple(reversed(path))
