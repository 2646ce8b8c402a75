"""Short-width separator sequences extracted from a sweep of nice separations.

The sweep is cut into maximal segments: hinged runs (consecutive triangular
separations on one L1 edge) split by the direction of their base, and
stretches of non-triangular separations. Four extractions turn segments
into a well-formed sequence; every applicable one is built and validated,
and the longest valid result wins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..plane_graph import EmbeddingError, PlaneGraph, is_triangulated_disk
from .nice import Base, base_of, context, sweep
from .regions import largest_inner_block, potential
from .types import CYCLE, PATH, NiceSeparation, SeparatorTriple, WfsSequence, order_path
from .validate import validate_wfss

LEFT = "homogeneous-left"
RIGHT = "homogeneous-right"
TRIVIAL = "l1-trivial-hinged"
PLAIN = "non-triangular"


@dataclass(frozen=True)
class Segment:
    kind: str
    start: int  # index into the sweep
    stop: int  # exclusive
    edge: frozenset | None = None
    base: Base | None = None

    def __len__(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True)
class SeqClassification:
    separations: tuple[NiceSeparation, ...]
    segments: tuple[Segment, ...]

    def of_kind(self, *kinds: str) -> list[Segment]:
        return [s for s in self.segments if s.kind in kinds]

    def members(self, seg: Segment) -> tuple[NiceSeparation, ...]:
        return self.separations[seg.start : seg.stop]


def classify_sequence(G: PlaneGraph, seps: list[NiceSeparation]) -> SeqClassification:
    kinds = []
    for s in seps:
        if not s.is_triangular(G):
            kinds.append((PLAIN, None, None))
            continue
        b = base_of(G, s)
        kind = {"left": LEFT, "right": RIGHT, None: TRIVIAL}[b.direction]
        kinds.append((kind, s.l1_part(), b))
    segments = []
    i = 0
    while i < len(seps):
        kind, edge, b = kinds[i]
        j = i + 1
        while j < len(seps) and kinds[j][0] == kind and kinds[j][1] == edge:
            j += 1
        segments.append(Segment(kind, i, j, edge, b))
        i = j
    return SeqClassification(tuple(seps), tuple(segments))


def length_target(G: PlaneGraph) -> float:
    """√((log_ℓ q(V) + 1)/2) − 1, the guaranteed length."""
    ell = largest_inner_block(G)
    k = potential(G, G.vertices)
    if k < 1:
        return -1.0
    return math.sqrt((math.log(k, ell) + 1) / 2) - 1


# ----------------------------------------------------------------------
# extractions


def _cycle_triple(G: PlaneGraph, A, sep: NiceSeparation, B) -> SeparatorTriple:
    u, m, w = sep.witness
    rank = context(G).rank
    vstar, vdag = (u, w) if rank[u] < rank[w] else (w, u)
    return SeparatorTriple(A, (m,), B, CYCLE, vstar, vdag)


def _homogeneous(G: PlaneGraph, cls: SeqClassification, seg: Segment) -> list[SeparatorTriple]:
    (C, D) = _pair(seg.base.bases[0])
    members = cls.members(seg)
    if seg.kind == LEFT:
        extra = D - C
        return [_cycle_triple(G, s.A | extra, s, s.B - extra) for s in members]
    extra = C - D
    return [_cycle_triple(G, s.B | extra, s, s.A - extra) for s in reversed(members)]


def _pair(sep: NiceSeparation) -> tuple[frozenset, frozenset]:
    return sep.A, sep.B


def _trivial_hinged(G: PlaneGraph, cls: SeqClassification, seg: Segment) -> list[SeparatorTriple]:
    members = cls.members(seg)
    L1 = G.layer_decomposition[1]
    if L1 <= members[0].A:
        return [_cycle_triple(G, s.A, s, s.B) for s in members]
    return [_cycle_triple(G, s.B, s, s.A) for s in reversed(members)]


def _bases(G: PlaneGraph, cls: SeqClassification) -> list[SeparatorTriple]:
    seen = set()
    out = []
    for seg in cls.of_kind(LEFT, RIGHT):
        b = seg.base.bases[0]
        key = (b.A, b.B)
        if key in seen:
            continue
        seen.add(key)
        out.append(SeparatorTriple(b.A, order_path(G, b.witness, b.A, b.B), b.B))
    return out


def _plain(G: PlaneGraph, cls: SeqClassification) -> list[SeparatorTriple]:
    by_order: dict[int, list[SeparatorTriple]] = {2: [], 3: []}
    seen = set()
    for s in cls.separations:
        if s.is_triangular(G) or (s.A, s.B) in seen:
            continue
        seen.add((s.A, s.B))
        by_order[s.order].append(SeparatorTriple(s.A, order_path(G, s.witness, s.A, s.B), s.B))
    two, three = by_order[2], by_order[3]
    return two if len(two) >= len(three) else three


@dataclass
class Extraction:
    case: str
    triples: list[SeparatorTriple]
    valid: bool = field(default=True)


def extractions(G: PlaneGraph, cls: SeqClassification, t: float) -> list[Extraction]:
    """Every extraction whose precondition holds, validated."""
    out = []
    homo = cls.of_kind(LEFT, RIGHT)
    for seg in homo:
        if len(seg) >= t:
            out.append(Extraction("homogeneous run", _homogeneous(G, cls, seg)))
    for seg in cls.of_kind(TRIVIAL):
        if len(seg) >= t:
            out.append(Extraction("trivial hinged run", _trivial_hinged(G, cls, seg)))
    if len(homo) >= 2 * t:
        out.append(Extraction("run bases", _bases(G, cls)))
    out.append(Extraction("plain separations", _plain(G, cls)))
    for ex in out:
        ex.valid = validate_wfss(G, ex.triples).ok
    return out


def build_small_sepseq(G: PlaneGraph) -> WfsSequence:
    """A width-2 or width-3 sequence from one sweep of nice separations."""
    if G.n < 3:
        raise ValueError("need at least three vertices")
    if not is_triangulated_disk(G):
        raise EmbeddingError("expected a triangulated disk")
    seps = sweep(G)
    cls = classify_sequence(G, seps)
    t = length_target(G)
    options = [ex for ex in extractions(G, cls, t) if ex.valid]
    if not options:
        raise AssertionError("no extraction produced a valid sequence")
    best = max(options, key=lambda ex: len(ex.triples))  # first one on ties
    return WfsSequence(tuple(best.triples), G, best.case)


__all__ = [
    "LEFT",
    "RIGHT",
    "TRIVIAL",
    "PLAIN",
    "Segment",
    "SeqClassification",
    "classify_sequence",
    "length_target",
    "extractions",
    "build_small_sepseq",
]
