"""Glue the A side of one separator to the B side of a later one.

The embedded result is built by rotation surgery. Vertices off the separator
keep their rotations, relabelled (and mirrored when the two separators run in
opposite senses). Each merged separator vertex takes the A-arc of its
rotation from the first triple and the B-arc from the second one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from .plane_graph import EmbeddingError, PlaneGraph
from .separators.types import CYCLE, SeparatorTriple, WfsSequence

Vertex = Hashable

_OFF = object()


@dataclass(frozen=True)
class GlueResult:
    graph: PlaneGraph
    # original id (from A_i or B_j) -> id in the glued graph
    vertex_map: dict
    i: int
    j: int

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "vertex_map": {str(k): str(v) for k, v in self.vertex_map.items()}}


def _curve(T: SeparatorTriple) -> tuple:
    return T.cycle_order() if T.shape == CYCLE else T.inner


def _a_on_left(G: PlaneGraph, T: SeparatorTriple) -> bool:
    """Does A - S lie to the left of the separator traversed in index order?"""
    curve = _curve(T)
    closed = T.shape == CYCLE
    darts = list(zip(curve, curve[1:]))
    if closed:
        darts.append((curve[-1], curve[0]))
    S = T.separator
    only_a, only_b = T.A - S, T.B - S
    for a, b in darts:
        for d, left in (((a, b), True), ((b, a), False)):
            f = G.face_of_dart(d)
            if f == G.outer_face:
                continue
            side = {v for v in G.face_vertices(f)} - S
            if side & only_a:
                return left
            if side & only_b:
                return not left
    raise EmbeddingError("cannot tell the sides of the separator apart")


def _neighbours_on_curve(T: SeparatorTriple) -> dict:
    curve = _curve(T)
    k = len(curve)
    out = {}
    for idx, v in enumerate(curve):
        if T.shape == CYCLE:
            out[v] = (curve[idx - 1], curve[(idx + 1) % k])
        else:
            out[v] = (curve[idx - 1] if idx > 0 else None, curve[idx + 1] if idx + 1 < k else None)
    return out


def _from(rot: list, start) -> list:
    i = rot.index(start)
    return rot[i + 1 :] + rot[:i]


def glue(G: PlaneGraph, seq: WfsSequence, i: int, j: int) -> GlueResult:
    """G(T_i ⋈ T_j) for 1-based indices ``i <= j``."""
    t = len(seq)
    if not (1 <= i <= j <= t):
        raise IndexError(f"need 1 <= i <= j <= {t}, got i={i}, j={j}")
    Ti, Tj = seq[i - 1], seq[j - 1]
    if i == j:
        return GlueResult(G, {v: v for v in G.vertices}, i, j)
    Si, Sj = Ti.S, Tj.S
    partner = dict(zip(Sj, Si))
    keep_a = Ti.A
    keep_b = Tj.B - Tj.separator
    vmap = {v: v for v in keep_a}
    vmap.update({v: v for v in keep_b})
    vmap.update(partner)

    if Ti.A == Ti.separator or Tj.B == Tj.separator:
        return _degenerate(G, Ti, Tj, vmap, i, j)

    oi, oj = _a_on_left(G, Ti), _a_on_left(G, Tj)
    mirror = oi != oj

    def b_rot(v) -> list:
        # neighbours outside B_j only occur at separator vertices; they are
        # dropped later, so give them placeholders that cannot collide
        r = [vmap[u] if u in Tj.B else (_OFF, u) for u in G.rotation[v]]
        return r[::-1] if mirror else r

    rot: dict = {}
    for v in keep_a - Ti.separator:
        rot[v] = list(G.rotation[v])
    for v in keep_b:
        rot[v] = b_rot(v)

    nb_i = _neighbours_on_curve(Ti)
    a_only = Ti.A - Ti.separator
    b_only = Tj.B - Tj.separator
    for x, y in zip(Si, Sj):
        prev, nxt = nb_i[x]
        ri = list(G.rotation[x])
        rj = b_rot(y)
        anchor = prev if prev is not None else nxt
        a_part = [u for u in _from(ri, anchor) if u in a_only]
        b_part = [u for u in _from(rj, anchor) if u in b_only]
        if prev is not None and nxt is not None:
            rot[x] = [prev] + (a_part + [nxt] + b_part if oi else b_part + [nxt] + a_part)
        elif prev is None and nxt is None:
            rot[x] = a_part + b_part
        elif prev is None:
            # first vertex of a path: the left side ends the list after v_2
            rot[x] = [nxt] + (b_part + a_part if oi else a_part + b_part)
        else:
            rot[x] = [prev] + (a_part + b_part if oi else b_part + a_part)

    verts = [v for v in G.vertices if v in keep_a or v in keep_b]
    H = PlaneGraph(rot, _outer_dart(G, Ti, Tj, vmap, rot), verts)
    if not H.euler_ok():
        raise AssertionError("glued rotation system is not planar")
    return GlueResult(H, vmap, i, j)


def _degenerate(G: PlaneGraph, Ti: SeparatorTriple, Tj: SeparatorTriple, vmap: dict, i: int, j: int) -> GlueResult:
    """One side is just the separator, so the glue is a relabelled subgraph."""
    if Ti.A == Ti.separator:
        keep = Tj.B
        H = G.restrict(keep).relabeled({v: vmap[v] for v in keep})
    else:
        H = G.restrict(Ti.A)
    return GlueResult(H, vmap, i, j)


def _outer_dart(G: PlaneGraph, Ti, Tj, vmap: dict, rot: dict):
    walk = G.outer_walk()
    darts = [(walk[k], walk[(k + 1) % len(walk)]) for k in range(len(walk))]
    Si, Sj = Ti.separator, Tj.separator
    for a, b in darts:
        if a in Ti.A and b in Ti.A and not (a in Si and b in Si):
            return (a, b)
    for a, b in darts:
        if a in Tj.B and b in Tj.B and not (a in Sj and b in Sj):
            d = (vmap[a], vmap[b])
            if d[1] in rot.get(d[0], ()):
                return d
    for a, b in darts:
        if a in Ti.A and b in Ti.A:
            return (a, b)
    raise EmbeddingError("no outer dart survives the glue")


def verify_glue_layers(G: PlaneGraph, result: GlueResult) -> bool:
    """Each surviving vertex is on a layer no deeper than in G, and the
    glued graph has no more layers than G."""
    H = result.graph
    if H.n == 0:
        return True
    before = G.layer_decomposition.layer_of
    after = H.layer_decomposition.layer_of
    for orig, new in result.vertex_map.items():
        if after[new] > before[orig]:
            return False
    return H.r <= G.r


def surviving_sequence(seq: WfsSequence, result: GlueResult) -> WfsSequence:
    """Triples 1..i and j+1..t of ``seq`` rewritten for the glued graph."""
    m = result.vertex_map
    i, j = result.i, result.j
    Ti, Tj = seq[i - 1], seq[j - 1]
    if i == j:
        return WfsSequence(seq.triples, result.graph, seq.provenance)
    tail_b = Tj.B - Tj.separator
    out = []
    for T in seq.triples[:i]:
        B = frozenset(m[v] for v in (T.B & Ti.A) | tail_b)
        out.append(SeparatorTriple(T.A, T.inner, B, T.shape, T.vstar, T.vdagger))
    for T in seq.triples[j:]:
        A = Ti.A | frozenset(m[v] for v in T.A & Tj.B)
        B = frozenset(m[v] for v in T.B)
        anchors = (m[T.vstar], m[T.vdagger]) if T.shape == CYCLE else (None, None)
        out.append(SeparatorTriple(A, tuple(m[v] for v in T.inner), B, T.shape, *anchors))
    return WfsSequence(tuple(out), result.graph, seq.provenance)
