"""Nice separations of a triangulated disk and the step from one to the next."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from ..hypergraph import vertex_order
from ..plane_graph import EmbeddingError, PlaneGraph, is_triangulated_disk
from .regions import Regions, blocks_of, largest_inner_block, potential
from .types import NiceSeparation

Vertex = Hashable


class SeparationExhausted(Exception):
    """No further separation: the potential fell below ℓ or B - A is empty."""


class NotTriangular(ValueError):
    pass


class _Context:
    def __init__(self, G: PlaneGraph) -> None:
        if not is_triangulated_disk(G):
            raise EmbeddingError("expected a triangulated disk")
        self.G = G
        self.regions = Regions(G)
        self.L1 = G.layer_decomposition[1]
        self.V = frozenset(G.vertices)
        self.ell = largest_inner_block(G)
        self.rank = {v: i for i, v in enumerate(vertex_order(G.vertices))}


def context(G: PlaneGraph) -> _Context:
    ctx = G.__dict__.get("_separation_context")
    if ctx is None:
        ctx = _Context(G)
        G.__dict__["_separation_context"] = ctx
    return ctx


def _canon(ctx: _Context, witness: tuple) -> tuple:
    if ctx.rank[witness[0]] > ctx.rank[witness[-1]]:
        return tuple(reversed(witness))
    return tuple(witness)


def make_separation(G: PlaneGraph, A, B, witness) -> NiceSeparation:
    return NiceSeparation(frozenset(A), frozenset(B), _canon(context(G), tuple(witness)))


def initial_separation(G: PlaneGraph) -> NiceSeparation:
    """Trivial separation on the lexicographically first outer-face edge:
    A is that edge and B is everything."""
    rank = context(G).rank
    walk = G.outer_walk()
    pairs = [tuple(sorted((walk[i - 1], walk[i]), key=rank.__getitem__)) for i in range(len(walk))]
    u, v = min(pairs, key=lambda e: (rank[e[0]], rank[e[1]]))
    return make_separation(G, {u, v}, G.vertices, (u, v))


def _split(ctx: _Context, curve: tuple, probe) -> NiceSeparation:
    A, B = ctx.regions.side_containing(curve, probe)
    return NiceSeparation(A, B, _canon(ctx, curve))


def _best(ctx: _Context, cands: list[NiceSeparation]) -> NiceSeparation:
    def key(s: NiceSeparation):
        return (-potential(ctx.G, s.B), s.order, tuple(ctx.rank[v] for v in s.witness))

    return min(cands, key=key)


def _third(G: PlaneGraph, dart: tuple) -> Vertex:
    walk = G.face_darts[G.face_of_dart(dart)]
    if len(walk) != 3:
        raise EmbeddingError("expected a triangular face")
    return next(d[0] for d in walk if d[0] not in dart)


def next_nice_separation(G: PlaneGraph, sep: NiceSeparation, ell: int | None = None) -> NiceSeparation:
    """One step of the inductive construction: A grows, B shrinks, and the
    potential of B drops by at most a factor ℓ (after subtracting one)."""
    ctx = context(G)
    ell = ctx.ell if ell is None else ell
    A, B = sep.A, sep.B
    if potential(G, B) < ell or not (B - A):
        raise SeparationExhausted()
    if sep.order == 2:
        nxt = _step_edge(ctx, sep)
    else:
        nxt = _step_path(ctx, sep)
    if not (A <= nxt.A and nxt.B <= B) or (nxt.A | nxt.B) != ctx.V:
        raise AssertionError("separation step broke nesting")
    return nxt


def _step_edge(ctx: _Context, sep: NiceSeparation) -> NiceSeparation:
    G = ctx.G
    u, v = sep.witness
    only_b = sep.B - sep.A
    w = None
    for d in ((u, v), (v, u)):
        f = G.face_of_dart(d)
        if f == G.outer_face:
            continue
        x = _third(G, d)
        if x in only_b:
            w = x
            break
    if w is None:
        raise SeparationExhausted()
    if w in ctx.L1:
        cands = [_split(ctx, (u, w), [v]), _split(ctx, (v, w), [u])]
        return _best(ctx, cands)
    return make_separation(G, sep.A | {w}, sep.B, (u, w, v))


def _step_path(ctx: _Context, sep: NiceSeparation) -> NiceSeparation:
    G = ctx.G
    x, m, y = sep.witness
    only_b = sep.B - sep.A
    nbrs = [z for z in G.rotation[m] if z in only_b]
    if not nbrs:
        return make_separation(G, sep.A, sep.B - {m}, (x, y))
    on_l1 = [z for z in nbrs if z in ctx.L1]
    if on_l1:
        cands = []
        for z in on_l1:
            cands.append(_split(ctx, (x, m, z), [y]))
            cands.append(_split(ctx, (z, m, y), [x]))
        return _best(ctx, cands)
    if len(nbrs) == 1:
        z = nbrs[0]
        return make_separation(G, sep.A | {z}, sep.B - {m}, (x, z, y))
    return _block_sweep(ctx, sep, set(nbrs))


def _block_sweep(ctx: _Context, sep: NiceSeparation, nbrs: set) -> NiceSeparation:
    G = ctx.G
    x, m, y = sep.witness
    inner = [v for v in sep.B if v not in ctx.L1]
    C = None
    for b in blocks_of(G, inner):
        if m in b and len(b) >= 3 and any(G.has_edge(a, c) for a in nbrs & b for c in nbrs & b if a != c):
            C = b
            break
    if C is None:
        raise AssertionError("two adjacent B-neighbours must share a block with the middle vertex")
    cycle = G.restrict(C).outer_walk()
    k = len(cycle)
    probe = [a for a in sep.A]
    cands = []
    for i in range(k):
        a, b, c = cycle[i - 1], cycle[i], cycle[(i + 1) % k]
        if b == m:
            continue
        ve, ve2 = _third(G, (a, b)), _third(G, (b, c))
        if ve == ve2:
            continue
        curve = (ve, b, ve2)
        cand = _split(ctx, curve, [p for p in probe if p not in curve])
        if sep.A < cand.A and cand.B < sep.B:
            cands.append(cand)
    if not cands:
        raise AssertionError("block sweep found no separation")
    return _best(ctx, cands)


# ----------------------------------------------------------------------
# bases of triangular separations


@dataclass(frozen=True)
class Base:
    bases: tuple[NiceSeparation, ...]
    direction: str | None  # "left", "right", or None for L1-trivial


def base_of(G: PlaneGraph, sep: NiceSeparation) -> Base:
    """The order-two separation(s) on the L1 edge of a triangular separation."""
    ctx = context(G)
    if not sep.is_triangular(G):
        raise NotTriangular("base_of needs a triangular separation")
    u, m, w = sep.witness
    if not sep.is_l1_nontrivial(G):
        edge = frozenset((u, w))
        return Base(
            (make_separation(G, ctx.V, edge, (u, w)), make_separation(G, edge, ctx.V, (u, w))),
            None,
        )
    R1, R2 = ctx.regions.side_containing((u, w), [m])
    if sep.A <= R1:
        return Base((make_separation(G, R1, R2, (u, w)),), "left")
    return Base((make_separation(G, R2, R1, (u, w)),), "right")


def sweep(G: PlaneGraph, start: NiceSeparation | None = None, ell: int | None = None) -> list[NiceSeparation]:
    """All separations produced by repeated steps from the trivial start."""
    ctx = context(G)
    ell = ctx.ell if ell is None else ell
    seps = [start or initial_separation(G)]
    while True:
        try:
            nxt = next_nice_separation(G, seps[-1], ell)
        except SeparationExhausted:
            return seps
        if (nxt.A, nxt.B) == (seps[-1].A, seps[-1].B):
            raise AssertionError("separation step made no progress")
        seps.append(nxt)
