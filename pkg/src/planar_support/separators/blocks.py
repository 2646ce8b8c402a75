"""Lift a sequence built inside a block of G - L1 to a sequence of G."""

from __future__ import annotations

from typing import Hashable, Iterable

from ..hypergraph import vertex_order
from ..plane_graph import EmbeddingError, PlaneGraph, is_triangulated_disk
from .nice import context
from .types import CYCLE, PATH, SeparatorTriple, WfsSequence

Vertex = Hashable


def _induced_cycle(G: PlaneGraph, cyc: tuple) -> bool:
    """Is ``cyc`` (in cyclic order) an induced cycle of G?"""
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        return False
    want = {frozenset(e) for e in zip(cyc, cyc[1:] + cyc[:1])}
    s = set(cyc)
    have = {frozenset((u, w)) for u in cyc for w in G.rotation[u] if w in s}
    return want == have


def cycle_vertices(G: PlaneGraph, path: tuple, L1: frozenset) -> list:
    """L1 vertices closing ``path`` into an induced cycle."""
    if len(path) < 2:
        return []
    a, b = path[0], path[-1]
    common = set(G.rotation[a]) & set(G.rotation[b]) & L1
    return [v for v in vertex_order(common) if _induced_cycle(G, (v,) + tuple(path))]


def cycle_pairs(G: PlaneGraph, path: tuple, L1: frozenset) -> list[tuple]:
    """Adjacent L1 pairs ``(x, y)`` with ``x`` next to the first path vertex
    and ``y`` next to the last, closing the path into an induced cycle."""
    a, b = path[0], path[-1]
    out = []
    for x in vertex_order(set(G.rotation[a]) & L1):
        for y in G.rotation[x]:
            if y in L1 and y != x and G.has_edge(y, b) and _induced_cycle(G, (x,) + tuple(path) + (y,)):
                out.append((x, y))
    return out


def _closed_sides(G: PlaneGraph, cyc: tuple) -> tuple[frozenset, frozenset]:
    """(side holding the outer face, the other side), both containing the cycle."""
    parts = context(G).regions.sides(cyc, closed=True)
    ring = frozenset(cyc)
    outside = parts[0] | ring
    inside = frozenset().union(*parts[1:]) | ring
    return outside, inside


def _as_vertex_set(C) -> frozenset:
    return frozenset(C.vertices) if isinstance(C, PlaneGraph) else frozenset(C)


def extend_block_sequence(G: PlaneGraph, C, inner: Iterable[SeparatorTriple]) -> WfsSequence:
    """Turn a sequence of the block C of G - L1 into one of G."""
    if not is_triangulated_disk(G):
        raise EmbeddingError("expected a triangulated disk")
    if G.r < 2:
        raise ValueError("an outerplanar disk has no inner block to extend from")
    CV = _as_vertex_set(C)
    L1 = G.layer_decomposition[1]
    if CV & L1:
        raise ValueError("the block must avoid L1")
    inner = list(inner)
    if not inner:
        return WfsSequence((), G, "empty")
    if inner[0].shape == CYCLE:
        rest = frozenset(G.vertices) - CV
        out = [SeparatorTriple(T.A | rest, T.inner, T.B, CYCLE, T.vstar, T.vdagger) for T in inner]
        return WfsSequence(tuple(out), G, "inner cycles")
    return _from_paths(G, CV, inner, L1)


def _from_paths(G: PlaneGraph, CV: frozenset, inner: list[SeparatorTriple], L1: frozenset) -> WfsSequence:
    rank = context(G).rank
    buckets: dict[str, list[tuple[int, list]]] = {"cycle vertex": [], "cycle pair": [], "extended paths": []}
    for i, T in enumerate(inner):
        cv = cycle_vertices(G, T.inner, L1)
        if cv:
            buckets["cycle vertex"].append((i, cv))
            continue
        cp = cycle_pairs(G, T.inner, L1)
        if cp:
            buckets["cycle pair"].append((i, cp))
        else:
            buckets["extended paths"].append((i, []))
    case = max(("cycle vertex", "cycle pair", "extended paths"), key=lambda k: len(buckets[k]))  # first on ties
    chosen = buckets[case]
    if case == "extended paths":
        triples = _extended_paths(G, [inner[i] for i, _ in chosen], L1)
    else:
        tally: dict = {}
        for _, opts in chosen:
            for o in opts:
                tally[o] = tally.get(o, 0) + 1
        order = (lambda o: rank[o]) if case == "cycle vertex" else (lambda o: (rank[o[0]], rank[o[1]]))
        triples = []
        for anchor in sorted(tally, key=lambda o: (-tally[o], order(o))):
            if tally[anchor] <= len(triples):
                break
            found = _longest_chain([_anchored(G, inner[i].inner, anchor, case) for i, opts in chosen if anchor in opts])
            if len(found) > len(triples):
                triples = found
    return WfsSequence(tuple(triples), G, case)


def _anchored(G: PlaneGraph, path: tuple, anchor, case: str) -> SeparatorTriple:
    if case == "cycle vertex":
        vstar = vdag = anchor
        cyc = (anchor,) + path
    else:
        vstar, vdag = anchor
        cyc = (vstar,) + path + (vdag,)
    A, B = _closed_sides(G, cyc)
    return SeparatorTriple(A, path, B, CYCLE, vstar, vdag)


def _longest_chain(triples: list[SeparatorTriple]) -> list[SeparatorTriple]:
    """Longest subsequence with A strictly growing and B strictly shrinking.

    Cycles closed through L1 are nested, but those bounding a single face
    have nothing inside and can coincide; the chain drops such repeats.
    """
    ts = sorted(triples, key=lambda T: (len(T.A), -len(T.B)))
    best = [1] * len(ts)
    prev = [-1] * len(ts)
    for j in range(len(ts)):
        for i in range(j):
            if ts[i].A < ts[j].A and ts[i].B > ts[j].B and best[i] + 1 > best[j]:
                best[j], prev[j] = best[i] + 1, i
    if not ts:
        return []
    j = max(range(len(ts)), key=lambda k: (best[k], -k))
    out = []
    while j >= 0:
        out.append(ts[j])
        j = prev[j]
    return out[::-1]


def _extended_paths(G: PlaneGraph, paths: list[SeparatorTriple], L1: frozenset) -> list[SeparatorTriple]:
    ctx = context(G)

    def hand(v: Vertex) -> Vertex:
        opts = [u for u in G.rotation[v] if u in L1]
        if not opts:
            raise EmbeddingError(f"{v!r} has no neighbour on L1")
        return min(opts, key=ctx.rank.__getitem__)

    out = []
    for T in paths:
        path = (hand(T.inner[0]),) + T.inner + (hand(T.inner[-1]),)
        probe = [v for v in vertex_order(T.A - T.B)]
        if probe:
            A, B = ctx.regions.side_containing(path, probe)
        else:
            B, A = ctx.regions.side_containing(path, vertex_order(T.B - T.A))
        out.append(SeparatorTriple(A, path, B, PATH))
    return out
