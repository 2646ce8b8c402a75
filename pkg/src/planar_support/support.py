"""Support checks and the lift from a representative support to a full one."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable

import networkx as nx

from .hypergraph import Hypergraph, covers, twin_classes, vertex_order
from .plane_graph import EmbeddingError, PlaneGraph, is_triangulated_disk

Vertex = Hashable


@dataclass(frozen=True)
class SupportVerdict:
    ok: bool
    # (hyperedge index, number of connected pieces of G[e])
    violations: tuple[tuple[int, int], ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def _as_nx(G) -> nx.Graph:
    return G.to_networkx() if isinstance(G, PlaneGraph) else G


def _pieces(g: nx.Graph, e) -> int:
    return nx.number_connected_components(g.subgraph(e))


def is_support(G, H: Hypergraph) -> SupportVerdict:
    """Does every hyperedge of H induce a connected subgraph of G?"""
    g = _as_nx(G)
    if set(g.nodes) != set(H.vertices):
        missing = set(H.vertices) - set(g.nodes)
        extra = set(g.nodes) - set(H.vertices)
        raise ValueError(
            f"vertex sets differ: missing {vertex_order(missing)}, extra {vertex_order(extra)}"
        )
    bad = []
    for j, e in enumerate(H.edges):
        k = _pieces(g, e)
        if k != 1:
            bad.append((j, k))
    return SupportVerdict(not bad, tuple(bad))


def representatives_cover(W, H: Hypergraph) -> bool:
    """Every vertex of H outside W is covered by some vertex of W."""
    keep = set(W)
    inc = {w: H.incidence(w) for w in keep}
    for u in H.vertices:
        if u in keep:
            continue
        need = H.incidence(u)
        if not any(need <= s for s in inc.values()):
            return False
    return True


def is_representative_support(G, H: Hypergraph) -> bool:
    """G is a support of H[V(G)] (H minus the missing vertices) and every
    missing vertex is covered by a vertex of G."""
    g = _as_nx(G)
    W = set(g.nodes)
    unknown = W - set(H.vertices)
    if unknown:
        raise ValueError(f"graph has vertices outside H: {vertex_order(unknown)}")
    if not representatives_cover(W, H):
        return False
    for e in H.edges:
        part = e & W
        if len(part) >= 2 and _pieces(g, part) != 1:
            return False
    return True


def _coverer(H: Hypergraph, u: Vertex, present: set, twin_of: dict) -> Vertex:
    twins = [v for v in twin_of[u] if v in present and v != u]
    if twins:
        return twins[0]
    options = [v for v in vertex_order(present) if covers(H, v, u)]
    if not options:
        raise ValueError(f"no vertex of the support covers {u!r}")
    return options[0]


def _attachment_corner(G: PlaneGraph, host: Vertex) -> Vertex:
    """Neighbour after which a pendant vertex is inserted into ``host``'s rotation.

    L1 hosts attach into the outer face; deeper hosts into the first face
    (in face order) that also touches the previous layer.
    """
    lay = G.layer_decomposition.layer_of
    if G.degree(host) == 0:
        return None
    target = None
    if lay[host] == 1:
        target = G.outer_face
    else:
        for i, walk in enumerate(G.face_darts):
            if i == G.outer_face:
                continue
            vs = [d[0] for d in walk]
            if host in vs and any(lay[x] == lay[host] - 1 for x in vs):
                target = i
                break
    if target is None:
        raise EmbeddingError(f"no face of {host!r} reaches the previous layer")
    for d in G.face_darts[target]:
        if d[1] == host:
            # the corner at host between the incoming dart d and the next dart
            return d[0]
    raise EmbeddingError("face walk does not pass through host")


def extend_representative(G: PlaneGraph, H: Hypergraph) -> PlaneGraph:
    """Attach each vertex of H missing from G as a leaf of a vertex covering it.

    The result is a support of H with no more layers than G.
    """
    if not is_triangulated_disk(G) and G.n >= 3:
        raise EmbeddingError("representative support must be a triangulated disk")
    if not is_representative_support(G, H):
        raise ValueError("G is not a representative support of H")
    present = set(G.vertices)
    parts = twin_classes(H)
    twin_of = {v: parts.members(v) for v in H.vertices}
    rot = {v: list(n) for v, n in G.rotation.items()}
    corner = {}
    order = list(G.vertices)
    for u in H.vertices:
        if u in present:
            continue
        host = _coverer(H, u, present, twin_of)
        if host not in corner:
            corner[host] = _attachment_corner(G, host)
        p = corner[host]
        nbrs = rot[host]
        if p is None:
            nbrs.append(u)
        else:
            nbrs.insert(nbrs.index(p) + 1, u)
        rot[u] = [host]
        order.append(u)
    outer = G.outer_dart
    if outer is None:
        first = order[0]
        outer = (first, rot[first][0]) if rot[first] else None
    F = PlaneGraph(rot, outer, [v for v in H.vertices if v in set(order)])
    return F
