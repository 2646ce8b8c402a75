"""Sides of curves through a plane graph, and the potential function."""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

import networkx as nx

from ..plane_graph import PlaneGraph

Vertex = Hashable


class Regions:
    """Face adjacency of a fixed plane graph, ready for repeated side queries."""

    def __init__(self, G: PlaneGraph) -> None:
        self.G = G
        self.outer = G.outer_face
        self.face_vertices = [frozenset(d[0] for d in walk) for walk in G.face_darts]
        self.edge_faces = []
        for u, v in G.edges():
            self.edge_faces.append((frozenset((u, v)), G.face_of_dart((u, v)), G.face_of_dart((v, u))))

    def _groups(self, cut: set, with_outer: bool) -> list[tuple[frozenset, frozenset]]:
        nf = len(self.face_vertices)
        parent = list(range(nf))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e, f1, f2 in self.edge_faces:
            if e in cut:
                continue
            if not with_outer and (f1 == self.outer or f2 == self.outer):
                continue
            a, b = find(f1), find(f2)
            if a != b:
                parent[a] = b
        groups: dict[int, list[int]] = {}
        for f in range(nf):
            if not with_outer and f == self.outer:
                continue
            groups.setdefault(find(f), []).append(f)
        out = []
        for fs in groups.values():
            vs = frozenset().union(*(self.face_vertices[f] for f in fs))
            out.append((vs, frozenset(fs)))
        out.sort(key=lambda g: min(g[1]))
        return out

    def sides(self, curve: Sequence[Vertex], closed: bool = False) -> list[frozenset]:
        """Vertex sets of the regions cut out by the curve.

        An open curve runs between two outer vertices through the disk and
        splits it; one of the sides is just the curve when all of its edges
        lie on the outer face. A closed curve splits the whole plane and the
        side holding the outer face comes first.
        """
        pairs = list(zip(curve, curve[1:]))
        if closed and len(curve) > 2:
            pairs.append((curve[-1], curve[0]))
        cut = {frozenset(p) for p in pairs}
        for p in cut:
            u, v = tuple(p)
            if not self.G.has_edge(u, v):
                raise ValueError(f"curve uses non-edge {u!r}-{v!r}")
        groups = self._groups(cut, with_outer=closed)
        if closed:
            groups.sort(key=lambda g: self.outer not in g[1])
            return [g[0] for g in groups]
        vsets = [g[0] for g in groups]
        if len(vsets) == 1:
            vsets.append(frozenset(curve))
        return vsets

    def side_containing(self, curve: Sequence[Vertex], probe: Iterable[Vertex], closed: bool = False) -> tuple[frozenset, frozenset]:
        """(side holding the probe vertices, the union of the other sides)."""
        on_curve = frozenset(curve)
        probe = [x for x in probe if x not in on_curve]
        parts = self.sides(curve, closed)
        if probe:
            hits = [s for s in parts if probe[0] in s]
            chosen = hits[0]
        else:
            chosen = min(parts, key=len)
        rest = frozenset().union(*(s for s in parts if s is not chosen)) | on_curve
        return chosen | on_curve, rest


def count_blocks(adj: dict, keep: frozenset | set) -> int:
    """Number of blocks of the subgraph induced on ``keep``; isolated vertices
    count as blocks of their own."""
    disc: dict = {}
    low: dict = {}
    blocks = 0
    t = 0
    for root in keep:
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        children = 0
        stack = [(root, None, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in keep or w == parent:
                    continue
                if w in disc:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                    continue
                disc[w] = low[w] = t
                t += 1
                stack.append((w, v, iter(adj[w])))
                advanced = True
                if v == root:
                    children += 1
                break
            if advanced:
                continue
            stack.pop()
            if parent is not None:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    blocks += 1
        if children == 0:
            blocks += 1
    return blocks


def potential(G: PlaneGraph, B: Iterable[Vertex]) -> int:
    """|B ∩ L1| plus the number of blocks of G[B - L1]."""
    B = frozenset(B)
    L1 = G.layer_decomposition[1] if G.n else frozenset()
    inner = B - L1
    return len(B & L1) + count_blocks(G.rotation, inner)


def blocks_of(G: PlaneGraph, keep: Iterable[Vertex]) -> list[frozenset]:
    """Blocks of G[keep], largest first; isolated vertices included."""
    g = nx.Graph()
    keep = set(keep)
    g.add_nodes_from(keep)
    g.add_edges_from((u, v) for u, v in G.edges() if u in keep and v in keep)
    found = [frozenset(c) for c in nx.biconnected_components(g)]
    found += [frozenset([v]) for v in g.nodes if g.degree(v) == 0]
    order = {v: i for i, v in enumerate(G.vertices)}
    found.sort(key=lambda b: (-len(b), min(order[v] for v in b)))
    return found


def largest_inner_block(G: PlaneGraph) -> int:
    """ℓ: the larger of 2 and the biggest block of G - L1."""
    L1 = G.layer_decomposition[1]
    rest = [v for v in G.vertices if v not in L1]
    if not rest:
        return 2
    return max(2, len(blocks_of(G, rest)[0]))
