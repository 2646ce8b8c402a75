"""Plane graphs given by a rotation system plus a designated outer face.

Conventions: ``rotation[v]`` lists the neighbours of ``v`` in clockwise
order. Faces are traced with the rule ``(u, v) -> (v, cw_succ_v(u))`` so
that every face lies to the left of its darts; bounded faces come out
counterclockwise. The outer face is identified by one of its darts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

import networkx as nx

from .hypergraph import vertex_order

Vertex = Hashable
Dart = tuple  # (tail, head)


class EmbeddingError(ValueError):
    """Raised for inconsistent rotation systems or unusable embeddings."""


@dataclass(frozen=True)
class LayerDecomposition:
    layers: tuple[frozenset, ...]
    layer_of: Mapping[Vertex, int]

    @property
    def r(self) -> int:
        return len(self.layers)

    def __getitem__(self, i: int) -> frozenset:
        """Layer ``L_i`` with 1-based ``i``."""
        return self.layers[i - 1]


@dataclass(frozen=True)
class Blocks:
    blocks: tuple[frozenset, ...]
    cut_vertices: frozenset


class PlaneGraph:
    """Immutable embedded simple graph."""

    __slots__ = ("vertices", "rotation", "outer_dart", "_pos", "__dict__")

    def __init__(
        self,
        rotation: Mapping[Vertex, Sequence[Vertex]],
        outer_dart: Dart | None = None,
        vertices: Iterable[Vertex] | None = None,
    ) -> None:
        order = list(vertices) if vertices is not None else list(rotation)
        for v in rotation:
            if v not in set(order):
                order.append(v)
        self.vertices: tuple = tuple(order)
        self.rotation: dict = {v: tuple(rotation.get(v, ())) for v in self.vertices}
        pos: dict = {}
        for v, nbrs in self.rotation.items():
            if len(set(nbrs)) != len(nbrs):
                raise EmbeddingError(f"parallel edge at {v!r}")
            if v in nbrs:
                raise EmbeddingError(f"self-loop at {v!r}")
            pos[v] = {u: i for i, u in enumerate(nbrs)}
        for v, nbrs in self.rotation.items():
            for u in nbrs:
                if u not in pos or v not in pos[u]:
                    raise EmbeddingError(f"edge {v!r}-{u!r} missing from rotation of {u!r}")
        self._pos = pos
        if outer_dart is None and self.edge_count:
            outer_dart = self._default_outer_dart()
        if outer_dart is not None:
            u, v = outer_dart
            if u not in pos or v not in pos[u]:
                raise EmbeddingError(f"outer dart {outer_dart!r} is not an edge")
            outer_dart = (u, v)
        self.outer_dart = outer_dart

    # ------------------------------------------------------------------
    # basic structure

    @cached_property
    def edge_count(self) -> int:
        return sum(len(n) for n in self.rotation.values()) // 2

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: Vertex) -> tuple:
        return self.rotation[v]

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return v in self._pos.get(u, ())

    def degree(self, v: Vertex) -> int:
        return len(self.rotation[v])

    def edges(self) -> list[tuple]:
        rank = {v: i for i, v in enumerate(self.vertices)}
        out = []
        for u in self.vertices:
            for v in self.rotation[u]:
                if rank[u] < rank[v]:
                    out.append((u, v))
        return out

    def cw_succ(self, v: Vertex, u: Vertex) -> Vertex:
        nbrs = self.rotation[v]
        return nbrs[(self._pos[v][u] + 1) % len(nbrs)]

    def cw_pred(self, v: Vertex, u: Vertex) -> Vertex:
        nbrs = self.rotation[v]
        return nbrs[(self._pos[v][u] - 1) % len(nbrs)]

    def next_dart(self, d: Dart) -> Dart:
        u, v = d
        return (v, self.cw_succ(v, u))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        return g

    def _default_outer_dart(self) -> Dart:
        u = next(v for v in self.vertices if self.rotation[v])
        return (u, self.rotation[u][0])

    # ------------------------------------------------------------------
    # faces

    @cached_property
    def _face_data(self) -> tuple[tuple[tuple[Dart, ...], ...], dict]:
        face_of: dict = {}
        faces: list[tuple[Dart, ...]] = []
        for u in self.vertices:
            for v in self.rotation[u]:
                if (u, v) in face_of:
                    continue
                walk = []
                d = (u, v)
                while d not in face_of:
                    face_of[d] = len(faces)
                    walk.append(d)
                    d = self.next_dart(d)
                if d != (u, v):
                    raise EmbeddingError("face traversal did not close")
                faces.append(tuple(walk))
        return tuple(faces), face_of

    @property
    def face_darts(self) -> tuple[tuple[Dart, ...], ...]:
        return self._face_data[0]

    def face_of_dart(self, d: Dart) -> int:
        return self._face_data[1][d]

    def face_vertices(self, i: int) -> tuple:
        return tuple(d[0] for d in self.face_darts[i])

    @cached_property
    def outer_face(self) -> int | None:
        if self.outer_dart is None:
            return None
        return self.face_of_dart(self.outer_dart)

    def outer_walk(self) -> tuple:
        """Vertices of the outer face walk, starting at the outer dart."""
        if self.outer_dart is None:
            return tuple(self.vertices[:1])
        walk = []
        d = self.outer_dart
        while True:
            walk.append(d[0])
            d = self.next_dart(d)
            if d == self.outer_dart:
                return tuple(walk)

    def inner_faces(self) -> list[int]:
        return [i for i in range(len(self.face_darts)) if i != self.outer_face]

    def components(self) -> list[frozenset]:
        return [frozenset(c) for c in nx.connected_components(self.to_networkx())]

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def euler_ok(self) -> bool:
        """Genus-0 check, v - e + f = 2 for every component."""
        comp_of = {}
        comps = self.components()
        for i, c in enumerate(comps):
            for v in c:
                comp_of[v] = i
        v_cnt = [len(c) for c in comps]
        e_cnt = [0] * len(comps)
        f_cnt = [0] * len(comps)
        for u, _ in self.edges():
            e_cnt[comp_of[u]] += 1
        for walk in self.face_darts:
            f_cnt[comp_of[walk[0][0]]] += 1
        for i in range(len(comps)):
            f = f_cnt[i] if e_cnt[i] else 1
            if v_cnt[i] - e_cnt[i] + f != 2:
                return False
        return True

    # ------------------------------------------------------------------
    # layers

    @cached_property
    def layer_decomposition(self) -> LayerDecomposition:
        if not self.is_connected():
            raise EmbeddingError("layer decomposition needs a connected graph")
        if not self.euler_ok():
            raise EmbeddingError("rotation system is not planar")
        if self.outer_face is None:
            return LayerDecomposition((frozenset(self.vertices),), {self.vertices[0]: 1})
        # Radial distances in the vertex-face incidence graph: peeling the
        # outer layers merges exactly the faces incident to removed vertices
        # into the outer face, so layer(v) = (dist(outer, v) + 1) / 2.
        faces_of_vertex: dict = {v: [] for v in self.vertices}
        for i, walk in enumerate(self.face_darts):
            for u, _ in walk:
                faces_of_vertex[u].append(i)
        layer_of: dict = {}
        seen_faces = {self.outer_face}
        frontier = [self.outer_face]
        depth = 1
        while frontier:
            new_vertices = []
            for f in frontier:
                for u, _ in self.face_darts[f]:
                    if u not in layer_of:
                        layer_of[u] = depth
                        new_vertices.append(u)
            frontier = []
            for u in new_vertices:
                for f in faces_of_vertex[u]:
                    if f not in seen_faces:
                        seen_faces.add(f)
                        frontier.append(f)
            depth += 1
        r = max(layer_of.values())
        layers = tuple(
            frozenset(v for v in self.vertices if layer_of[v] == i) for i in range(1, r + 1)
        )
        return LayerDecomposition(layers, layer_of)

    def layer(self, v: Vertex) -> int:
        return self.layer_decomposition.layer_of[v]

    @property
    def r(self) -> int:
        return self.layer_decomposition.r

    # ------------------------------------------------------------------
    # derived embeddings

    def restrict(self, keep: Iterable[Vertex]) -> "PlaneGraph":
        """Sub-embedding induced on ``keep``; the new outer face is the face
        that contains the old outer face."""
        keep_set = set(keep)
        rot = {v: [u for u in self.rotation[v] if u in keep_set] for v in self.vertices if v in keep_set}
        order = [v for v in self.vertices if v in keep_set]
        sub = PlaneGraph(rot, None, order)
        if sub.edge_count == 0 or self.outer_face is None:
            return sub
        # faces of self glued across edges that do not survive
        parent = list(range(len(self.face_darts)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges():
            if u in keep_set and v in keep_set:
                continue
            a, b = find(self.face_of_dart((u, v))), find(self.face_of_dart((v, u)))
            if a != b:
                parent[a] = b
        target = find(self.outer_face)
        for u, v in sub.edges():
            for d in ((u, v), (v, u)):
                if find(self.face_of_dart(d)) == target:
                    return PlaneGraph(rot, d, order)
        raise EmbeddingError("could not locate outer face of restriction")

    def reflected(self) -> "PlaneGraph":
        rot = {v: tuple(reversed(n)) for v, n in self.rotation.items()}
        if self.outer_dart is None:
            return PlaneGraph(rot, None, self.vertices)
        u, v = self.outer_dart
        # reversing rotations reverses every face walk
        return PlaneGraph(rot, (v, u), self.vertices)

    def with_outer_face(self, face_index: int) -> "PlaneGraph":
        return PlaneGraph(self.rotation, self.face_darts[face_index][0], self.vertices)

    def relabeled(self, mapping: Mapping[Vertex, Vertex]) -> "PlaneGraph":
        rot = {mapping[v]: [mapping[u] for u in n] for v, n in self.rotation.items()}
        od = None if self.outer_dart is None else (mapping[self.outer_dart[0]], mapping[self.outer_dart[1]])
        return PlaneGraph(rot, od, [mapping[v] for v in self.vertices])

    def _canonical_rotation(self) -> dict:
        out = {}
        for v, nbrs in self.rotation.items():
            if not nbrs:
                out[v] = ()
                continue
            k = min(range(len(nbrs)), key=lambda i: (type(nbrs[i]).__name__, str(nbrs[i])))
            out[v] = tuple(nbrs[k:] + nbrs[:k])
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        if set(self.vertices) != set(other.vertices):
            return False
        if self._canonical_rotation() != other._canonical_rotation():
            return False
        if self.outer_face is None or other.outer_face is None:
            return self.outer_face is None and other.outer_face is None
        return other.face_of_dart(self.outer_dart) == other.outer_face

    def __hash__(self) -> int:
        return hash(frozenset(map(frozenset, self.edges())))

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, e={self.edge_count})"


# ----------------------------------------------------------------------
# operations


def faces(G: PlaneGraph) -> list[tuple]:
    """All face walks as vertex tuples; the outer face is ``G.outer_face``."""
    if not G.euler_ok():
        raise EmbeddingError("rotation system violates Euler's formula")
    return [G.face_vertices(i) for i in range(len(G.face_darts))]


def layer_decomposition(G: PlaneGraph) -> LayerDecomposition:
    return G.layer_decomposition


def is_triangulated_disk(G: PlaneGraph) -> bool:
    if G.n < 3 or not G.is_connected() or not G.euler_ok():
        return False
    walk = G.outer_walk()
    if len(walk) < 3 or len(set(walk)) != len(walk):
        return False
    return all(len(G.face_darts[i]) == 3 for i in G.inner_faces())


def blocks(G: PlaneGraph | nx.Graph) -> Blocks:
    """Blocks (maximal biconnected subgraphs, bridges, isolated vertices)."""
    g = G.to_networkx() if isinstance(G, PlaneGraph) else G
    found = [frozenset(c) for c in nx.biconnected_components(g)]
    found += [frozenset([v]) for v in g.nodes if g.degree(v) == 0]
    found.sort(key=lambda b: (-len(b), vertex_order(b)[0] if b else ""), reverse=False)
    return Blocks(tuple(found), frozenset(nx.articulation_points(g)))


class _Rotations:
    """Mutable rotation system used while adding chords."""

    def __init__(self, G: PlaneGraph) -> None:
        self.rot = {v: list(n) for v, n in G.rotation.items()}
        self.order = list(G.vertices)
        self.outer = G.outer_dart

    def freeze(self) -> PlaneGraph:
        return PlaneGraph(self.rot, self.outer, self.order)

    def insert_chord(self, x: Vertex, px: Vertex, y: Vertex, py: Vertex) -> None:
        """Add edge x-y inside the face that holds darts (px, x) and (py, y)."""
        rx = self.rot[x]
        rx.insert(rx.index(px) + 1, y) if rx else rx.append(y)
        ry = self.rot[y]
        ry.insert(ry.index(py) + 1, x) if ry else ry.append(x)


def _face_corners(G: PlaneGraph, fi: int) -> list[tuple]:
    """Corners of a face as (vertex, predecessor on the walk)."""
    walk = G.face_darts[fi]
    return [(walk[k][1], walk[k][0]) for k in range(len(walk))]


def _close_outer(G: PlaneGraph) -> PlaneGraph:
    while True:
        walk = G.outer_walk()
        k = len(walk)
        if len(set(walk)) == k:
            return G
        best = None
        for i in range(k):
            for span in range(2, k - 1):
                j = (i + span) % k
                x, y = walk[i], walk[j]
                if x == y or G.has_edge(x, y):
                    continue
                inside = [walk[(i + s) % k] for s in range(1, span)]
                outside = {walk[(j + s) % k] for s in range(0, k - span + 1)}
                if all(v in outside for v in inside):
                    if best is None or span < best[0]:
                        best = (span, i, j)
                    break
        if best is None:
            raise EmbeddingError("cannot close outer face into a simple cycle")
        _, i, j = best
        x, y = walk[i], walk[j]
        px, py = walk[i - 1], walk[j - 1]
        rot = _Rotations(G)
        rot.insert_chord(x, px, y, py)
        rot.outer = (x, y)
        G = rot.freeze()


def _split_face_once(G: PlaneGraph, fi: int, layer_of: Mapping) -> PlaneGraph | None:
    corners = _face_corners(G, fi)
    k = len(corners)
    rank = {v: i for i, v in enumerate(G.vertices)}
    low = min(layer_of[v] for v, _ in corners)
    candidates = []
    for a in range(k):
        x, px = corners[a]
        for span in range(2, k - 1):
            b = (a + span) % k
            y, py = corners[b]
            if x == y or G.has_edge(x, y):
                continue
            side1 = [corners[(a + s) % k][0] for s in range(0, span + 1)]
            side2 = [corners[(b + s) % k][0] for s in range(0, k - span + 1)]
            keeps = min(layer_of[v] for v in side1) == low and min(layer_of[v] for v in side2) == low
            apex = layer_of[x] == low
            candidates.append(((not apex, not keeps, rank[x], span, rank[y]), a, b))
    if not candidates:
        return None
    _, a, b = min(candidates)
    x, px = corners[a]
    y, py = corners[b]
    rot = _Rotations(G)
    rot.insert_chord(x, px, y, py)
    return rot.freeze()


def triangulate_to_disk(G: PlaneGraph) -> PlaneGraph:
    """Add edges until G is a triangulated disk, keeping every layer index."""
    if G.n < 3:
        raise EmbeddingError("triangulating a disk needs at least three vertices")
    if not G.is_connected():
        raise EmbeddingError("triangulating a disk needs a connected graph")
    before = dict(G.layer_decomposition.layer_of)
    H = _close_outer(G)
    while True:
        big = [i for i in H.inner_faces() if len(H.face_darts[i]) > 3]
        if not big:
            break
        nxt = _split_face_once(H, big[0], before)
        if nxt is None:
            raise EmbeddingError("face cannot be split without a parallel edge")
        H = nxt
    after = H.layer_decomposition.layer_of
    if any(after[v] != before[v] for v in before):
        raise EmbeddingError("triangulation changed a layer index")
    return H


def to_dot(G: PlaneGraph, with_layers: bool = True, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lo = G.layer_decomposition.layer_of if (with_layers and G.is_connected()) else {}
    for v in G.vertices:
        attr = f' [layer={lo[v]}]' if v in lo else ""
        lines.append(f'  "{v}"{attr};')
    if with_layers and lo:
        for i, L in enumerate(G.layer_decomposition.layers, start=1):
            members = " ".join(f'"{v}"' for v in G.vertices if v in L)
            lines.append(f"  subgraph layer_{i} {{ rank=same; {members} }}")
    for u, v in G.edges():
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def planar_embedding(g: nx.Graph) -> PlaneGraph:
    """Embed an abstract planar graph via networkx; raises on non-planar input."""
    ok, emb = nx.check_planarity(g)
    if not ok:
        raise EmbeddingError("graph is not planar")
    rot = {v: list(emb.neighbors_cw_order(v)) for v in g.nodes}
    G = PlaneGraph(rot, None, list(g.nodes))
    if not G.euler_ok():
        raise EmbeddingError("planarity witness failed the Euler check")
    return G
