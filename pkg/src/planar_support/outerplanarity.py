"""Minimum number of layers over all plane embeddings of a small graph.

Embeddings are enumerated by inserting edges one at a time into a growing
connected embedding: a pendant edge picks an angle at its old endpoint, a
closing edge picks a face holding both endpoints together with one corner
of each. Every embedding of the final graph arises from exactly one branch.
Layer counts of partial embeddings never exceed those of their completions,
which gives a branch-and-bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

import networkx as nx

from .plane_graph import EmbeddingError, PlaneGraph, planar_embedding

Vertex = Hashable

DEFAULT_MAX_VERTICES = 12
DEFAULT_NODE_BUDGET = 2_000_000


@dataclass
class _Search:
    best: int
    witness: PlaneGraph | None
    nodes: int
    budget: int
    exhausted: bool = False
    # stop once an embedding with at most this many layers is known
    goal: int = 2


def _is_outerplanar(g: nx.Graph) -> bool:
    h = g.copy()
    apex = ("__apex__",)
    h.add_edges_from((apex, v) for v in g.nodes)
    return nx.check_planarity(h)[0]


def _faces(rot: dict) -> list[list[tuple]]:
    seen: set = set()
    out = []
    pos = {v: {u: i for i, u in enumerate(n)} for v, n in rot.items()}
    for u, nbrs in rot.items():
        for v in nbrs:
            if (u, v) in seen:
                continue
            walk = []
            d = (u, v)
            while d not in seen:
                seen.add(d)
                walk.append(d)
                a, b = d
                nb = rot[b]
                d = (b, nb[(pos[b][a] + 1) % len(nb)])
            out.append(walk)
    return out


def _min_layers(faces: list[list[tuple]], vertices: list) -> tuple[int, int]:
    """Minimum over outer-face choices of the layer count; returns (r, face)."""
    if not faces:
        return 1, -1
    fv = [{d[0] for d in walk} for walk in faces]
    vf: dict = {v: [] for v in vertices}
    for i, s in enumerate(fv):
        for v in s:
            vf[v].append(i)
    best, arg = None, -1
    for root in range(len(faces)):
        layer = {}
        seen = {root}
        frontier = [root]
        depth = 0
        while frontier and len(layer) < len(vertices):
            depth += 1
            fresh = []
            for f in frontier:
                for v in fv[f]:
                    if v not in layer:
                        layer[v] = depth
                        fresh.append(v)
            frontier = []
            for v in fresh:
                for f in vf[v]:
                    if f not in seen:
                        seen.add(f)
                        frontier.append(f)
            if best is not None and depth >= best and len(layer) < len(vertices):
                depth = best + 1
                break
        if best is None or depth < best:
            best, arg = depth, root
    return best, arg


def _edge_order(g: nx.Graph) -> list[tuple]:
    nodes = sorted(g.nodes, key=lambda v: (-g.degree(v), str(v)))
    start = nodes[0]
    inside = {start}
    done: set = set()
    order = []
    while len(done) < g.number_of_edges():
        closing = [
            (u, v)
            for u in inside
            for v in g.neighbors(u)
            if v in inside and frozenset((u, v)) not in done
        ]
        if closing:
            u, v = min(closing, key=lambda e: (str(e[0]), str(e[1])))
            done.add(frozenset((u, v)))
            order.append((u, v))
            continue
        outside = [v for v in g.nodes if v not in inside and any(u in inside for u in g.neighbors(v))]
        y = min(outside, key=lambda v: (-sum(1 for u in g.neighbors(v) if u in inside), -g.degree(v), str(v)))
        x = min((u for u in g.neighbors(y) if u in inside), key=lambda u: (-g.degree(u), str(u)))
        inside.add(y)
        done.add(frozenset((x, y)))
        order.append((x, y))
    return order


def _search(rot: dict, order: list, k: int, vertices_seen: list, state: _Search) -> None:
    if state.exhausted or state.best <= state.goal:
        return
    state.nodes += 1
    if state.nodes > state.budget:
        state.exhausted = True
        return
    faces = _faces(rot)
    lb, root = _min_layers(faces, vertices_seen)
    if lb >= state.best:
        return
    if k == len(order):
        state.best = lb
        rot_copy = {v: list(n) for v, n in rot.items()}
        state.witness = PlaneGraph(rot_copy, faces[root][0] if root >= 0 else None)
        return
    x, y = order[k]
    if y not in rot:
        # pendant insertion at every angle of x
        nbrs = rot[x]
        choices = range(len(nbrs)) if nbrs else [0]
        vertices_seen.append(y)
        for i in choices:
            rot[y] = [x]
            rot[x] = nbrs[: i + 1] + [y] + nbrs[i + 1 :] if nbrs else [y]
            _search(rot, order, k + 1, vertices_seen, state)
            rot[x] = nbrs
            del rot[y]
            if state.exhausted or state.best <= state.goal:
                break
        vertices_seen.pop()
        return
    for walk in faces:
        xs = [walk[j - 1][0] for j in range(len(walk)) if walk[j][0] == x]
        ys = [walk[j - 1][0] for j in range(len(walk)) if walk[j][0] == y]
        for px in xs:
            for py in ys:
                rx, ry = rot[x], rot[y]
                rot[x] = rx[: rx.index(px) + 1] + [y] + rx[rx.index(px) + 1 :]
                rot[y] = ry[: ry.index(py) + 1] + [x] + ry[ry.index(py) + 1 :]
                _search(rot, order, k + 1, vertices_seen, state)
                rot[x], rot[y] = rx, ry
                if state.exhausted or state.best <= state.goal:
                    return


def _component_layers(
    g: nx.Graph, node_budget: int, max_vertices: int, goal: int | None
) -> tuple[int | None, PlaneGraph | None]:
    if g.number_of_nodes() == 1:
        return 1, PlaneGraph({next(iter(g.nodes)): []})
    if _is_outerplanar(g):
        G = planar_embedding(g)
        r, root = _min_layers([list(w) for w in G.face_darts], list(g.nodes))
        if r == 1:
            return 1, G.with_outer_face(root)
    G = planar_embedding(g)
    r0, root = _min_layers([list(w) for w in G.face_darts], list(g.nodes))
    witness = G.with_outer_face(root)
    floor = 1 if _is_outerplanar(g) else 2
    if r0 <= floor or (goal is not None and r0 <= goal):
        return r0, witness
    if goal is None and g.number_of_nodes() > max_vertices:
        return None, None
    state = _Search(best=r0, witness=witness, nodes=0, budget=node_budget, goal=max(floor, goal or floor))
    order = _edge_order(g)
    x0 = order[0][0]
    _search({x0: []}, order, 0, [x0], state)
    if state.exhausted and not (goal is not None and state.best <= goal):
        return None, None
    return state.best, state.witness


def best_embedding(
    g: nx.Graph,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    node_budget: int = DEFAULT_NODE_BUDGET,
    goal: int | None = None,
) -> tuple[int | None, list[PlaneGraph]]:
    """Layer count and one embedding per component achieving it.

    Without ``goal`` the count is the minimum. With ``goal`` the search
    stops at the first embedding with at most ``goal`` layers, and a count
    above ``goal`` is exact. Returns ``(None, [])`` when the instance exceeds
    the budget before that is settled.
    """
    ok, _ = nx.check_planarity(g)
    if not ok:
        raise EmbeddingError("graph is not planar")
    if g.number_of_nodes() == 0:
        return 0, []
    worst = 0
    witnesses = []
    for comp in sorted(nx.connected_components(g), key=lambda c: sorted(map(str, c))):
        r, W = _component_layers(g.subgraph(comp).copy(), node_budget, max_vertices, goal)
        if r is None:
            return None, []
        worst = max(worst, r)
        witnesses.append(W)
    return worst, witnesses


def min_outerplanarity(
    g: nx.Graph | PlaneGraph,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> int | None:
    """Smallest r such that ``g`` is r-outerplanar, or None if over budget."""
    if isinstance(g, PlaneGraph):
        g = g.to_networkx()
    return best_embedding(g, max_vertices, node_budget)[0]
