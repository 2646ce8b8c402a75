"""Generated triangulated disks and the hypergraph families used in tests.

Disks are assembled as lists of triangles; orientation is propagated across
shared edges, so builders never have to care about it. Randomness comes from
``random.Random`` seeded by the caller, defaulting to ``PSK_SEED``.
"""

from __future__ import annotations

import os
import random
from collections import deque
from typing import Hashable, Iterable, Sequence

from .hypergraph import Hypergraph, normalize
from .plane_graph import EmbeddingError, PlaneGraph, is_triangulated_disk

Vertex = Hashable

DEFAULT_SEED = int(os.environ.get("PSK_SEED", "20240611"))


def rng_for(seed: int | None = None) -> random.Random:
    return random.Random(DEFAULT_SEED if seed is None else seed)


# ----------------------------------------------------------------------
# triangle lists


def orient(triangles: Sequence[tuple]) -> list[tuple]:
    """Orient triangles coherently: neighbours traverse a shared edge in
    opposite directions. Raises for non-orientable or non-manifold input."""
    by_edge: dict[frozenset, list[int]] = {}
    for i, t in enumerate(triangles):
        for a, b in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
            by_edge.setdefault(frozenset((a, b)), []).append(i)
    for e, ts in by_edge.items():
        if len(ts) > 2:
            raise EmbeddingError(f"edge {sorted(map(str, e))} lies in more than two triangles")
    out: list[tuple | None] = [None] * len(triangles)
    for root in range(len(triangles)):
        if out[root] is not None:
            continue
        out[root] = tuple(triangles[root])
        queue = deque([root])
        while queue:
            i = queue.popleft()
            t = out[i]
            for a, b in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])):
                for j in by_edge[frozenset((a, b))]:
                    if j == i:
                        continue
                    s = tuple(triangles[j])
                    darts = {(s[0], s[1]), (s[1], s[2]), (s[2], s[0])}
                    want = s if (b, a) in darts else (s[0], s[2], s[1])
                    if out[j] is None:
                        out[j] = want
                        queue.append(j)
                    elif out[j] != want and set(zip(out[j], out[j][1:] + out[j][:1])) != set(
                        zip(want, want[1:] + want[:1])
                    ):
                        raise EmbeddingError("triangles cannot be oriented coherently")
    return out  # type: ignore[return-value]


def boundary_cycle(triangles: Sequence[tuple]) -> list:
    """Boundary of a coherently oriented disk, in the direction of its darts."""
    darts = set()
    for t in triangles:
        darts |= {(t[0], t[1]), (t[1], t[2]), (t[2], t[0])}
    nxt = {}
    for a, b in darts:
        if (b, a) not in darts:
            if a in nxt:
                raise EmbeddingError("boundary is not a simple cycle")
            nxt[a] = b
    if not nxt:
        raise EmbeddingError("triangles have no boundary")
    start = min(nxt, key=str)
    cyc = [start]
    while nxt[cyc[-1]] != start:
        cyc.append(nxt[cyc[-1]])
        if len(cyc) > len(nxt):
            raise EmbeddingError("boundary is not a simple cycle")
    if len(cyc) != len(nxt):
        raise EmbeddingError("boundary has several components")
    return cyc


def disk_from_triangles(triangles: Sequence[tuple], order: Iterable[Vertex] | None = None) -> PlaneGraph:
    tris = orient(triangles)
    succ: dict = {}
    for t in tris:
        for k in range(3):
            v, y, z = t[k], t[(k + 1) % 3], t[(k + 2) % 3]
            # face (v, y, z) to the left: at v the clockwise successor of z is y
            succ.setdefault(v, {})[z] = y
    rot = {}
    for v, s in succ.items():
        has_pred = set(s.values())
        starts = [u for u in s if u not in has_pred]
        first = starts[0] if starts else next(iter(s))
        chain = [first]
        while chain[-1] in s and s[chain[-1]] != first:
            chain.append(s[chain[-1]])
            if len(chain) > len(s) + 1:
                raise EmbeddingError(f"rotation at {v!r} is not a fan")
        rot[v] = chain
    darts = {(t[k], t[(k + 1) % 3]) for t in tris for k in range(3)}
    outer = next((b, a) for a, b in sorted(darts, key=lambda d: (str(d[0]), str(d[1]))) if (b, a) not in darts)
    verts = list(order) if order is not None else sorted(rot, key=_natural)
    G = PlaneGraph(rot, outer, verts)
    if not is_triangulated_disk(G):
        raise EmbeddingError("triangles do not form a triangulated disk")
    return G


def _natural(v) -> tuple:
    s = str(v)
    head = s.rstrip("0123456789")
    tail = s[len(head) :]
    return (head, int(tail) if tail else -1, s)


def annulus(outer: Sequence, inner: Sequence, steps: Sequence[bool]) -> list[tuple]:
    """Triangles between two cycles listed in the same rotational direction.

    ``steps`` has ``len(outer) + len(inner)`` entries; True advances along the
    outer cycle, False along the inner one.
    """
    if sum(steps) != len(outer) or len(steps) - sum(steps) != len(inner):
        raise ValueError("step pattern does not match the cycle lengths")
    if not _simple(steps, len(outer), len(inner)):
        raise ValueError("step pattern revisits a spoke")
    i = j = 0
    out = []
    no, ni = len(outer), len(inner)
    for s in steps:
        if s:
            out.append((outer[j % no], outer[(j + 1) % no], inner[i % ni]))
            j += 1
        else:
            out.append((outer[j % no], inner[(i + 1) % ni], inner[i % ni]))
            i += 1
    return out


def _simple(steps: Sequence[bool], no: int, ni: int) -> bool:
    # the closed walk of spokes must not revisit a spoke
    seen = set()
    j = i = 0
    for s in steps:
        if (j % no, i % ni) in seen:
            return False
        seen.add((j % no, i % ni))
        j, i = (j + 1, i) if s else (j, i + 1)
    return True


def _random_steps(rng: random.Random, no: int, ni: int) -> list[bool]:
    steps = [True] * no + [False] * ni
    while True:
        rng.shuffle(steps)
        if _simple(steps, no, ni):
            return steps


def polygon_triangles(cycle: Sequence, rng: random.Random | None = None) -> list[tuple]:
    """A triangulation of a polygon (an outerplanar triangulated disk)."""
    rng = rng or rng_for()
    out = []

    def rec(poly: list) -> None:
        if len(poly) < 3:
            return
        if len(poly) == 3:
            out.append(tuple(poly))
            return
        m = rng.randrange(1, len(poly) - 1)
        out.append((poly[0], poly[m], poly[-1]))
        rec(poly[: m + 1])
        rec(poly[m:])

    rec(list(cycle))
    return out


def _triangle_faces_tuple(tris) -> list[tuple]:
    return [tuple(t) for t in tris]


# ----------------------------------------------------------------------
# named families


def fan(n: int) -> PlaneGraph:
    """Hub ``h`` joined to a path ``p1 .. p(n-1)``."""
    if n < 3:
        raise ValueError("a fan needs at least three vertices")
    path = [f"p{i}" for i in range(1, n)]
    tris = [("h", path[i], path[i + 1]) for i in range(n - 2)]
    return disk_from_triangles(tris, ["h"] + path)


def strip(k: int) -> PlaneGraph:
    """Triangulated ladder on rows ``a1..ak`` and ``b1..bk``."""
    if k < 2:
        raise ValueError("a strip needs at least two rungs")
    tris = []
    for i in range(1, k):
        tris.append((f"a{i}", f"b{i}", f"a{i + 1}"))
        tris.append((f"b{i}", f"b{i + 1}", f"a{i + 1}"))
    return disk_from_triangles(tris, [f"a{i}" for i in range(1, k + 1)] + [f"b{i}" for i in range(1, k + 1)])


class DiskBuilder:
    """Grow a triangulated disk by ears, stacked vertices and new outer rings."""

    def __init__(self, rng: random.Random, prefix: str = "x") -> None:
        self.rng = rng
        self.prefix = prefix
        self.count = 0
        self.tris: list[tuple] = []

    def fresh(self) -> str:
        self.count += 1
        return f"{self.prefix}{self.count}"

    def start(self, k: int = 3) -> None:
        cyc = [self.fresh() for _ in range(k)]
        self.tris = polygon_triangles(cyc, self.rng)

    def vertices(self) -> set:
        return {v for t in self.tris for v in t}

    def boundary(self) -> list:
        return boundary_cycle(orient(self.tris))

    def ear(self) -> str:
        cyc = self.boundary()
        i = self.rng.randrange(len(cyc))
        z = self.fresh()
        self.tris.append((cyc[i], cyc[(i + 1) % len(cyc)], z))
        return z

    def stack(self, index: int) -> str:
        a, b, c = self.tris[index]
        z = self.fresh()
        self.tris[index] = (a, b, z)
        self.tris += [(b, c, z), (c, a, z)]
        return z

    def wrap(self, size: int) -> list[str]:
        inner = self.boundary()
        ring = [self.fresh() for _ in range(size)]
        self.tris += annulus(ring, inner, _random_steps(self.rng, size, len(inner)))
        return ring

    def graph(self) -> PlaneGraph:
        return disk_from_triangles(self.tris)


def _layers_of(tris) -> dict:
    return disk_from_triangles(tris).layer_decomposition.layer_of


def random_disk(layers: int, size: int, seed: int | None = None) -> PlaneGraph:
    """A triangulated disk with exactly ``layers`` layers and about ``size`` vertices."""
    if layers < 1 or size < 3:
        raise ValueError("need layers >= 1 and size >= 3")
    rng = rng_for(seed)
    if layers == 1:
        return disk_from_triangles(polygon_triangles([f"x{i}" for i in range(1, size + 1)], rng))
    b = DiskBuilder(rng)
    core = max(3, min(size // (2 * layers) + 1, size))
    b.start(core)
    rings = layers - 1
    per_ring = max(3, (size - core) // (2 * max(rings, 1))) if rings else 0
    for _ in range(rings):
        b.wrap(per_ring + rng.randrange(0, 3))
    lay = _layers_of(b.tris)
    while len(b.vertices()) < size:
        op = rng.random()
        if op < 0.35:
            b.ear()
        else:
            ok = [i for i, t in enumerate(b.tris) if min(lay[v] for v in t) < layers]
            z = b.stack(rng.choice(ok))
            t = b.tris[-1]
            lay[z] = min(lay[v] for v in t if v != z) + 1
            continue
        lay = _layers_of(b.tris)
    G = b.graph()
    if G.r != layers:
        raise AssertionError(f"generated disk has {G.r} layers instead of {layers}")
    return G


def hinged_fan(k: int, pad: int = 2) -> PlaneGraph:
    """Disk with an L1 chord ``u w`` and two stacks of ``k`` nested vertices,
    one on each side of the chord, each vertex adjacent to both ``u`` and ``w``."""
    if k < 1:
        raise ValueError("need k >= 1")
    left = ["u"] + [f"a{i}" for i in range(1, pad + 1)] + ["w"]
    right = ["w"] + [f"b{i}" for i in range(1, pad + 1)] + ["u"]
    tris = []
    for poly, names in ((left, "v"), (right, "y")):
        apex = poly[-2]
        tris += [(poly[0], poly[i], poly[i + 1]) for i in range(1, len(poly) - 2)]
        prev = apex
        for i in range(1, k + 1):
            z = f"{names}{i}"
            tris += [("u", prev, z), (prev, "w", z)]
            prev = z
        tris.append(("u", prev, "w"))
    return disk_from_triangles(tris)


def corridor(k: int, hub: bool = False) -> PlaneGraph:
    """A two-layer corridor: a triangulated ladder inside an outer ring.

    With ``hub`` the whole top row sees one L1 vertex ``h`` and the ring is
    otherwise sparse; without it every ladder vertex gets private L1
    neighbours.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    tris = []
    for i in range(1, k):
        tris.append((f"a{i}", f"b{i}", f"a{i + 1}"))
        tris.append((f"b{i}", f"b{i + 1}", f"a{i + 1}"))
    inner = [f"a{i}" for i in range(1, k + 1)] + [f"b{i}" for i in range(k, 0, -1)]
    if hub:
        # h sees a1..ak, b_k and b_1; s1 sees the bottom row
        ring = ["h", "s2", "s1"]
        tris += annulus(ring, inner, _hub_steps(k))
    else:
        ring = [f"x{i}" for i in range(1, k + 1)] + ["xe"] + [f"y{i}" for i in range(k, 0, -1)] + ["ye"]
        steps = []
        for _ in range(k):
            steps += [False, True]
        steps[-2:] = [True, False]
        steps += [True]
        for _ in range(k):
            steps += [False, True]
        steps[-2:] = [True, False]
        steps += [True]
        if sum(steps) != len(ring) or len(steps) - sum(steps) != len(inner):
            steps = [True, False] * len(inner)
            ring = [f"x{i}" for i in range(1, len(inner) + 1)]
        tris += annulus(ring, inner, steps)
    return disk_from_triangles(tris)


def _hub_steps(k: int) -> list[bool]:
    # ring (h, s2, s1); inner runs a1..ak then bk..b1
    # at h: take all of a1..ak and bk; then s2 sees bk.., then s1 the rest
    steps = [False] * k  # h sees a1 .. a(k), plus b_k after the last advance
    steps += [True]  # h -> s2
    steps += [False] * (k - 1)  # s2 sees b_k .. b_1
    steps += [True]  # s2 -> s1
    steps += [False]  # s1 sees b_1 -> a_1
    steps += [True]  # s1 -> h
    return steps


def wheel_corridor(m: int) -> PlaneGraph:
    """A fan ``c, p1 .. pm`` inside a three-vertex ring whose vertex ``h``
    sees every vertex of the fan."""
    if m < 2:
        raise ValueError("need m >= 2")
    inner = ["c"] + [f"p{i}" for i in range(1, m + 1)]
    tris = [("c", inner[i], inner[i + 1]) for i in range(1, m)]
    steps = [False] * m + [True, False, True, True]
    tris += annulus(["h", "s1", "s2"], inner, steps)
    return disk_from_triangles(tris)


def nested_corridor(k: int, depth: int = 2, seed: int | None = None) -> PlaneGraph:
    """A ladder of ``k`` rungs wrapped in ``depth - 1`` random rings."""
    rng = rng_for(seed)
    tris = []
    for i in range(1, k):
        tris.append((f"a{i}", f"b{i}", f"a{i + 1}"))
        tris.append((f"b{i}", f"b{i + 1}", f"a{i + 1}"))
    for d in range(depth - 1):
        inner = boundary_cycle(orient(tris))
        ring = [f"r{d}_{i}" for i in range(max(3, len(inner) // 2))]
        tris += annulus(ring, inner, _random_steps(rng, len(ring), len(inner)))
    return disk_from_triangles(tris)


# ----------------------------------------------------------------------
# hypergraph families


def random_hypergraph(n: int, m: int, seed: int | None = None, max_size: int | None = None) -> Hypergraph:
    rng = rng_for(seed)
    vs = [f"v{i}" for i in range(1, n + 1)]
    hi = max_size or n
    edges = []
    for _ in range(m):
        k = rng.randint(2, max(2, min(hi, n)))
        edges.append(rng.sample(vs, k))
    return normalize(vs, edges)


def twin_heavy_hypergraph(n: int, m: int, seed: int | None = None) -> Hypergraph:
    """Random hypergraph whose vertices fall into few twin classes."""
    rng = rng_for(seed)
    vs = [f"v{i}" for i in range(1, n + 1)]
    kinds = max(2, n // 3)
    kind_of = {v: rng.randrange(kinds) for v in vs}
    edges = []
    for _ in range(m):
        chosen = {k for k in range(kinds) if rng.random() < 0.5}
        e = [v for v in vs if kind_of[v] in chosen]
        if len(e) >= 2:
            edges.append(e)
    return normalize(vs, edges)
