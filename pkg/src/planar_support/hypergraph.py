"""Hypergraph model: normalization, twin classes, covering and vertex removal."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

Vertex = Hashable


def _sort_key(v: Vertex) -> tuple[str, str]:
    return (type(v).__name__, str(v))


def vertex_order(vertices: Iterable[Vertex]) -> list[Vertex]:
    """Deterministic ordering for heterogeneous vertex ids."""
    return sorted(vertices, key=_sort_key)


@dataclass(frozen=True)
class Hypergraph:
    """Normalized hypergraph.

    ``vertices`` keeps the declaration order; ``edges`` are frozensets,
    canonically sorted, all of size at least two and pairwise distinct.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[frozenset, ...]
    _index: Mapping[Vertex, int] = field(default=None, repr=False, compare=False)
    _incidence: Mapping[Vertex, frozenset] = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise ValueError("duplicate vertex in hypergraph universe")
        inc: dict[Vertex, set[int]] = {v: set() for v in self.vertices}
        for j, e in enumerate(self.edges):
            if len(e) < 2:
                raise ValueError(f"hyperedge {sorted(map(str, e))} has size < 2")
            for v in e:
                if v not in index:
                    raise ValueError(f"hyperedge uses unknown vertex {v!r}")
                inc[v].add(j)
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("duplicate hyperedge")
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_incidence", {v: frozenset(s) for v, s in inc.items()})

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def index(self, v: Vertex) -> int:
        return self._index[v]

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def incidence(self, v: Vertex) -> frozenset:
        """Indices of the hyperedges containing ``v``."""
        try:
            return self._incidence[v]
        except KeyError:
            raise KeyError(f"unknown vertex {v!r}") from None

    def incident_edges(self, v: Vertex) -> frozenset:
        """The hyperedges containing ``v`` as vertex sets (index-free fingerprint)."""
        return frozenset(self.edges[j] for j in self.incidence(v))

    def edge_sort_key(self, e: frozenset) -> tuple[int, ...]:
        return tuple(sorted(self._index[v] for v in e))


def normalize(vertices: Iterable[Vertex] | None, edges: Iterable[Iterable[Vertex]]) -> Hypergraph:
    """Build a hypergraph, dropping hyperedges of size <= 1 and duplicates.

    Vertices that appear only in edges are appended to the universe in order
    of first appearance; the universe is otherwise kept as given.
    """
    universe: list[Vertex] = []
    seen: set[Vertex] = set()
    if vertices is not None:
        for v in vertices:
            if v not in seen:
                seen.add(v)
                universe.append(v)
    kept: list[frozenset] = []
    kept_set: set[frozenset] = set()
    for raw in edges:
        e = frozenset(raw)
        for v in raw:
            if v not in seen:
                seen.add(v)
                universe.append(v)
        if len(e) < 2 or e in kept_set:
            continue
        kept_set.add(e)
        kept.append(e)
    index = {v: i for i, v in enumerate(universe)}
    kept.sort(key=lambda e: (len(e), tuple(sorted(index[v] for v in e))))
    return Hypergraph(tuple(universe), tuple(kept))


def renormalize(H: Hypergraph) -> Hypergraph:
    return normalize(H.vertices, H.edges)


@dataclass(frozen=True)
class TwinPartition:
    """Partition of the vertices into twin classes.

    ``classes`` is ordered by the first vertex (in universe order) of each
    class; ``keys`` holds the canonical fingerprint of each class, namely
    the set of hyperedges (as vertex sets) incident to its members.
    """

    classes: tuple[tuple[Vertex, ...], ...]
    class_of: Mapping[Vertex, int]
    keys: tuple[frozenset, ...]

    def members(self, v: Vertex) -> tuple[Vertex, ...]:
        return self.classes[self.class_of[v]]

    def key_of(self, v: Vertex) -> frozenset:
        return self.keys[self.class_of[v]]


def twin_classes(H: Hypergraph) -> TwinPartition:
    buckets: dict[frozenset, list[Vertex]] = {}
    for v in H.vertices:
        buckets.setdefault(H.incident_edges(v), []).append(v)
    keys = tuple(buckets)
    classes = tuple(tuple(buckets[k]) for k in keys)
    class_of = {v: i for i, members in enumerate(classes) for v in members}
    return TwinPartition(classes, class_of, keys)


def covers(H: Hypergraph, v: Vertex, u: Vertex) -> bool:
    """True iff every hyperedge containing ``u`` also contains ``v``."""
    return H.incidence(u) <= H.incidence(v)


def remove_vertices(H: Hypergraph, S: Iterable[Vertex]) -> Hypergraph:
    drop = set(S)
    unknown = [v for v in drop if v not in H]
    if unknown:
        raise KeyError(f"unknown vertices {sorted(map(str, unknown))}")
    return normalize(
        [v for v in H.vertices if v not in drop],
        [e - drop for e in H.edges],
    )


def restrict_to(H: Hypergraph, W: Iterable[Vertex]) -> Hypergraph:
    """H minus every vertex outside ``W``."""
    keep = set(W)
    return remove_vertices(H, [v for v in H.vertices if v not in keep])
