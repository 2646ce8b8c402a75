"""SAT encoding of "some planar graph on the candidate edges is a support".

Planarity is encoded through Schnyder's characterisation: a graph is planar
iff there are three linear orders of its vertices such that for every edge
uv and every other vertex w, some order puts w above both u and v.
Connectivity of each hyperedge is encoded with bounded-depth reachability
from a root inside the hyperedge.
"""

from __future__ import annotations

import itertools
from typing import Hashable, Iterable, Sequence

Vertex = Hashable


class _Pool:
    def __init__(self) -> None:
        self.top = 0

    def new(self) -> int:
        self.top += 1
        return self.top


class SupportEncoding:
    """Clauses for a planar support among ``forced + free`` edges."""

    def __init__(
        self,
        vertices: Sequence[Vertex],
        hyperedges: Iterable[frozenset],
        forced: Iterable[tuple],
        free: Iterable[tuple],
    ) -> None:
        self.vertices = list(vertices)
        idx = {v: i for i, v in enumerate(self.vertices)}
        self.idx = idx
        self.pool = _Pool()
        self.clauses: list[list[int]] = []
        self.forced = [self._key(e) for e in forced]
        self.free = [self._key(e) for e in free]
        self.edge_var = {e: self.pool.new() for e in self.free}
        n = len(self.vertices)
        self._lt = [dict() for _ in range(3)]
        for k in range(3):
            for i in range(n):
                for j in range(i + 1, n):
                    self._lt[k][(i, j)] = self.pool.new()
        self._orders()
        self._schnyder()
        for e in hyperedges:
            self._connected(e)

    def _key(self, e: tuple) -> tuple:
        u, v = e
        return (u, v) if self.idx[u] < self.idx[v] else (v, u)

    def lt(self, k: int, a: Vertex, b: Vertex) -> int:
        i, j = self.idx[a], self.idx[b]
        return self._lt[k][(i, j)] if i < j else -self._lt[k][(j, i)]

    def _orders(self) -> None:
        n = len(self.vertices)
        for k in range(3):
            for i, j, l in itertools.combinations(range(n), 3):
                a, b, c = self._lt[k][(i, j)], self._lt[k][(j, l)], self._lt[k][(i, l)]
                self.clauses.append([-a, -b, c])
                self.clauses.append([a, b, -c])
        # symmetry: the three orders are interchangeable; fix the first pair
        if n >= 2:
            self.clauses.append([self._lt[0][(0, 1)]])

    def _schnyder(self) -> None:
        edges = [(e, None) for e in self.forced] + [(e, self.edge_var[e]) for e in self.free]
        for (u, v), y in edges:
            for w in self.vertices:
                if w == u or w == v:
                    continue
                clause = [] if y is None else [-y]
                for k in range(3):
                    z = self.pool.new()
                    self.clauses.append([-z, self.lt(k, u, w)])
                    self.clauses.append([-z, self.lt(k, v, w)])
                    clause.append(z)
                self.clauses.append(clause)

    def _edge_literal(self, a: Vertex, b: Vertex) -> int | None:
        e = self._key((a, b))
        if e in self.edge_var:
            return self.edge_var[e]
        if e in set(self.forced):
            return 0
        return None

    def _connected(self, e: frozenset) -> None:
        members = sorted(e, key=lambda v: self.idx[v])
        s = len(members)
        if s <= 1:
            return
        root = members[0]
        forced = set(self.forced)
        reach = {(x, 0): None for x in members}
        for d in range(1, s):
            for x in members:
                if x == root:
                    continue
                r = self.pool.new()
                reach[(x, d)] = r
                options = []
                if d > 1:
                    options.append(reach[(x, d - 1)])
                for y in members:
                    if y == x:
                        continue
                    lit = self._edge_literal(x, y)
                    if lit is None:
                        continue
                    if y == root:
                        options.append(lit if lit else None)
                        continue
                    if d == 1:
                        continue
                    prev = reach[(y, d - 1)]
                    if lit == 0:
                        options.append(prev)
                    else:
                        c = self.pool.new()
                        self.clauses.append([-c, prev])
                        self.clauses.append([-c, lit])
                        options.append(c)
                if None in options:
                    continue  # forced edge to the root: always reachable
                self.clauses.append([-r] + options)
        for x in members:
            if x != root:
                self.clauses.append([reach[(x, s - 1)]])
        del forced

    def decode(self, model: Iterable[int]) -> list[tuple]:
        pos = {lit for lit in model if lit > 0}
        return [e for e in self.free if self.edge_var[e] in pos]

    def block(self, chosen: Iterable[tuple]) -> list[int]:
        """Clause excluding every support that contains all of ``chosen``."""
        return [-self.edge_var[self._key(e)] for e in chosen]
