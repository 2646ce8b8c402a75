"""Check a candidate sequence against all eight well-formedness properties."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ..hypergraph import vertex_order
from ..plane_graph import PlaneGraph
from .types import CYCLE, PATH, SeparatorTriple

PROPERTIES = ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")


@dataclass
class ValidationReport:
    violations: dict[str, list[dict]] = field(default_factory=lambda: {k: [] for k in PROPERTIES})

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def failed(self) -> list[str]:
        return [k for k in PROPERTIES if self.violations[k]]

    def add(self, prop: str, **witness) -> None:
        self.violations[prop].append({k: _plain(v) for k, v in witness.items()})

    def to_json(self) -> dict:
        return {"valid": self.ok, "violations": self.violations}


def _plain(x):
    if isinstance(x, (set, frozenset)):
        return [str(v) for v in vertex_order(x)]
    if isinstance(x, tuple):
        return [_plain(v) for v in x]
    if isinstance(x, (int, str)) or x is None:
        return x
    return str(x)


def _induced_edges(G: PlaneGraph, vs: Iterable) -> set[frozenset]:
    vs = list(vs)
    s = set(vs)
    return {frozenset((u, w)) for u in vs for w in G.rotation.get(u, ()) if w in s}


def _check_path(G: PlaneGraph, T: SeparatorTriple, i: int, L1: frozenset, rep: ValidationReport) -> None:
    path = T.inner
    if len(set(path)) != len(path):
        rep.add("v", triple=i, reason="repeated vertex in path")
        return
    want = {frozenset(p) for p in zip(path, path[1:])}
    have = _induced_edges(G, path)
    for e in sorted(want - have, key=lambda e: sorted(map(str, e))):
        rep.add("v", triple=i, reason="path edge missing", edge=tuple(vertex_order(e)))
    for e in sorted(have - want, key=lambda e: sorted(map(str, e))):
        rep.add("v", triple=i, reason="chord in path", edge=tuple(vertex_order(e)))
    ends = (path[0], path[-1]) if path else ()
    for v in ends:
        if v not in L1:
            rep.add("v", triple=i, reason="path endpoint not on L1", vertex=v)
    for v in path[1:-1]:
        if v in L1:
            rep.add("v", triple=i, reason="interior path vertex on L1", vertex=v)


def _check_cycle(G: PlaneGraph, T: SeparatorTriple, i: int, rep: ValidationReport) -> None:
    cyc = T.cycle_order()
    if len(set(cyc)) != len(cyc) or len(cyc) < 3:
        rep.add("v", triple=i, reason="not a simple cycle of length >= 3")
        return
    want = {frozenset(p) for p in zip(cyc, cyc[1:] + cyc[:1])}
    have = _induced_edges(G, cyc)
    for e in sorted(want - have, key=lambda e: sorted(map(str, e))):
        rep.add("v", triple=i, reason="cycle edge missing", edge=tuple(vertex_order(e)))
    for e in sorted(have - want, key=lambda e: sorted(map(str, e))):
        rep.add("v", triple=i, reason="chord in cycle", edge=tuple(vertex_order(e)))
    low = min(G.layer(v) for v in cyc)
    for a in {T.vstar, T.vdagger}:
        if G.layer(a) != low:
            rep.add("v", triple=i, reason="anchor not on the lowest layer of S", vertex=a, layer=G.layer(a))
    pp = T.p_prime
    if pp not in (T.p - 1, T.p - 2):
        rep.add("v", triple=i, reason="p' not in {p-1, p-2}")


def validate_wfss(G: PlaneGraph, seq: Iterable[SeparatorTriple]) -> ValidationReport:
    """Report every violated property, each with a concrete witness."""
    triples = list(seq)
    rep = ValidationReport()
    if not triples:
        return rep
    V = frozenset(G.vertices)
    L1 = G.layer_decomposition[1]
    layer = G.layer_decomposition.layer_of
    p = triples[0].p
    known = True
    for i, T in enumerate(triples, start=1):
        stray = (T.A | T.B | T.separator) - V
        if stray:
            rep.add("i", triple=i, reason="unknown vertices", vertices=stray)
            known = False
            continue
        missing = V - (T.A | T.B)
        if missing:
            rep.add("i", triple=i, reason="vertices in neither side", vertices=missing)
        only_a, only_b = T.A - T.B, T.B - T.A
        for u in vertex_order(only_a):
            for w in G.rotation[u]:
                if w in only_b:
                    rep.add("ii", triple=i, edge=(u, w))
        if T.separator != (T.A & T.B):
            rep.add("iii", triple=i, reason="S differs from A ∩ B", S=T.separator, A_and_B=T.A & T.B)
        if len(T.S) != len(T.separator):
            rep.add("iii", triple=i, reason="repeated separator vertex")
        if T.p != p:
            rep.add("iii", triple=i, reason="width differs", width=T.p, expected=p)
    for i in range(1, len(triples)):
        a, b = triples[i - 1], triples[i]
        if not (a.A < b.A):
            rep.add("iv", pair=(i, i + 1), reason="A does not strictly grow")
        if not (a.B > b.B):
            rep.add("iv", pair=(i, i + 1), reason="B does not strictly shrink")
    if not known:
        return rep
    shape = triples[0].shape
    for i, T in enumerate(triples, start=1):
        if T.shape != shape:
            rep.add("v", triple=i, reason="mixed shapes")
            continue
        if shape == PATH:
            _check_path(G, T, i, L1, rep)
        else:
            _check_cycle(G, T, i, rep)
    if shape == CYCLE:
        if not L1 <= triples[0].A:
            rep.add("v", triple=1, reason="L1 not inside A_1", vertices=L1 - triples[0].A)
        first = (triples[0].vstar, triples[0].vdagger)
        for i, T in enumerate(triples, start=1):
            if (T.vstar, T.vdagger) != first:
                rep.add("v", triple=i, reason="anchors differ from the first triple")
    index_of: dict = {}
    for i, T in enumerate(triples, start=1):
        for k, v in enumerate(T.inner, start=1):
            if v in index_of and index_of[v][1] != k:
                j, l = index_of[v]
                rep.add("vi", vertex=v, first=(j, l), second=(i, k))
            index_of.setdefault(v, (i, k))
    for i, T in enumerate(triples, start=1):
        per: dict[int, list] = {}
        for v in T.separator:
            per.setdefault(layer[v], []).append(v)
        for lay, vs in sorted(per.items()):
            if len(vs) > 2:
                rep.add("vii", triple=i, layer=lay, vertices=frozenset(vs))
    width = min(T.p_prime for T in triples)
    for k in range(width):
        ref = layer[triples[0].inner[k]]
        for i, T in enumerate(triples, start=1):
            if layer[T.inner[k]] != ref:
                rep.add("viii", index=k + 1, triple=i, layer=layer[T.inner[k]], expected=ref)
    return rep
