"""Separator signatures and support compression by gluing equal ones."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

import networkx as nx

from .gluing import GlueResult, glue
from .hypergraph import Hypergraph
from .plane_graph import PlaneGraph, is_triangulated_disk, triangulate_to_disk
from .separators import WfsSequence, build_wfss
from .support import is_representative_support

Vertex = Hashable
TwinId = tuple  # sorted indices of the hyperedges containing the class


def twin_id(H: Hypergraph, v: Vertex) -> TwinId:
    return tuple(sorted(H.incidence(v)))


@dataclass(frozen=True)
class SeparatorSignature:
    gamma: frozenset  # twin ids present in A_i
    phi: tuple  # phi[k - 1] is the twin id of v_{i,k}, k = 1..p
    pi: tuple  # sorted (hyperedge index, j, l) with j < l, 1-based

    def to_json(self) -> dict:
        return {
            "gamma": sorted(list(g) for g in self.gamma),
            "phi": {str(k): list(c) for k, c in enumerate(self.phi, start=1)},
            "pi": [list(x) for x in self.pi],
        }


def signature(G: PlaneGraph, H: Hypergraph, seq: WfsSequence, i: int) -> SeparatorSignature:
    """Signature of the i-th separator (1-based)."""
    if not is_representative_support(G, H):
        raise ValueError("G is not a representative support of H")
    return _signature(G.to_networkx(), H, seq[i - 1])


def _signature(g: nx.Graph, H: Hypergraph, T) -> SeparatorSignature:
    gamma = frozenset(twin_id(H, u) for u in T.A)
    S = T.S  # v_1 .. v_p' then v†, v*
    phi = tuple(twin_id(H, v) for v in S)
    pi = []
    for e_idx, e in enumerate(H.edges):
        members = [k for k, v in enumerate(S, start=1) if v in e]
        if len(members) < 2:
            continue
        comp = {}
        sub = g.subgraph(T.B & e)
        for c_no, c in enumerate(nx.connected_components(sub)):
            for v in c:
                comp[v] = c_no
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                j, l = members[a], members[b]
                if comp[S[j - 1]] == comp[S[l - 1]]:
                    pi.append((e_idx, j, l))
    return SeparatorSignature(gamma, phi, tuple(sorted(pi)))


def signatures(G: PlaneGraph, H: Hypergraph, seq: WfsSequence) -> list[SeparatorSignature]:
    if not is_representative_support(G, H):
        raise ValueError("G is not a representative support of H")
    g = G.to_networkx()
    return [_signature(g, H, T) for T in seq]


def find_equal_signature_pair(sigs: Sequence[SeparatorSignature]) -> tuple[int, int] | None:
    """First pair i < j (1-based, ordered by j then i) with equal signatures."""
    first: dict = {}
    for j, s in enumerate(sigs, start=1):
        if s in first:
            return first[s], j
        first[s] = j
    return None


def signature_bound(m: int, r: int) -> int:
    """2^(m(r²+r+1)): more distinct signatures than this cannot occur."""
    return 2 ** (m * (r * r + r + 1))


def shrink_representative_support(G: PlaneGraph, H: Hypergraph, seq: WfsSequence) -> GlueResult | None:
    """Glue the first pair of separators with equal signatures.

    Returns None when all signatures differ. The glued graph is re-checked
    and must again be a representative support of H.
    """
    pair = find_equal_signature_pair(signatures(G, H, seq))
    if pair is None:
        return None
    res = glue(G, seq, *pair)
    if res.graph.n >= G.n:
        raise AssertionError("gluing equal signatures did not remove a vertex")
    if not is_representative_support(res.graph, H):
        raise AssertionError("glued graph is no longer a representative support")
    return res


def compress_support(G: PlaneGraph, H: Hypergraph, threshold: float | None = None, max_steps: int = 10_000) -> tuple[PlaneGraph, list[GlueResult]]:
    """Shrink until no two separators share a signature.

    Each round triangulates the current support (extra edges keep it a
    representative support), builds a sequence and glues one equal pair.
    """
    steps = []
    for _ in range(max_steps):
        T = G if (G.n < 3 or is_triangulated_disk(G)) else triangulate_to_disk(G)
        if T.n < 3:
            return T, steps
        res = shrink_representative_support(T, H, build_wfss(T, threshold))
        if res is None:
            return T, steps
        steps.append(res)
        G = res.graph
    raise RuntimeError("support compression did not reach a fixpoint")
