"""Top-level construction of a well-formed separator sequence."""

from __future__ import annotations

import math

from ..plane_graph import EmbeddingError, PlaneGraph, is_triangulated_disk
from .blocks import extend_block_sequence
from .regions import blocks_of
from .small import build_small_sepseq
from .types import WfsSequence


def block_threshold(n: int, r: int) -> float:
    """s = 2^((log2 n)^((r-1)/r)): blocks at least this large are recursed into."""
    if n < 2:
        return math.inf
    return 2 ** (math.log2(n) ** ((r - 1) / r))


def length_bound(n: int, r: int) -> int:
    """⌊(log2 n)^(1/2r) / 6^r⌋, the guaranteed length."""
    if n < 2:
        return 0
    return math.floor(math.log2(n) ** (1 / (2 * r)) / 6**r)


def build_wfss(G: PlaneGraph, threshold: float | None = None) -> WfsSequence:
    """Recurse into a large block of G - L1 if there is one, else build directly.

    ``threshold`` replaces the block size s at every level of the recursion.
    """
    if not is_triangulated_disk(G):
        raise EmbeddingError("expected a triangulated disk")
    r = G.r
    s = block_threshold(G.n, r) if threshold is None else threshold
    if r >= 2:
        L1 = G.layer_decomposition[1]
        inner = [v for v in G.vertices if v not in L1]
        C = blocks_of(G, inner)[0]
        if len(C) >= max(s, 3):
            sub = G.restrict(C)
            if not is_triangulated_disk(sub):
                raise AssertionError("a block of G - L1 should be a triangulated disk")
            inner_seq = build_wfss(sub, threshold)
            lifted = extend_block_sequence(G, C, inner_seq)
            return WfsSequence(lifted.triples, G, f"block({len(C)}) {inner_seq.provenance} -> {lifted.provenance}")
    return build_small_sepseq(G)
