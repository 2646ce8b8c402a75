import math
import random

import networkx as nx
import pytest

from planar_support.generators import fan, random_disk, strip
from planar_support.hypergraph import normalize, twin_classes
from planar_support.separators import build_wfss
from planar_support.signatures import (
    SeparatorSignature,
    compress_support,
    find_equal_signature_pair,
    shrink_representative_support,
    signature,
    signature_bound,
    signatures,
    twin_id,
)
from planar_support.support import is_representative_support, is_support


def corridor_instance(k):
    """A ladder whose rungs all carry the same twin-class traffic."""
    G = strip(k)
    V = list(G.vertices)
    return G, normalize(V, [V, V[1:]])


def interval_hypergraph(G, seed, m=5):
    """Hyperedges that are connected in G: the hub plus a run of the path."""
    rng = random.Random(seed)
    path = [v for v in G.vertices if v != "h"]
    edges = []
    for _ in range(m):
        a = rng.randrange(len(path) - 1)
        b = rng.randrange(a + 1, len(path))
        edges.append(path[a : b + 1] + (["h"] if rng.random() < 0.5 else []))
    return normalize(G.vertices, edges)


def test_pi_records_connection_through_B():
    G = fan(8)
    H = normalize(G.vertices, [list(G.vertices)])
    seq = build_wfss(G)
    for i in range(1, len(seq) + 1):
        s = signature(G, H, seq, i)
        assert (0, 1, 2) in s.pi


def test_first_signature_with_singleton_classes():
    G = fan(8)
    H = normalize(G.vertices, [list(e) for e in G.edges()])
    assert all(len(c) == 1 for c in twin_classes(H).classes)
    seq = build_wfss(G)
    T = seq[0]
    assert T.A == T.separator
    s = signature(G, H, seq, 1)
    assert s.gamma == frozenset(twin_id(H, v) for v in T.S)
    assert len(set(s.phi)) == len(s.phi) == T.p


def test_pi_matches_definition_on_random_instances():
    for seed in range(10):
        G = fan(12)
        H = interval_hypergraph(G, seed)
        g = G.to_networkx()
        seq = build_wfss(G)
        for i, T in enumerate(seq, start=1):
            s = signature(G, H, seq, i)
            S = T.S
            want = set()
            for e_idx, e in enumerate(H.edges):
                sub = g.subgraph(T.B & e)
                for j in range(len(S)):
                    for l in range(j + 1, len(S)):
                        x, y = S[j], S[l]
                        if x in e and y in e and nx.has_path(sub, x, y):
                            want.add((e_idx, j + 1, l + 1))
            assert set(s.pi) == want
            assert s.phi == tuple(twin_id(H, v) for v in S)


@pytest.mark.parametrize("seed", range(8))
def test_gamma_is_monotone_and_count_is_bounded(seed):
    G = fan(10 + seed)
    H = interval_hypergraph(G, seed)
    assert is_support(G.to_networkx(), H)
    seq = build_wfss(G)
    sigs = signatures(G, H, seq)
    for a, b in zip(sigs, sigs[1:]):
        assert a.gamma <= b.gamma
    distinct = len(set(sigs))
    r = G.r
    assert math.log2(distinct) < H.m * (r * r + r + 1)
    assert distinct < signature_bound(H.m, r)


def test_signature_needs_representative_support():
    G = fan(6)
    H = normalize(list(G.vertices) + ["z"], [list(G.vertices), ["z", "h"], ["z", "p1"]])
    seq = build_wfss(G)
    assert not is_representative_support(G, H)
    with pytest.raises(ValueError):
        signature(G, H, seq, 1)
    with pytest.raises(ValueError):
        signatures(G, H, seq)


def test_equal_pair_examples():
    a = SeparatorSignature(frozenset(), (), ())
    b = SeparatorSignature(frozenset({(0,)}), (), ())
    assert find_equal_signature_pair([]) is None
    assert find_equal_signature_pair([a, b]) is None
    assert find_equal_signature_pair([a, a]) == (1, 2)
    assert find_equal_signature_pair([a, b, b, a]) == (2, 3)


def test_pigeonhole():
    sigs = [SeparatorSignature(frozenset({(k % 3,)}), (), ()) for k in range(4)]
    assert find_equal_signature_pair(sigs) is not None


def test_irreducible_returns_none():
    G = fan(10)
    H = normalize(G.vertices, [list(e) for e in G.edges()])
    assert shrink_representative_support(G, H, build_wfss(G)) is None


@pytest.mark.parametrize("k", range(3, 13))
def test_shrink_duplicated_corridor(k):
    G, H = corridor_instance(k)
    seq = build_wfss(G)
    assert find_equal_signature_pair(signatures(G, H, seq)) is not None
    res = shrink_representative_support(G, H, seq)
    assert res.graph.n < G.n
    assert is_representative_support(res.graph, H)


@pytest.mark.parametrize("k", [3, 6, 9])
def test_compress_to_fixpoint(k):
    G, H = corridor_instance(k)
    T, steps = compress_support(G, H)
    sizes = [G.n] + [s.graph.n for s in steps]
    assert all(a > b for a, b in zip(sizes, sizes[1:]))
    assert is_representative_support(T, H)
    if T.n >= 3:
        assert shrink_representative_support(T, H, build_wfss(T)) is None


def test_signatures_on_layered_disks_stay_under_bound():
    for seed in range(6):
        G = random_disk(2, 40, seed)
        V = sorted(G.vertices, key=str)
        rng = random.Random(seed)
        # hyperedges built from neighbourhoods are connected in G
        edges = [[v] + list(G.rotation[v]) for v in rng.sample(V, 4)]
        H = normalize(V, edges)
        sigs = signatures(G, H, build_wfss(G, 3))
        assert len(set(sigs)) < signature_bound(H.m, G.r)
