import random

import networkx as nx
import pytest

from oracles import abstract_glue_edges, peel_layers, faces_of
from planar_support.generators import corridor, fan, hinged_fan, nested_corridor, random_disk, wheel_corridor
from planar_support.gluing import glue, surviving_sequence, verify_glue_layers
from planar_support.separators import CYCLE, build_small_sepseq, build_wfss, validate_wfss


def edge_sets(G):
    return {frozenset(e) for e in G.edges()}


def check_glue(G, seq, i, j):
    res = glue(G, seq, i, j)
    H = res.graph
    Ti, Tj = seq[i - 1], seq[j - 1]
    assert H.euler_ok()
    assert nx.check_planarity(H.to_networkx())[0]
    assert H.n == len(Ti.A) + len(Tj.B) - Ti.p
    assert edge_sets(H) == abstract_glue_edges(G.edges(), Ti.A, Tj.B, Ti.S, Tj.S)
    assert set(res.vertex_map) == Ti.A | Tj.B
    assert set(res.vertex_map.values()) == set(H.vertices)
    assert verify_glue_layers(G, res)
    assert H.r <= G.r
    # independent peeling of the glued embedding
    rot = {v: list(n) for v, n in H.rotation.items()}
    walk = next(w for w in faces_of(rot) if H.outer_dart in w)
    assert peel_layers(None, rot, walk) == H.r
    return res


def test_same_index_is_identity():
    G = fan(10)
    seq = build_small_sepseq(G)
    res = glue(G, seq, 3, 3)
    assert res.graph == G and all(k == v for k, v in res.vertex_map.items())


def test_bad_indices():
    G = fan(10)
    seq = build_small_sepseq(G)
    for i, j in ((0, 2), (3, 2), (1, len(seq) + 1)):
        with pytest.raises(IndexError):
            glue(G, seq, i, j)


@pytest.mark.parametrize("n", [6, 10, 25])
def test_fan_first_and_last(n):
    G = fan(n)
    seq = build_small_sepseq(G)
    t = len(seq)
    res = check_glue(G, seq, 1, t)
    assert res.graph.r == 1
    assert res.graph.n == len(seq[0].A) + len(seq[t - 1].B) - 2
    assert res.graph.n < G.n


def test_degenerate_glue_is_a_subgraph():
    G = fan(10)
    seq = build_small_sepseq(G)
    assert seq[0].A == seq[0].separator
    res = glue(G, seq, 1, 4)
    assert edge_sets(res.graph) <= {frozenset(res.vertex_map.get(v, v) for v in e) for e in G.edges()}
    assert verify_glue_layers(G, res)


def _cases():
    out = []
    for s in range(12):
        G = random_disk(1 + s % 3, 60 + 5 * s, 100 + s)
        out.append((f"disk{s}", G))
    out += [
        ("hinged", hinged_fan(6, 1)),
        ("wheel", wheel_corridor(6)),
        ("corridor", corridor(6)),
        ("hub-corridor", corridor(6, True)),
        ("nested", nested_corridor(6, 3, 2)),
    ]
    return out


@pytest.mark.parametrize("name,G", _cases(), ids=[c[0] for c in _cases()])
def test_all_pairs(name, G):
    seq = build_wfss(G, 3)
    t = len(seq)
    pairs = [(i, j) for i in range(1, t + 1) for j in range(i + 1, t + 1)]
    for i, j in pairs[:40]:
        res = check_glue(G, seq, i, j)
        rest = surviving_sequence(seq, res)
        assert len(rest) == t - (j - i)
        assert validate_wfss(res.graph, rest).ok


def test_cycle_glue_keeps_anchors():
    G = hinged_fan(8, 1)
    seq = build_wfss(G, 3)
    assert seq.shape == CYCLE
    res = check_glue(G, seq, 2, 6)
    for a in ("u", "w"):
        assert res.vertex_map[a] == a
        assert res.graph.layer(a) == 1


def test_single_anchor_cycle_glue():
    G = wheel_corridor(7)
    seq = build_wfss(G, 3)
    assert seq.shape == CYCLE and seq[0].vstar == seq[0].vdagger
    check_glue(G, seq, 1, len(seq))


def test_glue_is_deterministic():
    G = random_disk(2, 90, 5)
    seq = build_wfss(G, 3)
    rng = random.Random(0)
    i, j = sorted(rng.sample(range(1, len(seq) + 1), 2))
    assert glue(G, seq, i, j).graph == glue(G, seq, i, j).graph
