import math
import random

import networkx as nx
import pytest

from oracles import adjacency, basic_sequence_violations, block_count
from planar_support.generators import corridor, fan, hinged_fan, nested_corridor, random_disk, wheel_corridor
from planar_support.plane_graph import EmbeddingError
from planar_support.separators import (
    CYCLE,
    PATH,
    SeparationExhausted,
    SeparatorTriple,
    NotTriangular,
    base_of,
    blocks_of,
    build_small_sepseq,
    build_wfss,
    classify_sequence,
    extend_block_sequence,
    initial_separation,
    largest_inner_block,
    next_nice_separation,
    potential,
    sweep,
    validate_wfss,
)
from planar_support.separators import nice
from planar_support.separators.small import TRIVIAL
from planar_support.separators.types import NiceSeparation


def as_basic(seq):
    return [(T.A, T.separator, T.B) for T in seq]


def edge_list(G):
    return list(G.edges())


# ----------------------------------------------------------------------
# validator


def test_validator_catches_repeated_A(triangle):
    G = fan(8)
    seq = build_small_sepseq(G)
    T1 = seq[0]
    bad = [T1, SeparatorTriple(T1.A, T1.inner, T1.B)] + list(seq[1:])
    rep = validate_wfss(G, bad)
    assert "iv" in rep.failed()
    assert rep.violations["iv"][0]["pair"] == [1, 2]


def test_validator_catches_interior_l1_vertex():
    G = fan(6)
    L1 = G.layer_decomposition[1]
    # a 3-vertex path along the outer walk has its middle vertex on L1
    walk = G.outer_walk()
    path = next((walk[k - 1], walk[k], walk[k + 1]) for k in range(1, len(walk) - 1)
                if all(G.has_edge(a, b) for a, b in [(walk[k - 1], walk[k]), (walk[k], walk[k + 1])])
                and not G.has_edge(walk[k - 1], walk[k + 1]))
    assert path[1] in L1
    T = SeparatorTriple(frozenset(G.vertices), path, frozenset(path))
    rep = validate_wfss(G, [T])
    reasons = {w["reason"] for w in rep.violations["v"]}
    assert "interior path vertex on L1" in reasons


def test_validator_empty_is_valid(triangle):
    assert validate_wfss(triangle, []).ok


def _disks():
    return [random_disk(1 + s % 3, 40 + 7 * s, s) for s in range(15)]


@pytest.mark.parametrize("G", _disks(), ids=lambda G: f"r{G.r}n{G.n}")
def test_built_sequences_pass_both_validators(G):
    seq = build_wfss(G, 3)
    assert validate_wfss(G, seq).ok
    assert not basic_sequence_violations(G.vertices, edge_list(G), as_basic(seq))
    assert seq.width <= 2 * G.r


def _mutations(G, seq, rng):
    """Variants that leave every S alone, so (i)-(iv) are judged alike."""
    triples = list(seq)
    out = []
    if len(triples) >= 2:
        k = rng.randrange(len(triples) - 1)
        sw = triples[:]
        sw[k], sw[k + 1] = sw[k + 1], sw[k]
        out.append(sw)
    for k, T in enumerate(triples):
        a_only = sorted(T.A - T.B, key=str)
        b_only = sorted(T.B - T.A, key=str)
        if a_only:
            v = rng.choice(a_only)
            out.append(triples[:k] + [SeparatorTriple(T.A - {v}, T.inner, T.B, T.shape, T.vstar, T.vdagger)] + triples[k + 1:])
        if b_only:
            v = rng.choice(b_only)
            out.append(triples[:k] + [SeparatorTriple(T.A | {v}, T.inner, T.B, T.shape, T.vstar, T.vdagger)] + triples[k + 1:])
            out.append(triples[:k] + [SeparatorTriple(T.A, T.inner, T.B - {v}, T.shape, T.vstar, T.vdagger)] + triples[k + 1:])
    return out


@pytest.mark.parametrize("seed", range(12))
def test_validator_agrees_with_oracle_on_mutations(seed):
    rng = random.Random(seed)
    G = random_disk(1 + seed % 3, 50, seed)
    seq = build_wfss(G, 3)
    checked = 0
    for bad in _mutations(G, seq, rng):
        got = set(validate_wfss(G, bad).failed()) & {"i", "ii", "iii", "iv"}
        want = basic_sequence_violations(G.vertices, edge_list(G), as_basic(bad))
        assert got == want
        checked += 1
    assert checked or len(seq) == 0


# generated stand-ins for the three depicted shapes


def test_path_shape_example():
    G = corridor(5, False)
    seq = build_wfss(G, 3)
    assert seq.shape == PATH and validate_wfss(G, seq).ok and len(seq) >= 2


def test_cycle_single_anchor_example():
    G = wheel_corridor(5)
    seq = build_wfss(G, 3)
    assert seq.shape == CYCLE and validate_wfss(G, seq).ok
    assert all(T.vstar == T.vdagger == "h" for T in seq)


@pytest.mark.parametrize("G", [hinged_fan(6, 1), corridor(5, True)], ids=["hinged", "hub-corridor"])
def test_cycle_two_anchor_example(G):
    seq = build_wfss(G, 3)
    assert seq.shape == CYCLE and validate_wfss(G, seq).ok
    assert all(T.vstar != T.vdagger for T in seq) and len(seq) >= 2


# ----------------------------------------------------------------------
# potential


def test_potential_examples(triangle, k4):
    assert potential(triangle, triangle.vertices) == 3
    assert potential(k4, k4.vertices) == 4
    assert potential(k4, []) == 0


@pytest.mark.parametrize("seed", range(8))
def test_potential_matches_brute_block_count(seed):
    G = random_disk(2 + seed % 2, 30, seed)
    adj = adjacency(G.edges(), G.vertices)
    L1 = G.layer_decomposition[1]
    rng = random.Random(seed)
    sets = [s.B for s in sweep(G)]
    sets += [frozenset(rng.sample(list(G.vertices), rng.randint(0, G.n))) for _ in range(10)]
    for B in sets:
        assert potential(G, B) == len(B & L1) + block_count(adj, B - L1)


# ----------------------------------------------------------------------
# nice separations


def _check_step(G, before, after, ell):
    assert before.A <= after.A and after.B <= before.B
    assert (after.A | after.B) == frozenset(G.vertices)
    assert potential(G, after.B) * ell >= potential(G, before.B) - 1
    if before.A == after.A or before.B == after.B:
        assert before.order != after.order


@pytest.mark.parametrize("n", [4, 5, 9, 20, 60])
def test_fan_sweep_steps(n):
    G = fan(n)
    seps = sweep(G)
    ell = largest_inner_block(G)
    assert ell == 2
    for a, b in zip(seps, seps[1:]):
        _check_step(G, a, b, ell)
        assert potential(G, a.B) - potential(G, b.B) <= 1
    # one step per spoke after the first
    assert len(seps) - 1 == n - 2


def test_triangle_step(triangle):
    s0 = initial_separation(triangle)
    try:
        s1 = next_nice_separation(triangle, s0)
    except SeparationExhausted:
        return
    _check_step(triangle, s0, s1, largest_inner_block(triangle))


@pytest.mark.parametrize("seed", range(20))
def test_random_disk_steps(seed):
    G = random_disk(1 + seed % 3, 60 + seed, seed)
    ell = largest_inner_block(G)
    seps = sweep(G)
    for a, b in zip(seps, seps[1:]):
        _check_step(G, a, b, ell)


def test_exhausted_below_ell():
    G = fan(6)
    s = next_nice_separation(G, initial_separation(G))
    tiny = NiceSeparation(s.A, s.B, s.witness)
    with pytest.raises(SeparationExhausted):
        next_nice_separation(G, tiny, ell=10**6)


def test_block_sweep_middle_on_block_cycle(monkeypatch):
    seen = []
    real = nice._block_sweep

    def spy(ctx, sep, nbrs):
        out = real(ctx, sep, nbrs)
        seen.append((ctx.G, sep, out))
        return out

    monkeypatch.setattr(nice, "_block_sweep", spy)
    for seed in range(30):
        G = random_disk(2, 80, seed)
        sweep(G)
    assert seen
    for G, sep, out in seen:
        L1 = G.layer_decomposition[1]
        inner = [v for v in sep.B if v not in L1]
        mid = out.witness[1]
        # the new middle vertex lies on the outer cycle of the block it swept
        block = next(b for b in blocks_of(G, inner) if sep.witness[1] in b and mid in b)
        assert mid in G.restrict(block).outer_walk()


def test_order_two_separations_have_two_sides():
    for seed in range(10):
        G = random_disk(1 + seed % 3, 50, seed)
        for s in sweep(G):
            if s.order != 2 or not (s.A - s.B) or not (s.B - s.A):
                continue
            g = G.to_networkx()
            g.remove_nodes_from(s.S)
            comps = list(nx.connected_components(g))
            assert len(comps) == 2
            assert {frozenset(c) for c in comps} == {s.A - s.S, s.B - s.S}


# ----------------------------------------------------------------------
# bases and classification


def test_hinged_fan_common_base():
    G = hinged_fan(6, 1)
    tri = [s for s in sweep(G) if s.is_triangular(G) and s.l1_part() == frozenset("uw")]
    assert len(tri) == 12
    # both stacks share the chord as their one base
    assert len({base_of(G, s).bases for s in tri}) == 1
    L1 = G.layer_decomposition[1]
    for s in tri:
        b = base_of(G, s)
        (C,) = b.bases
        assert C.witness == ("u", "w") and C.S == frozenset("uw")
        assert s.B & L1 <= C.B
        if b.direction == "left":
            assert s.A <= C.A
        else:
            assert s.B <= C.B and C.A <= s.A
    assert {base_of(G, s).direction for s in tri} == {"left", "right"}


def test_l1_trivial_has_two_trivial_bases():
    G = hinged_fan(6, 1)
    triv = [s for s in sweep(G) if s.is_triangular(G) and not s.is_l1_nontrivial(G)]
    assert triv
    for s in triv:
        b = base_of(G, s)
        assert b.direction is None and len(b.bases) == 2
        edge = s.l1_part()
        assert {(x.A, x.B) for x in b.bases} == {(frozenset(G.vertices), edge), (edge, frozenset(G.vertices))}


def test_base_of_rejects_non_triangular():
    G = fan(6)
    with pytest.raises(NotTriangular):
        base_of(G, initial_separation(G))


@pytest.mark.parametrize("seed", range(15))
def test_classification_properties(seed):
    G = random_disk(1 + seed % 3, 70, seed) if seed % 4 else hinged_fan(3 + seed, 1 + seed % 2)
    cls = classify_sequence(G, sweep(G))
    assert len(cls.of_kind(TRIVIAL)) <= 2
    for seg in cls.segments:
        if seg.base is None:
            continue
        for s in cls.members(seg):
            assert base_of(G, s).bases == seg.base.bases


# ----------------------------------------------------------------------
# short sequences


def test_fan20_sequence():
    G = fan(20)
    seq = build_small_sepseq(G)
    assert seq.width == 2 and validate_wfss(G, seq).ok
    assert len(seq) >= math.sqrt((math.log2(20) + 1) / 2) - 1
    assert len(seq) >= 10


def test_triangle_sequence(triangle):
    # both non-initial outer edges make a valid two-step sweep
    seq = build_small_sepseq(triangle)
    assert len(seq) == 2 and seq.width == 2 and validate_wfss(triangle, seq).ok


def test_small_needs_three_vertices():
    from planar_support.plane_graph import PlaneGraph

    with pytest.raises(ValueError):
        build_small_sepseq(PlaneGraph({1: [2], 2: [1]}))


def test_small_rejects_non_disk():
    from planar_support.plane_graph import PlaneGraph

    c4 = PlaneGraph({0: [1, 3], 1: [2, 0], 2: [3, 1], 3: [0, 2]}, (0, 3))
    with pytest.raises(EmbeddingError):
        build_small_sepseq(c4)


def test_hinged_fan_homogeneous_cycles():
    G = hinged_fan(6, 1)
    seq = build_small_sepseq(G)
    assert seq.provenance == "homogeneous run"
    assert seq.shape == CYCLE and len(seq) == 6
    assert all((T.vstar, T.vdagger) == ("u", "w") for T in seq)
    assert validate_wfss(G, seq).ok


# ----------------------------------------------------------------------
# lifting from an inner block


def _inner(G, threshold=3):
    L1 = G.layer_decomposition[1]
    C = blocks_of(G, [v for v in G.vertices if v not in L1])[0]
    sub = G.restrict(C)
    return C, sub, build_wfss(sub, threshold)


@pytest.mark.parametrize("seed", [0, 1, 3, 5])
def test_cycle_pass_through(seed):
    G = nested_corridor(5, 3, seed)
    C, _, inner = _inner(G)
    assert inner.shape == CYCLE
    out = extend_block_sequence(G, C, inner)
    assert out.provenance == "inner cycles" and len(out) == len(inner)
    rest = frozenset(G.vertices) - C
    for a, b in zip(inner, out):
        assert b.inner == a.inner and b.B == a.B and b.A == a.A | rest
    assert validate_wfss(G, out).ok


def test_wheel_corridor_single_anchor():
    G = wheel_corridor(5)
    C, _, inner = _inner(G)
    out = extend_block_sequence(G, C, inner)
    assert out.provenance == "cycle vertex" and out.shape == CYCLE
    assert all(T.vstar == T.vdagger == "h" for T in out)
    assert validate_wfss(G, out).ok and len(out) >= len(inner) // 6


def test_corridor_private_neighbours():
    G = corridor(5, False)
    C, _, inner = _inner(G)
    out = extend_block_sequence(G, C, inner)
    assert out.provenance == "extended paths" and out.shape == PATH
    assert out.width == inner.width + 2
    assert validate_wfss(G, out).ok and len(out) >= len(inner) // 6


def test_extend_needs_two_layers():
    G = fan(8)
    with pytest.raises(ValueError):
        extend_block_sequence(G, [], [])


def test_wfss_delegates_when_outerplanar():
    G = fan(15)
    assert build_wfss(G).triples == build_small_sepseq(G).triples


@pytest.mark.parametrize("seed", range(6))
def test_nested_corridor_pipelines_agree(seed):
    G = nested_corridor(4 + seed, 2, seed)
    C, sub, _ = _inner(G)
    direct = extend_block_sequence(G, C, build_small_sepseq(sub))
    assert len(build_wfss(G, 3)) == len(direct)


@pytest.mark.parametrize("seed", range(10))
def test_wfss_width_and_default_threshold(seed):
    G = random_disk(1 + seed % 3, 100, seed)
    for thr in (None, 3):
        seq = build_wfss(G, thr)
        assert seq.width <= 2 * G.r and validate_wfss(G, seq).ok
