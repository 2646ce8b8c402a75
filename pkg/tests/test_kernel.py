import pytest

from oracles import brute_twin_classes
from planar_support.fixtures import copies_hypergraph, counter_hypergraph
from planar_support.generators import random_hypergraph, twin_heavy_hypergraph
from planar_support.hypergraph import normalize, twin_classes, vertex_order
from planar_support.kernel import (
    KernelConfig,
    check_rule_safety,
    exceeds_safe_bound,
    kernelize,
    log2_safe_bound,
)
from planar_support.oracle import Verdict, find_support


def fingerprints(H):
    """Incidence sets with each hyperedge written as the labels of the classes
    it meets; a class is labelled by its smallest member, which the kernel keeps."""
    tp = twin_classes(H)
    label = {v: vertex_order(cls)[0] for cls in tp.classes for v in cls}
    named = [frozenset(label[v] for v in e) for e in H.edges]
    return {
        (vertex_order(cls)[0], frozenset(n for n, e in zip(named, H.edges) if cls[0] in e))
        for cls in tp.classes
    }


def test_config_validation():
    with pytest.raises(ValueError):
        KernelConfig(0)
    with pytest.raises(ValueError):
        KernelConfig(2, alpha=0)


def test_safe_bound_arithmetic():
    assert log2_safe_bound(1, 1) == 2 ** 6 * 6 ** 2
    assert not exceeds_safe_bound(10**6, 1, 1)
    assert exceeds_safe_bound(2 ** (2 ** 6 * 36) + 1, 1, 1)
    assert not exceeds_safe_bound(2 ** (2 ** 6 * 36), 1, 1)


@pytest.mark.parametrize("H", [counter_hypergraph(), copies_hypergraph(3), twin_heavy_hypergraph(40, 3, 1)], ids=repr)
def test_safe_bound_changes_nothing(H):
    out, rep = kernelize(H, KernelConfig(2))
    assert out == H and rep.removed_count == 0
    assert rep.bound.startswith("2^(2^")


def test_counter_safe_bound_string():
    _, rep = kernelize(counter_hypergraph(), KernelConfig(2))
    # 2r * m(r^2+r+1) with m = 24, r = 2; then 2r^2 = 8
    assert rep.bound == "2^(2^672 * 6^8)"


def test_alpha_one_drops_one_twin():
    out, rep = kernelize(counter_hypergraph(), KernelConfig(2, alpha=1))
    assert rep.removed == {"t": ("t'",)}
    assert out.n == 11 and "t" in out.vertices


@pytest.mark.slow
def test_alpha_two_breaks_three_copies():
    H = copies_hypergraph(3)
    T = max(twin_classes(H).classes, key=len)
    assert len(T) == 6
    out, rep = kernelize(H, KernelConfig(2, alpha=2))
    assert rep.removed_count == 4
    assert max(len(c) for c in twin_classes(out).classes) == 2
    assert find_support(H).verdict is Verdict.YES
    assert find_support(out).verdict is Verdict.NO


@pytest.mark.parametrize("seed", range(20))
@pytest.mark.parametrize("alpha", [1, 2, 3])
def test_kernel_properties(seed, alpha):
    H = twin_heavy_hypergraph(14, 4, seed)
    cfg = KernelConfig(2, alpha)
    out, rep = kernelize(H, cfg)
    assert kernelize(out, cfg)[0] == out
    assert out.n <= 2 ** H.m * alpha
    assert all(len(c) <= alpha for c in brute_twin_classes(out.vertices, out.edges))
    kept = set(out.vertices)
    gone = [v for vs in rep.removed.values() for v in vs]
    assert len(gone) == len(set(gone)) and kept | set(gone) == set(H.vertices) and not kept & set(gone)
    if alpha >= 2:
        # no class merges, so every label survives and the structure is fixed
        assert set(rep.removed) <= kept
        assert fingerprints(out) == fingerprints(H)


def test_alpha_one_can_merge_structure():
    # the hyperedge is exactly one twin class, and shrinks below size two
    H = normalize(None, [["a", "b"], ["a", "b", "c"]])
    out, _ = kernelize(H, KernelConfig(1, alpha=1))
    assert fingerprints(out) != fingerprints(H)
    out2, _ = kernelize(H, KernelConfig(1, alpha=2))
    assert fingerprints(out2) == fingerprints(H)


def test_keeps_smallest_ids():
    H = normalize(None, [["x3", "x1", "x2", "y"], ["y", "z"]])
    out, rep = kernelize(H, KernelConfig(1, alpha=1))
    assert rep.removed == {"x1": ("x2", "x3")}


def test_rule_on_class_above_representative_size():
    H = normalize(None, [list("abcdx"), ["x", "y"], ["y", "z"], ["z", "x"]])
    chk = check_rule_safety(H, "a")
    assert chk.alpha == 4 and chk.applicable and chk.preserved


def test_rule_not_applicable_to_counter_twins():
    chk = check_rule_safety(counter_hypergraph(), "t")
    assert not chk.applicable and chk.alpha == 13
    # the twin removal would indeed flip the answer
    assert find_support(counter_hypergraph()).verdict is Verdict.YES


def test_rule_on_single_hyperedge():
    H = normalize(None, [list("abcde")])
    chk = check_rule_safety(H, "c")
    assert chk.alpha == 2 and chk.applicable and chk.preserved


def test_rule_with_explicit_alpha():
    chk = check_rule_safety(random_hypergraph(5, 3, 1), "v1", alpha=99)
    assert not chk.applicable and chk.preserved is None
