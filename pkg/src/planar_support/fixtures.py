"""Hand-built hypergraph instances showing why twins cannot be dropped freely."""

from __future__ import annotations

import networkx as nx

from .hypergraph import Hypergraph, normalize, remove_vertices

COUNTER_VERTICES = ("a", "b", "c", "d", "v_a", "v_b", "v_d", "u_b", "u_c", "u_d", "t", "t'")

# size-two hyperedges; they pin the embedding of everything but t and t'
COUNTER_SOLID = (
    ("a", "d"), ("d", "b"), ("a", "b"), ("b", "c"), ("c", "d"), ("a", "c"),
    ("a", "v_a"), ("v_a", "v_d"), ("v_d", "v_b"), ("v_b", "b"), ("d", "v_d"),
    ("b", "u_b"), ("u_b", "u_d"), ("u_d", "u_c"), ("u_c", "c"), ("d", "u_d"),
)

COUNTER_LARGE = (
    ("a", "v_a", "t", "t'", "c"), ("a", "v_b", "t", "t'", "c"),
    ("b", "v_a", "t", "t'", "c"), ("b", "v_b", "t", "t'", "c"),
    ("b", "u_b", "t", "t'", "a"), ("b", "u_c", "t", "t'", "a"),
    ("c", "u_b", "t", "t'", "a"), ("c", "u_c", "t", "t'", "a"),
)

# the extra edges which, with the solid ones, give a 2-outerplanar support
COUNTER_DOTTED = (
    ("t", "a"), ("t", "b"), ("t", "v_a"), ("t", "v_b"),
    ("t'", "c"), ("t'", "b"), ("t'", "u_b"), ("t'", "u_c"),
)


def counter_hypergraph() -> Hypergraph:
    return normalize(COUNTER_VERTICES, list(COUNTER_SOLID) + list(COUNTER_LARGE))


def counter_minus_t() -> Hypergraph:
    return remove_vertices(counter_hypergraph(), ["t"])


def counter_support_graph() -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(COUNTER_VERTICES)
    g.add_edges_from(COUNTER_SOLID)
    g.add_edges_from(COUNTER_DOTTED)
    return g


def _copy_name(v: str, i: int) -> str:
    return f"{v}.{i}"


def copies_hypergraph(ell: int) -> Hypergraph:
    """``ell`` copies of the counter instance tied together by a hub vertex.

    The hub ``v*`` is adjacent (size-two hyperedges) to every a_i, b_i, c_i,
    and eight unions over all copies replace the size-five hyperedges.
    """
    if ell < 1:
        raise ValueError("need at least one copy")
    hub = "v*"
    vertices = [_copy_name(v, i) for i in range(1, ell + 1) for v in COUNTER_VERTICES] + [hub]
    edges: list[tuple] = []
    for i in range(1, ell + 1):
        edges += [(_copy_name(x, i), _copy_name(y, i)) for x, y in COUNTER_SOLID]
        edges += [(_copy_name(x, i), hub) for x in ("a", "b", "c")]

    def group(v: str) -> list[str]:
        return [_copy_name(v, i) for i in range(1, ell + 1)]

    T = group("t") + group("t'")
    for first, second, third in (
        ("a", "c", "v_a"), ("a", "c", "v_b"), ("b", "c", "v_a"), ("b", "c", "v_b"),
        ("b", "a", "u_b"), ("b", "a", "u_c"), ("c", "a", "u_b"), ("c", "a", "u_c"),
    ):
        edges.append(tuple(group(first) + group(second) + group(third) + T + [hub]))
    return normalize(vertices, edges)


def copies_minus_one_twin(ell: int) -> Hypergraph:
    return remove_vertices(copies_hypergraph(ell), [_copy_name("t", 1)])
