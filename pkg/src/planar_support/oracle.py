"""Exact search for r-outerplanar supports of small hypergraphs.

Two engines share one contract. ``dfs`` branches over the candidate edges
(pairs of vertices that share a hyperedge of size at least three, on top of
the forced size-two hyperedges) with planarity and connectivity pruning.
``sat`` hands planarity and connectivity to a SAT solver and post-checks
the layer bound. Both report yes, no or unknown, and every yes carries a
witness that has been re-verified independently of the search.
"""

from __future__ import annotations

import itertools
import threading
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Hashable, Iterable

import networkx as nx
from pysat.solvers import Solver

from .hypergraph import Hypergraph, remove_vertices, restrict_to, twin_classes
from .outerplanarity import best_embedding
from .plane_graph import PlaneGraph, planar_embedding
from .sat_support import SupportEncoding
from .support import is_support, representatives_cover

Vertex = Hashable


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class BudgetExceeded(RuntimeError):
    """An exact answer was needed but the search budget ran out."""


@dataclass(frozen=True)
class SearchBudget:
    max_free_edges: int = 23
    max_nodes: int = 10**8
    time_cap: float = 600.0
    engine: str = "auto"


@dataclass
class SearchStats:
    engine: str
    free_edges: int
    forced_edges: int
    nodes: int = 0
    seconds: float = 0.0
    reason: str | None = None


@dataclass
class SupportResult:
    verdict: Verdict
    graph: nx.Graph | None = None
    embedding: PlaneGraph | None = None
    layers: int | None = None
    stats: SearchStats | None = field(default=None)

    @property
    def found(self) -> bool:
        return self.verdict is Verdict.YES


@dataclass(frozen=True)
class CandidateEdges:
    forced: tuple[tuple, ...]
    free: tuple[tuple, ...]


def candidate_edges(H: Hypergraph) -> CandidateEdges:
    """Edges a minimal support may use.

    Size-two hyperedges are forced. Any other useful edge joins two vertices
    of a common hyperedge; free edges come sorted by how many hyperedges
    they lie in, most first.
    """
    idx = {v: i for i, v in enumerate(H.vertices)}

    def key(u, v):
        return (u, v) if idx[u] < idx[v] else (v, u)

    forced = sorted({key(*tuple(e)) for e in H.edges if len(e) == 2}, key=lambda e: (idx[e[0]], idx[e[1]]))
    forced_set = set(forced)
    count: dict = {}
    for e in H.edges:
        if len(e) < 3:
            continue
        for u, v in itertools.combinations(e, 2):
            k = key(u, v)
            if k not in forced_set:
                count[k] = count.get(k, 0) + 1
    free = sorted(count, key=lambda e: (-count[e], idx[e[0]], idx[e[1]]))
    return CandidateEdges(tuple(forced), tuple(free))


# ----------------------------------------------------------------------
# witnesses


def _bridged(g: nx.Graph) -> nx.Graph:
    """Join the components of g by a star of edges between their first vertices.

    Extra edges never break a support, and joining along outer faces keeps
    every layer index, so the joined graph serves as the embedding carrier.
    """
    comps = sorted((sorted(c, key=str) for c in nx.connected_components(g)), key=lambda c: str(c[0]))
    h = g.copy()
    for c in comps[1:]:
        h.add_edge(comps[0][0], c[0])
    return h


def _join_embeddings(parts: list[PlaneGraph]) -> PlaneGraph:
    """Disjoint union of plane graphs joined through their outer faces."""
    rot: dict = {}
    order: list = []
    for P in parts:
        for v in P.vertices:
            rot[v] = list(P.rotation[v])
            order.append(v)
    base = parts[0]
    root = base.outer_dart[0] if base.outer_dart else base.vertices[0]
    root_pred = base.outer_walk()[-1] if base.outer_dart else None
    outer = base.outer_dart
    for P in parts[1:]:
        y = P.outer_dart[0] if P.outer_dart else P.vertices[0]
        y_pred = P.outer_walk()[-1] if P.outer_dart else None
        # insert each bridge at the outer corner of its endpoints
        if root_pred is None:
            rot[root].append(y)
            root_pred = y
        else:
            rot[root].insert(rot[root].index(root_pred) + 1, y)
        if y_pred is None:
            rot[y].append(root)
        else:
            rot[y].insert(rot[y].index(y_pred) + 1, root)
        if outer is None:
            outer = (root, y)
    return PlaneGraph(rot, outer, order)


# branch-and-bound nodes spent on one candidate's embeddings
EMBED_NODE_BUDGET = 200_000


def _embed_within(g: nx.Graph, r: int | None) -> tuple[int | None, PlaneGraph | None]:
    """Layer count and embedding of g; with ``r`` given, one with at most
    ``r`` layers if any exists (a count above ``r`` is exact).

    Returns ``(None, None)`` when that is out of reach.
    """
    if r is None:
        E = planar_embedding(_bridged(g))
        return (E.r if E.n else 0), E
    best, parts = best_embedding(g, goal=r, node_budget=EMBED_NODE_BUDGET)
    if best is None:
        return None, None
    if not parts:
        return 0, PlaneGraph({})
    return best, _join_embeddings(parts)


def verify_witness(g: nx.Graph, E: PlaneGraph, H: Hypergraph, r: int | None) -> bool:
    """Independent re-check of a claimed solution."""
    if set(g.nodes) != set(H.vertices) or not is_support(g, H):
        return False
    if not nx.check_planarity(g)[0]:
        return False
    if not E.euler_ok() or set(E.vertices) != set(g.nodes):
        return False
    if any(not E.has_edge(u, v) for u, v in g.edges):
        return False
    if r is not None and E.n and E.r > r:
        return False
    return True


# ----------------------------------------------------------------------
# depth-first engine


class _Stop(Exception):
    pass


class _DFS:
    def __init__(self, H: Hypergraph, r: int | None, cand: CandidateEdges, budget: SearchBudget) -> None:
        self.H = H
        self.r = r
        self.n = H.n
        self.idx = {v: i for i, v in enumerate(H.vertices)}
        self.free = [(self.idx[u], self.idx[v]) for u, v in cand.free]
        self.forced = [(self.idx[u], self.idx[v]) for u, v in cand.forced]
        self.edges = [frozenset(self.idx[v] for v in e) for e in H.edges if len(e) >= 3]
        self.edges_of_pair = [[j for j, e in enumerate(self.edges) if u in e and v in e] for u, v in self.free]
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_cap
        self.unknown = False
        self.result: tuple | None = None

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _Stop("node budget")
        if self.nodes % 512 == 0 and time.monotonic() > self.deadline:
            raise _Stop("time cap")

    def _connected_in(self, e: frozenset, adj: list[set]) -> bool:
        start = next(iter(e))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in e and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(e)

    def _is_support(self, adj: list[set]) -> bool:
        return all(self._connected_in(e, adj) for e in self.edges)

    def _graph(self, chosen: list[tuple]) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.forced)
        g.add_edges_from(chosen)
        return g

    def run(self) -> None:
        n = self.n
        inc = [set() for _ in range(n)]  # forced and included
        opt = [set() for _ in range(n)]  # included or undecided
        for u, v in self.forced:
            inc[u].add(v), inc[v].add(u)
            opt[u].add(v), opt[v].add(u)
        for u, v in self.free:
            opt[u].add(v), opt[v].add(u)
        if not self._is_support(opt):
            return
        if not nx.check_planarity(self._graph([]))[0]:
            return
        self.inc, self.opt = inc, opt
        self.limit = 3 * n - 6 if n >= 3 else n * (n - 1) // 2
        self.chosen: list[tuple] = []
        self._branch(0, len(self.forced))

    def _resolve_support(self) -> bool:
        """The included edges already form a support: the whole subtree is
        decided by this graph since adding edges cannot lower the layer count."""
        g = self._graph(self.chosen)
        if self.r is None:
            self.result = (g, None)
            return True
        layers, emb = _embed_within(g, self.r)
        if layers is None:
            self.unknown = True
            return False
        if layers <= self.r:
            self.result = (g, emb)
            return True
        return False

    def _branch(self, k: int, m: int) -> bool:
        self._tick()
        if self._is_support(self.inc):
            return self._resolve_support()
        if k == len(self.free):
            return False
        u, v = self.free[k]
        # exclude first
        self.opt[u].discard(v), self.opt[v].discard(u)
        if all(self._connected_in(self.edges[j], self.opt) for j in self.edges_of_pair[k]):
            if self._branch(k + 1, m):
                return True
        self.opt[u].add(v), self.opt[v].add(u)
        # include
        if m + 1 <= self.limit:
            self.chosen.append((u, v))
            if nx.check_planarity(self._graph(self.chosen))[0]:
                self.inc[u].add(v), self.inc[v].add(u)
                found = self._branch(k + 1, m + 1)
                self.inc[u].discard(v), self.inc[v].discard(u)
                if found:
                    return True
            self.chosen.pop()
        return False


# ----------------------------------------------------------------------
# SAT engine


def _minimize(H: Hypergraph, forced: Iterable[tuple], chosen: list[tuple]) -> list[tuple]:
    g = nx.Graph()
    g.add_nodes_from(H.vertices)
    g.add_edges_from(forced)
    g.add_edges_from(chosen)
    kept = list(chosen)
    for e in reversed(chosen):
        g.remove_edge(*e)
        if is_support(g, H):
            kept.remove(e)
        else:
            g.add_edge(*e)
    return kept


def _sat_search(H: Hypergraph, r: int | None, cand: CandidateEdges, budget: SearchBudget, stats: SearchStats):
    big = [e for e in H.edges if len(e) >= 3]
    enc = SupportEncoding(H.vertices, big, cand.forced, cand.free)
    deadline = time.monotonic() + budget.time_cap
    unknown = False
    with Solver(name="glucose4", bootstrap_with=enc.clauses) as s:
        while True:
            left = deadline - time.monotonic()
            if left <= 0:
                stats.reason = "time cap"
                return None, True
            timer = threading.Timer(left, s.interrupt)
            timer.start()
            try:
                status = s.solve_limited(expect_interrupt=True)
            finally:
                timer.cancel()
            stats.nodes += 1
            if status is None:
                stats.reason = "time cap"
                return None, True
            if not status:
                return None, unknown
            chosen = _minimize(H, cand.forced, enc.decode(s.get_model()))
            g = nx.Graph()
            g.add_nodes_from(H.vertices)
            g.add_edges_from(cand.forced)
            g.add_edges_from(chosen)
            layers, emb = _embed_within(g, r)
            if layers is not None and (r is None or layers <= r):
                return (g, emb), False
            if layers is None:
                unknown = True
            if not chosen:
                return None, unknown
            # every support containing these edges has at least as many layers
            s.add_clause(enc.block(chosen))
            s.clear_interrupt()


# ----------------------------------------------------------------------
# public entry points


def find_support(H: Hypergraph, r: int | None = None, budget: SearchBudget | None = None) -> SupportResult:
    """Search for a support of H that is r-outerplanar (planar if r is None)."""
    budget = budget or SearchBudget()
    if r is not None and r < 1:
        raise ValueError("r must be at least 1")
    cand = candidate_edges(H)
    engine = budget.engine
    if engine == "auto":
        engine = "dfs" if len(cand.free) <= budget.max_free_edges else "sat"
    if engine not in ("dfs", "sat"):
        raise ValueError(f"unknown engine {budget.engine!r}")
    stats = SearchStats(engine, len(cand.free), len(cand.forced))
    t0 = time.monotonic()
    if engine == "dfs":
        if len(cand.free) > budget.max_free_edges:
            stats.reason = "too many free edges"
            return SupportResult(Verdict.UNKNOWN, stats=stats)
        search = _DFS(H, r, cand, budget)
        try:
            search.run()
        except _Stop as stop:
            stats.reason = str(stop)
            search.unknown = True
            search.result = None
        stats.nodes = search.nodes
        found, unknown = search.result, search.unknown
        if found is not None:
            g, emb = found
            g = nx.relabel_nodes(g, dict(enumerate(H.vertices)))
            found = (g, None) if emb is None else (g, emb.relabeled(dict(enumerate(H.vertices))))
    else:
        found, unknown = _sat_search(H, r, cand, budget, stats)
    stats.seconds = time.monotonic() - t0
    if found is None:
        return SupportResult(Verdict.UNKNOWN if unknown else Verdict.NO, stats=stats)
    g, emb = found
    layers, emb2 = _embed_within(g, r)
    if emb2 is not None:
        emb = emb2
    if not verify_witness(g, emb, H, r):
        raise AssertionError("search produced a witness that fails re-verification")
    return SupportResult(Verdict.YES, g, emb, layers, stats)


def min_representative_solution_size(
    H: Hypergraph, r: int | None = None, budget: SearchBudget | None = None
) -> int | None:
    """Fewest vertices of a representative solution; None if there is none.

    Candidate vertex sets W are tried smallest first; W qualifies when every
    vertex outside it is covered by one inside it and H restricted to W has
    a solution. Raises BudgetExceeded if an undecided W could change the
    answer.
    """
    for k in range(0, H.n + 1):
        undecided = False
        for W in itertools.combinations(H.vertices, k):
            if not representatives_cover(W, H):
                continue
            res = find_support(restrict_to(H, W), r, budget)
            if res.verdict is Verdict.YES:
                if undecided:
                    raise BudgetExceeded(f"a vertex set of size {k} was left undecided")
                return k
            undecided |= res.verdict is Verdict.UNKNOWN
        if undecided:
            raise BudgetExceeded(f"a vertex set of size {k} was left undecided")
    return None


@dataclass(frozen=True)
class RuleCheck:
    applicable: bool
    preserved: bool | None
    alpha: int


def check_rule_safety(
    H: Hypergraph,
    v: Vertex,
    r: int | None = None,
    budget: SearchBudget | None = None,
    alpha: int | None = None,
) -> RuleCheck:
    """Check the twin-removal rule at ``v`` against the oracle.

    The rule applies when the twin class of ``v`` has at least ``alpha``
    members, where ``alpha`` defaults to one plus the minimum representative
    solution size. When it applies, ``preserved`` tells whether H and H - v
    get the same answer.
    """
    if alpha is None:
        size = min_representative_solution_size(H, r, budget)
        alpha = 1 + (size if size is not None else H.n)
    parts = twin_classes(H)
    if len(parts.members(v)) < alpha:
        return RuleCheck(False, None, alpha)

    before = find_support(H, r, budget).verdict
    after = find_support(remove_vertices(H, [v]), r, budget).verdict
    if Verdict.UNKNOWN in (before, after):
        raise BudgetExceeded("oracle could not decide one side of the rule")
    return RuleCheck(True, before == after, alpha)
