"""Twin-class capping: the kernel for planar support with bounded outerplanarity."""

from __future__ import annotations

from dataclasses import dataclass, field

from .hypergraph import Hypergraph, remove_vertices, twin_classes, vertex_order
from .oracle import BudgetExceeded, RuleCheck, check_rule_safety, min_representative_solution_size

__all__ = [
    "KernelConfig",
    "KernelReport",
    "kernelize",
    "log2_safe_bound",
    "exceeds_safe_bound",
    "check_rule_safety",
    "min_representative_solution_size",
    "RuleCheck",
    "BudgetExceeded",
]


def _bound_exponent(m: int, r: int) -> int:
    return 2 * r * m * (r * r + r + 1)


def log2_safe_bound(m: int, r: int) -> int:
    """log2 of the class-size bound: 2^(2r·m(r²+r+1)) · 6^(2r²)."""
    return 2 ** _bound_exponent(m, r) * 6 ** (2 * r * r)


def exceeds_safe_bound(size: int, m: int, r: int) -> bool:
    """size > 2^(log2_safe_bound), decided without building the bound."""
    if size <= 1:
        return False
    bits = (size - 1).bit_length()  # size > 2^L  <=>  bits > L
    # the bound's log is at least 2^e; skip building it when that already wins
    e = _bound_exponent(m, r)
    if e >= bits.bit_length():
        return False
    return bits > log2_safe_bound(m, r)


@dataclass(frozen=True)
class KernelConfig:
    r: int
    alpha: int | None = None  # None: the proven safe bound

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError("r must be at least 1")
        if self.alpha is not None and self.alpha < 1:
            raise ValueError("alpha must be at least 1")


@dataclass(frozen=True)
class KernelReport:
    alpha: int | None
    bound: str  # the cap, written out; symbolic for the safe bound
    classes: int
    # class label (smallest member) -> removed vertices
    removed: dict = field(default_factory=dict)

    @property
    def removed_count(self) -> int:
        return sum(len(v) for v in self.removed.values())

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "safe_bound": self.alpha is None,
            "bound": self.bound,
            "classes": self.classes,
            "removed": {str(k): len(v) for k, v in self.removed.items()},
            "removed_vertices": {str(k): [str(x) for x in v] for k, v in self.removed.items()},
        }


def kernelize(H: Hypergraph, cfg: KernelConfig) -> tuple[Hypergraph, KernelReport]:
    """Keep at most alpha vertices (the smallest ids) of every twin class.

    Removal can shrink a hyperedge below two vertices, which merges classes,
    so capping repeats until every class fits.
    """
    m = H.m
    classes = len(twin_classes(H).classes)
    removed: dict = {}
    out = H
    while True:
        drop = []
        for members in twin_classes(out).classes:
            ordered = vertex_order(members)
            if cfg.alpha is None:
                if not exceeds_safe_bound(len(ordered), m, cfg.r):
                    continue
                # unreachable at any size that fits in memory
                cap = 2 ** log2_safe_bound(m, cfg.r)
            else:
                cap = cfg.alpha
            if len(ordered) > cap:
                removed[ordered[0]] = removed.get(ordered[0], ()) + tuple(ordered[cap:])
                drop += ordered[cap:]
        if not drop:
            break
        out = remove_vertices(out, drop)
    if cfg.alpha is None:
        bound = f"2^(2^{_bound_exponent(m, cfg.r)} * 6^{2 * cfg.r * cfg.r})"
    else:
        bound = str(cfg.alpha)
    return out, KernelReport(cfg.alpha, bound, classes, removed)
