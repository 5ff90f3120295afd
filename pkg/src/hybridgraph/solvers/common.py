"""Shared solver plumbing: results, deadlines, representation factory."""

import time
from dataclasses import dataclass, field

from ..addition import AdditionGraph
from ..baseline import BaselineGraph
from ..contraction import ContractionGraph
from ..core import HybridGraph
from ..instrumented import (
    CountingAdditionGraph,
    CountingBaselineGraph,
    CountingHybridGraph,
)

REPR_NAMES = ("hybrid", "alist")


class SolveTimeout(Exception):
    """Raised when a solver runs past its deadline."""


class Deadline:
    """Monotonic-clock budget; solvers poll it every few thousand nodes."""

    __slots__ = ("t_end",)

    def __init__(self, seconds=None):
        self.t_end = None if seconds is None else time.monotonic() + seconds

    def expired(self):
        return self.t_end is not None and time.monotonic() > self.t_end


@dataclass
class SolverResult:
    problem: str
    n: int
    answer: object        # minimum size for optimization, bool for decision
    witness: list | None
    nodes: int
    wall_ms: float
    repr_name: str
    size: int | None = None
    k: int | None = None
    fold: bool = False
    counters: dict | None = field(default=None, repr=False)

    def as_dict(self):
        return {
            "problem": self.problem,
            "n": self.n,
            "answer": self.answer,
            "size": self.size,
            "k": self.k,
            "fold": self.fold,
            "witness": self.witness,
            "nodes": self.nodes,
            "wall_ms": round(self.wall_ms, 3),
            "repr": self.repr_name,
            "counters": self.counters,
        }


_CLASSES = {
    ("hybrid", "plain"): HybridGraph,
    ("hybrid", "addition"): AdditionGraph,
    ("hybrid", "contraction"): ContractionGraph,
    ("alist", "plain"): BaselineGraph,
    ("alist", "addition"): BaselineGraph,
}

_COUNTING = {
    ("hybrid", "plain"): CountingHybridGraph,
    ("hybrid", "addition"): CountingAdditionGraph,
    ("alist", "plain"): CountingBaselineGraph,
    ("alist", "addition"): CountingBaselineGraph,
}


def build_representation(repr_name, mode, n, edges, instrumented=False):
    """Construct the graph structure a solver runs on.

    repr_name: "hybrid" (constant-time undo) or "alist" (linked-list
    baseline with log replay).  mode: "plain", "addition" (permanent
    edge insertion), or "contraction" (color merging; hybrid only).
    """
    if repr_name not in REPR_NAMES:
        raise ValueError(f"unknown representation {repr_name!r}")
    table = _COUNTING if instrumented else _CLASSES
    cls = table.get((repr_name, mode))
    if cls is None:
        detail = "instrumented " if instrumented else ""
        raise ValueError(f"no {detail}{mode!r} mode for representation {repr_name!r}")
    return cls(n, edges)


def harvest_counters(g):
    counters = getattr(g, "counters", None)
    return counters.as_dict() if counters is not None else None
