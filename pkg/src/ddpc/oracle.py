"""Exhaustive backtracking search for one-to-many disjoint path systems.

Ground truth for the move engine: small instances are settled here by brute
force, with a node budget so oversized inputs degrade to an honest "budget_exceeded"
instead of hanging.

The search grows all k paths at once from the shared source.  At every node
it extends the incomplete path with the fewest legal continuations (ties to
the lowest path index) and tries candidate vertices in ascending order, so
results are deterministic.  Sinks of still-incomplete paths are reserved:
no other path may consume them.

Modes:
  linkage   any valid system (no coverage requirement)
  spanning  a system covering every vertex
  max       a maximum-coverage system (full exploration)
  improve   any system covering at least ``target`` vertices

Budgets count search-tree nodes.  When a call passes no explicit budget the
DDPC_ORACLE_BUDGET environment variable applies, else 10**7.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .digraph import Digraph, iter_bits
from .path_system import PathSystem, validate_system

DEFAULT_BUDGET = 10**7
BUDGET_ENV_VAR = "DDPC_ORACLE_BUDGET"


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(
                f"{BUDGET_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


class _OutOfBudget(Exception):
    pass


@dataclass(frozen=True)
class OracleVerdict:
    """Outcome of one exhaustive search.

    kind is "found", "none_exists", or "budget_exceeded" (budget ran out).
    ``max_cover`` is the cover of the returned system when kind is "found";
    otherwise it is the best complete-system cover seen before stopping,
    which is exhaustive only in max mode.
    """

    kind: str
    system: PathSystem | None
    nodes_explored: int
    max_cover: int


def _check_instance(d: Digraph, source: int, sinks) -> tuple[int, ...]:
    sinks = tuple(sinks)
    if not (0 <= source < d.n):
        raise ValueError(f"source {source} out of range")
    if not sinks:
        raise ValueError("need at least one sink")
    if len(set(sinks)) != len(sinks):
        raise ValueError("duplicate sink")
    for t in sinks:
        if not (0 <= t < d.n):
            raise ValueError(f"sink {t} out of range")
        if t == source:
            raise ValueError("sink equals source")
    return sinks


class _Searcher:
    def __init__(self, d: Digraph, source: int, sinks: tuple[int, ...],
                 mode: str, budget: int, target: int = 0):
        self.d = d
        self.mode = mode
        self.budget = budget
        self.target = target
        self.source = source
        self.sinks = sinks
        self.k = len(sinks)
        self.full = (1 << d.n) - 1
        self.paths = [[source] for _ in sinks]
        self.used = 1 << source
        self.reserved = 0
        for t in sinks:
            self.reserved |= 1 << t
        self.complete = [False] * self.k
        self.n_complete = 0
        self.nodes = 0
        self.found: PathSystem | None = None
        self.best_cover = 0
        self.best_system: PathSystem | None = None

    def _snapshot(self) -> PathSystem:
        return PathSystem(self.source, self.sinks,
                          tuple(tuple(p) for p in self.paths))

    def _leaf(self) -> bool:
        cover = self.used.bit_count()
        if cover > self.best_cover:
            self.best_cover = cover
            self.best_system = self._snapshot()
        mode = self.mode
        if mode == "linkage":
            self.found = self._snapshot()
            return True
        if mode == "spanning":
            if cover == self.d.n:
                self.found = self._snapshot()
                return True
            return False
        if mode == "improve":
            if cover >= self.target:
                self.found = self._snapshot()
                return True
            return False
        return cover == self.d.n  # max: a full cover cannot be beaten

    def _search(self) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget
        if self.n_complete == self.k:
            return self._leaf()
        d = self.d
        mode = self.mode
        if mode != "linkage":
            # A free vertex is coverable only if something can still lead
            # into it (an incomplete endpoint or another free vertex) and it
            # can still lead somewhere (a free vertex or a reserved sink).
            # Both neighborhoods only shrink along a branch, so vertices
            # uncoverable here stay uncoverable below.
            free = self.full & ~self.used & ~self.reserved
            ep = 0
            for i in range(self.k):
                if not self.complete[i]:
                    ep |= 1 << self.paths[i][-1]
            uncoverable = 0
            for w in iter_bits(free):
                rest = free & ~(1 << w)
                if not (d.in_mask[w] & (ep | rest)):
                    uncoverable += 1
                elif not (d.out_mask[w] & (rest | self.reserved)):
                    uncoverable += 1
            if mode == "spanning":
                if uncoverable:
                    return False
            elif mode == "max":
                if d.n - uncoverable <= self.best_cover:
                    return False
            elif d.n - uncoverable < self.target:
                return False
        pick = -1
        pick_cands = 0
        pick_count = -1
        for i in range(self.k):
            if self.complete[i]:
                continue
            end = self.paths[i][-1]
            own = 1 << self.sinks[i]
            cands = d.out_mask[end] & ~self.used & ~(self.reserved ^ own)
            c = cands.bit_count()
            if pick_count < 0 or c < pick_count:
                pick, pick_cands, pick_count = i, cands, c
                if c == 0:
                    break
        if pick_count == 0:
            return False
        own = 1 << self.sinks[pick]
        path = self.paths[pick]
        for w in iter_bits(pick_cands):
            wb = 1 << w
            path.append(w)
            self.used |= wb
            done = wb == own
            if done:
                self.reserved &= ~wb
                self.complete[pick] = True
                self.n_complete += 1
            stop = self._search()
            if done:
                self.reserved |= wb
                self.complete[pick] = False
                self.n_complete -= 1
            self.used &= ~wb
            path.pop()
            if stop:
                return True
        return False


def _run(d: Digraph, source: int, sinks, mode: str,
         budget: int | None, target: int = 0) -> OracleVerdict:
    sinks = _check_instance(d, source, sinks)
    s = _Searcher(d, source, sinks, mode, _resolve_budget(budget), target)
    try:
        s._search()
    except _OutOfBudget:
        system = s.best_system if mode == "max" else None
        return OracleVerdict("budget_exceeded", system, s.nodes, s.best_cover)
    if mode == "max":
        if s.best_system is None:
            return OracleVerdict("none_exists", None, s.nodes, 0)
        return OracleVerdict("found", s.best_system, s.nodes, s.best_cover)
    if s.found is None:
        return OracleVerdict("none_exists", None, s.nodes, s.best_cover)
    return OracleVerdict("found", s.found, s.nodes,
                         len(s.found.covered()))


def exact_st_linkage(d: Digraph, source: int, sinks,
                  budget: int | None = None) -> OracleVerdict:
    """Search for any system of disjoint source-to-sink paths."""
    return _run(d, source, sinks, "linkage", budget)


def exact_ddpc(d: Digraph, source: int, sinks,
               budget: int | None = None) -> OracleVerdict:
    """Search for a system covering every vertex."""
    return _run(d, source, sinks, "spanning", budget)


def exact_max_system(d: Digraph, source: int, sinks,
                     budget: int | None = None) -> OracleVerdict:
    """Find a maximum-coverage system, exploring the whole space."""
    return _run(d, source, sinks, "max", budget)


def exact_improvement(d: Digraph, source: int, sinks, target: int,
                      budget: int | None = None) -> OracleVerdict:
    """Search for any system covering at least ``target`` vertices."""
    return _run(d, source, sinks, "improve", budget, target)


def certify_maximal(d: Digraph, sys: PathSystem,
                    budget: int | None = None) -> OracleVerdict:
    """Decide whether any system beats the given one's coverage.

    "none_exists" certifies the input is maximum for its source and sinks;
    "found" returns a strictly better system as witness.
    """
    problems = validate_system(d, sys)
    if problems:
        raise ValueError("invalid path system: " + "; ".join(problems))
    return exact_improvement(d, sys.source, sys.sinks,
                             sys.cover_count() + 1, budget)
