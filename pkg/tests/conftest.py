"""Shared builders and independent reference implementations.

The reference solvers here are deliberately written with different
strategies than the package (ordered-partition enumeration, path-at-a-time
recursion, double-loop set builds) so agreement is evidence, not
tautology.
"""

from itertools import permutations

import pytest

from ddpc.digraph import Digraph
from ddpc.path_system import PathSystem, validate_system


def build(n, arcs):
    return Digraph(n, arcs)


def complete(n):
    """All digons."""
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def transitive(n):
    """Transitive tournament: u -> v iff u < v."""
    return Digraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle3():
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


def _splits(items, k):
    """All ways to cut a sequence into k (possibly empty) contiguous blocks."""
    if k == 1:
        yield (items,)
        return
    for cut in range(len(items) + 1):
        for rest in _splits(items[cut:], k - 1):
            yield (items[:cut],) + rest


def brute_ddpc(d, source, sinks):
    """Spanning-system decision by ordered set partitions.

    Every vertex except the source is assigned to exactly one path, so a
    spanning system is a permutation of V \\ {s} cut into k blocks, block i
    ending at sink i.  Checks all of them.
    """
    k = len(sinks)
    rest = [v for v in range(d.n) if v != source]
    for perm in permutations(rest):
        for blocks in _splits(perm, k):
            if any(not b or b[-1] != t for b, t in zip(blocks, sinks)):
                continue
            ok = True
            for b in blocks:
                if not d.has_arc(source, b[0]):
                    ok = False
                    break
                for x, y in zip(b, b[1:]):
                    if not d.has_arc(x, y):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False


def iter_simple_paths(d, start, goal, banned):
    """All simple start->goal paths avoiding ``banned`` and, internally,
    the goal itself."""
    stack = [(start, (start,))]
    while stack:
        v, path = stack.pop()
        if v == goal:
            yield path
            continue
        for w in range(d.n):
            if w in banned or w in path:
                continue
            if not d.has_arc(v, w):
                continue
            if w == goal:
                yield path + (w,)
            else:
                stack.append((w, path + (w,)))


def brute_max_cover(d, source, sinks):
    """Maximum cover by path-at-a-time recursion; 0 when no system exists."""
    best = 0
    k = len(sinks)
    sinkset = set(sinks)

    def go(i, used):
        nonlocal best
        if i == k:
            best = max(best, len(used))
            return
        banned = (used | sinkset) - {source, sinks[i]}
        for p in iter_simple_paths(d, source, sinks[i], banned):
            go(i + 1, used | set(p))

    go(0, {source})
    return best


def enumerate_systems(d, source, sinks):
    """Every valid system for (source, sinks), path-at-a-time."""
    k = len(sinks)
    sinkset = set(sinks)
    out = []

    def go(i, used, acc):
        if i == k:
            out.append(PathSystem(source, sinks, tuple(acc)))
            return
        banned = (used | sinkset) - {source, sinks[i]}
        for p in iter_simple_paths(d, source, sinks[i], banned):
            go(i + 1, used | set(p), acc + [p])

    go(0, {source}, [])
    for sys in out:
        assert not validate_system(d, sys)
    return out


def reference_boundary(d, sys):
    """Double-loop reference for the boundary sets; returns a dict of
    frozensets keyed like the partition fields."""
    covered = sys.covered()
    uncovered = [v for v in range(d.n) if v not in covered]
    entries = {x for x in covered for y in uncovered if d.has_arc(y, x)}
    exits = {x for x in covered for y in uncovered if d.has_arc(x, y)}
    pre_entries = set()
    post_exits = set()
    pre_pure = set()
    post_pure = set()
    pure_entries = entries - exits
    pure_exits = exits - entries
    for p in sys.paths:
        for i, v in enumerate(p):
            if v in entries and i > 0:
                pre_entries.add(p[i - 1])
                if v in pure_entries:
                    pre_pure.add(p[i - 1])
            if v in exits and i + 1 < len(p):
                post_exits.add(p[i + 1])
                if v in pure_exits:
                    post_pure.add(p[i + 1])
    return {
        "entries": frozenset(entries),
        "exits": frozenset(exits),
        "pure_entries": frozenset(pure_entries),
        "pure_exits": frozenset(pure_exits),
        "pre_entries": frozenset(pre_entries),
        "post_exits": frozenset(post_exits),
        "pre_pure_entries": frozenset(pre_pure),
        "post_pure_exits": frozenset(post_pure),
        "uncovered": tuple(sorted(uncovered)),
    }


@pytest.fixture
def k5():
    return complete(5)


@pytest.fixture
def tt3():
    return transitive(3)


@pytest.fixture
def c3():
    return cycle3()
