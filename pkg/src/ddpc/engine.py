"""Cover-growing move engine for one-to-many disjoint path systems.

Each move template rewrites one or two paths of a valid non-spanning system
so that the result is again valid and covers strictly more vertices.  The
extra vertices always come from the uncovered zone, threaded in as a
*connector*: a path through uncovered vertices whose endpoints attach to an
exit (covered vertex with an arc into the zone) and an entry (covered
vertex with an arc coming back out of it).

Template inventory, searched in this order:

  T1_detour           splice a connector between an exit and the entry
                      immediately after it on the same path
  T2_source_reroute   cut a path at a vertex the source reaches directly;
                      the severed head migrates onto another path's tail
                      through a connector
  T3_same_path_cross  reorder two blocks of one path around a connector
  T4_cross_path_cross move an interior block to another path, glued in by
                      a connector
  T6_tail_swap        a family of tail exchanges between two paths (or a
                      refold within one), each splicing a single connector;
                      variants: swap, borrow_after, borrow_before, fold
  T5_double_cross     two-site rewrite of one path using both pieces of the
                      uncovered zone's closed tour cut at two arcs

Dropping variants (borrow_*, fold) shed a block of covered vertices and
only fire when the connector strictly outweighs the loss.  Every candidate
is validated constructively before it is returned: the rewritten system
must pass validation and must cover strictly more, so an unsound witness
can never escape the search.

Connectors prefer a tour through the whole zone (every rotation of its
closed tour is tried); when no rotation attaches, a shortest attachable
path found by layered search is used instead.  The search is deterministic:
templates in the order above, witness positions in ascending order, first
success wins.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, induced_subdigraph, is_semicomplete, is_strong, iter_bits
from .ham import hamiltonian_cycle
from .oracle import exact_ddpc, exact_st_linkage
from .path_system import BoundaryPartition, PathSystem, boundary_partition, validate_system


class StalePartitionError(ValueError):
    """Boundary partition no longer matches the system it is used with."""


class StaleMoveError(ValueError):
    """Move was found against a system with a different covered set."""


TEMPLATE_ORDER = (
    "T1_detour",
    "T2_source_reroute",
    "T3_same_path_cross",
    "T4_cross_path_cross",
    "T6_tail_swap",
    "T5_double_cross",
)

T6_VARIANTS = ("swap", "borrow_after", "borrow_before", "fold")


@dataclass(frozen=True)
class AugmentationMove:
    """One validated rewrite.

    ``witnesses`` holds the ordered named bindings that pin the rewrite
    down (path indices, positions, connector vertex tuples; T6 carries a
    ``variant`` binding first).  ``spliced_h_vertices`` lists the uncovered
    vertices the move absorbs.  ``source_cover`` is the covered set the
    move was found against; applying it to a system with a different
    covered set is refused.
    """

    template: str
    witnesses: tuple[tuple[str, object], ...]
    spliced_h_vertices: tuple[int, ...]
    source_cover: frozenset[int]


@dataclass(frozen=True)
class MoveRecord:
    template: str
    witnesses: tuple[tuple[str, object], ...]
    before_cover: int
    after_cover: int


@dataclass(frozen=True)
class AugmentResult:
    system: PathSystem
    trace: tuple[MoveRecord, ...]
    outcome: str  # "covered" | "stuck"


@dataclass(frozen=True)
class SolveConfig:
    use_fallback: bool = True
    fallback_cap: int = 14
    budget: int | None = None  # None: oracle default (env var, else 10**7)


@dataclass(frozen=True)
class SolveResult:
    """Outcome of ``solve``.

    status         "found", "none_exists", or "unknown"
    system         spanning system when status is "found"
    trace          applied move records, in order
    engine_outcome "covered" (moves alone spanned), "stuck" (moves ran dry
                   and nothing resolved the instance), or "fallback_used"
                   (the exhaustive search settled it)
    max_cover      cover the move engine itself reached (0 when it never
                   held a system)
    nodes_explored exhaustive-search nodes spent, if any
    final_partial  the system the engine held when it stopped short
    """

    status: str
    system: PathSystem | None
    trace: tuple[MoveRecord, ...]
    engine_outcome: str
    max_cover: int
    nodes_explored: int
    final_partial: PathSystem | None


class _Connectors:
    """Paths through the uncovered zone, built once per move search."""

    def __init__(self, d: Digraph, uncovered: tuple[int, ...]):
        self.d = d
        self.h = tuple(uncovered)
        mask = 0
        for v in self.h:
            mask |= 1 << v
        self.h_mask = mask
        m = len(self.h)
        sub, back = induced_subdigraph(d, self.h)
        self.strong = is_strong(sub)
        cycle = None
        if m == 1:
            cycle = (self.h[0],)
        elif m == 2:
            a, b = self.h
            if d.has_arc(a, b) and d.has_arc(b, a):
                cycle = (a, b)
        elif m >= 3 and self.strong:
            cycle = tuple(back[v] for v in hamiltonian_cycle(sub))
        self.cycle = cycle

    def full_path(self, src: int, dst: int) -> tuple[int, ...] | None:
        """A path through every uncovered vertex attaching src -> ... -> dst."""
        c = self.cycle
        if c is None:
            return None
        m = len(c)
        for r in range(m):
            if self.d.has_arc(src, c[r]) and self.d.has_arc(c[r - 1], dst):
                return c[r:] + c[:r]
        return None

    def some_path(self, src: int, dst: int) -> tuple[int, ...] | None:
        """A shortest attachable path through the zone, by layered search."""
        d = self.d
        starts = d.out_mask[src] & self.h_mask
        targets = d.in_mask[dst] & self.h_mask
        if not starts or not targets:
            return None
        parent: dict[int, int | None] = {}
        frontier: list[int] = []
        for v in iter_bits(starts):
            parent[v] = None
            frontier.append(v)
        visited = starts
        while frontier:
            for v in frontier:
                if targets & (1 << v):
                    out = []
                    cur: int | None = v
                    while cur is not None:
                        out.append(cur)
                        cur = parent[cur]
                    return tuple(reversed(out))
            nxt: list[int] = []
            for v in frontier:
                fresh = d.out_mask[v] & self.h_mask & ~visited
                for w in iter_bits(fresh):
                    parent[w] = v
                    nxt.append(w)
                visited |= fresh
            frontier = sorted(nxt)
        return None

    def connector(self, src: int, dst: int) -> tuple[int, ...] | None:
        return self.full_path(src, dst) or self.some_path(src, dst)

    def cut_pairs(self):
        """Cut the closed tour at two arcs: ordered pairs of the resulting
        vertex-disjoint paths, jointly covering the whole zone."""
        c = self.cycle
        if c is None or len(c) < 2:
            return
        m = len(c)

        def seg(a: int, b: int) -> tuple[int, ...]:
            # inclusive wrap-around slice c[a..b]
            if a <= b:
                return c[a:b + 1]
            return c[a:] + c[:b + 1]

        for i in range(m):
            for j in range(m):
                if i == j:
                    continue
                yield seg((i + 1) % m, j), seg((j + 1) % m, i)


def _rebuild(sys: PathSystem, template: str,
             witnesses: tuple[tuple[str, object], ...]) -> PathSystem:
    w = dict(witnesses)
    paths = list(sys.paths)
    if template == "T1_detour":
        p = paths[w["path"]]
        pos = w["pos"]
        paths[w["path"]] = p[:pos + 1] + w["via"] + p[pos + 1:]
    elif template == "T2_source_reroute":
        p = paths[w["from_path"]]
        q = paths[w["to_path"]]
        cut = w["cut"]
        paths[w["from_path"]] = (p[0],) + p[cut:]
        paths[w["to_path"]] = p[:cut] + w["via"] + q[1:]
    elif template == "T3_same_path_cross":
        p = paths[w["path"]]
        a, a1, a2 = w["w"], w["a1"], w["a2"]
        paths[w["path"]] = (p[:a + 1] + p[a1 + 1:a2] + w["via"]
                            + p[a + 1:a1 + 1] + p[a2:])
    elif template == "T4_cross_path_cross":
        p = paths[w["donor"]]
        q = paths[w["receiver"]]
        a1, a2, at = w["cut_from"], w["cut_to"], w["attach"]
        paths[w["donor"]] = p[:a1 + 1] + p[a2:]
        paths[w["receiver"]] = q[:at + 1] + p[a1 + 1:a2] + w["via"] + q[at + 1:]
    elif template == "T5_double_cross":
        p = paths[w["path"]]
        w1, w2, a1, a2 = w["w1"], w["w2"], w["a1"], w["a2"]
        paths[w["path"]] = (p[:w1 + 1] + p[a1:a2] + w["via2"]
                            + p[w2 + 1:a1] + w["via1"]
                            + p[w1 + 1:w2 + 1] + p[a2:])
    elif template == "T6_tail_swap":
        variant = w["variant"]
        if variant == "swap":
            p = paths[w["path"]]
            q = paths[w["other"]]
            cut, ocut = w["cut"], w["other_cut"]
            paths[w["path"]] = q[:ocut + 1] + p[cut:]
            paths[w["other"]] = p[:cut] + w["via"] + q[ocut + 1:]
        elif variant == "borrow_after":
            p = paths[w["donor"]]
            q = paths[w["receiver"]]
            i, j = w["drop_from"], w["drop_to"]
            a, b, at = w["keep_from"], w["keep_to"], w["attach"]
            paths[w["donor"]] = p[:i + 1] + p[j:]
            paths[w["receiver"]] = (q[:at + 1] + p[a:b + 1] + w["via"]
                                    + q[at + 1:])
        elif variant == "borrow_before":
            p = paths[w["receiver"]]
            q = paths[w["donor"]]
            g, e = w["drop_from"], w["drop_to"]
            c, dd, at = w["keep_from"], w["keep_to"], w["attach"]
            paths[w["receiver"]] = (p[:at + 1] + w["via"] + q[c:dd + 1]
                                    + p[at + 1:])
            paths[w["donor"]] = q[:g + 1] + q[e:]
        elif variant == "fold":
            p = paths[w["path"]]
            g, r1, r2 = w["cut"], w["back_from"], w["back_to"]
            b1, b2 = w["front_from"], w["front_to"]
            paths[w["path"]] = (p[:g + 1] + p[b1:b2 + 1] + w["via"]
                                + p[r1:r2 + 1] + p[b2 + 1:])
        else:
            raise ValueError(f"unknown tail_swap variant {variant!r}")
    else:
        raise ValueError(f"unknown template {template!r}")
    return PathSystem(sys.source, sys.sinks, tuple(paths))


def _absorbed(witnesses: tuple[tuple[str, object], ...]) -> tuple[int, ...]:
    out: set[int] = set()
    for key, val in witnesses:
        if key in ("via", "via1", "via2"):
            out.update(val)
    return tuple(sorted(out))


def _attempt(d: Digraph, sys: PathSystem, template: str,
             witnesses: tuple[tuple[str, object], ...]) -> AugmentationMove | None:
    new = _rebuild(sys, template, witnesses)
    if validate_system(d, new):
        return None
    if len(new.covered()) <= len(sys.covered()):
        return None
    return AugmentationMove(template, witnesses, _absorbed(witnesses),
                            sys.covered())


def _entry_attach(paths, entries) -> list[list[int]]:
    # positions at which each path can absorb material: index just before
    # an entry vertex
    return [[pos for pos in range(len(p) - 1) if p[pos + 1] in entries]
            for p in paths]


def _find_t1(d, sys, part, conn):
    for idx, p in enumerate(sys.paths):
        for pos in range(len(p) - 1):
            if p[pos] not in part.exits or p[pos + 1] not in part.entries:
                continue
            via = conn.connector(p[pos], p[pos + 1])
            if via is None:
                continue
            wit = (("path", idx), ("pos", pos), ("via", via))
            mv = _attempt(d, sys, "T1_detour", wit)
            if mv:
                return mv
    return None


def _find_t2(d, sys, part, conn):
    s = sys.source
    for i, p in enumerate(sys.paths):
        for cut in range(1, len(p)):
            if not d.has_arc(s, p[cut]) or p[cut - 1] not in part.exits:
                continue
            for j, q in enumerate(sys.paths):
                if j == i or q[1] not in part.entries:
                    continue
                via = conn.connector(p[cut - 1], q[1])
                if via is None:
                    continue
                wit = (("from_path", i), ("cut", cut), ("to_path", j),
                       ("via", via))
                mv = _attempt(d, sys, "T2_source_reroute", wit)
                if mv:
                    return mv
    return None


def _find_t3(d, sys, part, conn):
    for idx, p in enumerate(sys.paths):
        n = len(p)
        for a in range(n - 3):
            if p[a + 1] not in part.entries:
                continue
            for a1 in range(a + 1, n - 2):
                if not d.has_arc(p[a], p[a1 + 1]):
                    continue
                for a2 in range(a1 + 2, n):
                    if not d.has_arc(p[a1], p[a2]):
                        continue
                    if p[a2 - 1] not in part.exits:
                        continue
                    via = conn.connector(p[a2 - 1], p[a + 1])
                    if via is None:
                        continue
                    wit = (("path", idx), ("w", a), ("a1", a1), ("a2", a2),
                           ("via", via))
                    mv = _attempt(d, sys, "T3_same_path_cross", wit)
                    if mv:
                        return mv
    return None


def _find_t4(d, sys, part, conn):
    attach = _entry_attach(sys.paths, part.entries)
    for pi, p in enumerate(sys.paths):
        np_ = len(p)
        for qi, q in enumerate(sys.paths):
            if qi == pi:
                continue
            for a1 in range(np_ - 2):
                for a2 in range(a1 + 2, np_):
                    if not d.has_arc(p[a1], p[a2]):
                        continue
                    if p[a2 - 1] not in part.exits:
                        continue
                    for at in attach[qi]:
                        if not d.has_arc(q[at], p[a1 + 1]):
                            continue
                        via = conn.connector(p[a2 - 1], q[at + 1])
                        if via is None:
                            continue
                        wit = (("donor", pi), ("receiver", qi),
                               ("cut_from", a1), ("cut_to", a2),
                               ("attach", at), ("via", via))
                        mv = _attempt(d, sys, "T4_cross_path_cross", wit)
                        if mv:
                            return mv
    return None


def _find_t6_swap(d, sys, part, conn):
    for pi, p in enumerate(sys.paths):
        for qi, q in enumerate(sys.paths):
            if qi == pi:
                continue
            for cut in range(1, len(p)):
                if p[cut - 1] not in part.exits:
                    continue
                for ocut in range(len(q) - 1):
                    if not d.has_arc(q[ocut], p[cut]):
                        continue
                    if q[ocut + 1] not in part.entries:
                        continue
                    via = conn.connector(p[cut - 1], q[ocut + 1])
                    if via is None:
                        continue
                    wit = (("variant", "swap"), ("path", pi), ("other", qi),
                           ("cut", cut), ("other_cut", ocut), ("via", via))
                    mv = _attempt(d, sys, "T6_tail_swap", wit)
                    if mv:
                        return mv
    return None


def _find_t6_borrow_after(d, sys, part, conn):
    h = len(conn.h)
    attach = _entry_attach(sys.paths, part.entries)
    for pi, p in enumerate(sys.paths):
        np_ = len(p)
        for qi, q in enumerate(sys.paths):
            if qi == pi:
                continue
            for i in range(np_ - 2):
                for j in range(i + 2, np_):
                    if not d.has_arc(p[i], p[j]):
                        continue
                    # a connector has at most h vertices, so the two gaps
                    # left behind must together stay below h for any gain
                    for a in range(i + 1, min(j, i + 1 + h)):
                        for b in range(max(a, j - h), j):
                            if (a - i - 1) + (j - 1 - b) >= h:
                                continue
                            if p[b] not in part.exits:
                                continue
                            for at in attach[qi]:
                                if not d.has_arc(q[at], p[a]):
                                    continue
                                via = conn.connector(p[b], q[at + 1])
                                if via is None:
                                    continue
                                if len(via) <= (a - i - 1) + (j - 1 - b):
                                    continue
                                wit = (("variant", "borrow_after"),
                                       ("donor", pi), ("receiver", qi),
                                       ("drop_from", i), ("drop_to", j),
                                       ("keep_from", a), ("keep_to", b),
                                       ("attach", at), ("via", via))
                                mv = _attempt(d, sys, "T6_tail_swap", wit)
                                if mv:
                                    return mv
    return None


def _find_t6_borrow_before(d, sys, part, conn):
    h = len(conn.h)
    for pi, p in enumerate(sys.paths):
        for qi, q in enumerate(sys.paths):
            if qi == pi:
                continue
            nq = len(q)
            for at in range(len(p) - 1):
                if p[at] not in part.exits:
                    continue
                for g in range(nq - 2):
                    for e in range(g + 2, nq):
                        if not d.has_arc(q[g], q[e]):
                            continue
                        for c in range(g + 1, min(e, g + 1 + h)):
                            if q[c] not in part.entries:
                                continue
                            for dd in range(max(c, e - h), e):
                                if (c - g - 1) + (e - 1 - dd) >= h:
                                    continue
                                if not d.has_arc(q[dd], p[at + 1]):
                                    continue
                                via = conn.connector(p[at], q[c])
                                if via is None:
                                    continue
                                if len(via) <= (c - g - 1) + (e - 1 - dd):
                                    continue
                                wit = (("variant", "borrow_before"),
                                       ("receiver", pi), ("donor", qi),
                                       ("attach", at), ("drop_from", g),
                                       ("drop_to", e), ("keep_from", c),
                                       ("keep_to", dd), ("via", via))
                                mv = _attempt(d, sys, "T6_tail_swap", wit)
                                if mv:
                                    return mv
    return None


def _find_t6_fold(d, sys, part, conn):
    h = len(conn.h)
    for idx, p in enumerate(sys.paths):
        n = len(p)
        for g in range(n - 4):
            for r1 in range(g + 1, min(n - 2, g + 1 + h)):
                if p[r1] not in part.entries:
                    continue
                for r2 in range(r1, n - 2):
                    budget = h - (r1 - g - 1)
                    for b1 in range(r2 + 1, min(n - 1, r2 + 1 + budget)):
                        if not d.has_arc(p[g], p[b1]):
                            continue
                        for b2 in range(b1, n - 1):
                            if not d.has_arc(p[r2], p[b2 + 1]):
                                continue
                            if p[b2] not in part.exits:
                                continue
                            drop = (r1 - g - 1) + (b1 - r2 - 1)
                            via = conn.connector(p[b2], p[r1])
                            if via is None or len(via) <= drop:
                                continue
                            wit = (("variant", "fold"), ("path", idx),
                                   ("cut", g), ("back_from", r1),
                                   ("back_to", r2), ("front_from", b1),
                                   ("front_to", b2), ("via", via))
                            mv = _attempt(d, sys, "T6_tail_swap", wit)
                            if mv:
                                return mv
    return None


def _find_t6(d, sys, part, conn):
    for finder in (_find_t6_swap, _find_t6_borrow_after,
                   _find_t6_borrow_before, _find_t6_fold):
        mv = finder(d, sys, part, conn)
        if mv is not None:
            return mv
    return None


def _find_t5(d, sys, part, conn):
    if conn.cycle is None or len(conn.h) < 2:
        return None
    for idx, p in enumerate(sys.paths):
        n = len(p)
        for w1 in range(n - 4):
            if p[w1 + 1] not in part.entries:
                continue
            for w2 in range(w1 + 1, n - 3):
                if p[w2 + 1] not in part.entries:
                    continue
                for a1 in range(w2 + 2, n - 1):
                    if not d.has_arc(p[w1], p[a1]):
                        continue
                    if p[a1 - 1] not in part.exits:
                        continue
                    for a2 in range(a1 + 1, n):
                        if not d.has_arc(p[w2], p[a2]):
                            continue
                        if p[a2 - 1] not in part.exits:
                            continue
                        for q1, q2 in conn.cut_pairs():
                            if not (d.has_arc(p[a1 - 1], q1[0])
                                    and d.has_arc(q1[-1], p[w1 + 1])
                                    and d.has_arc(p[a2 - 1], q2[0])
                                    and d.has_arc(q2[-1], p[w2 + 1])):
                                continue
                            wit = (("path", idx), ("w1", w1), ("w2", w2),
                                   ("a1", a1), ("a2", a2),
                                   ("via1", q1), ("via2", q2))
                            mv = _attempt(d, sys, "T5_double_cross", wit)
                            if mv:
                                return mv
    return None


_SEARCHERS = {
    "T1_detour": _find_t1,
    "T2_source_reroute": _find_t2,
    "T3_same_path_cross": _find_t3,
    "T4_cross_path_cross": _find_t4,
    "T6_tail_swap": _find_t6,
    "T5_double_cross": _find_t5,
}


def _check_fresh(sys: PathSystem, part: BoundaryPartition) -> None:
    if part.covered != sys.covered():
        raise StalePartitionError(
            "boundary partition was built against a different covered set")


def find_move_for_template(d: Digraph, sys: PathSystem,
                           part: BoundaryPartition,
                           template: str) -> AugmentationMove | None:
    """First valid move of one template, or None."""
    if template not in _SEARCHERS:
        raise ValueError(f"unknown template {template!r}")
    if not is_semicomplete(d):
        raise ValueError("move search requires a semicomplete digraph")
    _check_fresh(sys, part)
    conn = _Connectors(d, part.uncovered)
    return _SEARCHERS[template](d, sys, part, conn)


def find_moves(d: Digraph, sys: PathSystem,
               part: BoundaryPartition) -> list[AugmentationMove]:
    """First applicable move over all templates; empty list when stuck.

    At most one move is returned: the search order is deterministic, so
    repeated calls on the same state agree, and the driver applies a single
    move before searching again anyway (each application invalidates the
    partition).
    """
    if not is_semicomplete(d):
        raise ValueError("move search requires a semicomplete digraph")
    _check_fresh(sys, part)
    conn = _Connectors(d, part.uncovered)
    for template in TEMPLATE_ORDER:
        mv = _SEARCHERS[template](d, sys, part, conn)
        if mv is not None:
            return [mv]
    return []


def apply_move(d: Digraph, sys: PathSystem,
               move: AugmentationMove) -> PathSystem:
    """Re-derive the rewritten system; refuses moves found against another
    covered set."""
    if move.source_cover != sys.covered():
        raise StaleMoveError("move was found against a different covered set")
    new = _rebuild(sys, move.template, move.witnesses)
    problems = validate_system(d, new)
    if problems:
        raise ValueError("move produced an invalid system: "
                         + "; ".join(problems))
    if len(new.covered()) <= len(sys.covered()):
        raise ValueError("move does not increase the cover")
    return new


def augment_to_cover(d: Digraph, sys: PathSystem) -> AugmentResult:
    """Apply moves until the system spans or no template fires.

    Every applied move strictly grows the cover, so the loop runs at most n
    iterations.  Already-spanning input comes back unchanged with outcome
    "covered" and an empty trace.
    """
    problems = validate_system(d, sys)
    if problems:
        raise ValueError("invalid path system: " + "; ".join(problems))
    trace: list[MoveRecord] = []
    while sys.cover_count() < d.n:
        part = boundary_partition(d, sys)
        moves = find_moves(d, sys, part)
        if not moves:
            return AugmentResult(sys, tuple(trace), "stuck")
        mv = moves[0]
        new_sys = apply_move(d, sys, mv)
        trace.append(MoveRecord(mv.template, mv.witnesses,
                                sys.cover_count(), new_sys.cover_count()))
        sys = new_sys
    return AugmentResult(sys, tuple(trace), "covered")


def _fmt_value(v) -> str:
    if isinstance(v, tuple):
        return ":".join(str(x) for x in v)
    return str(v)


def format_record(rec: MoveRecord) -> str:
    body = ",".join(f"{key}={_fmt_value(val)}" for key, val in rec.witnesses)
    return f"{rec.template} {body} {rec.before_cover} {rec.after_cover}"


def format_trace(trace) -> str:
    return "".join(format_record(rec) + "\n" for rec in trace)


def solve(d: Digraph, source: int, sinks,
          config: SolveConfig | None = None) -> SolveResult:
    """Drive a system from an initial linkage to a full cover.

    Pipeline: exhaustive search for any linkage, then moves until spanning
    or stuck, then (when enabled and the instance is small enough) an
    exhaustive spanning search to settle stuck instances either way.
    Single-sink instances go straight to the exhaustive search: the whole
    problem is one spanning path, which it answers directly.
    """
    if config is None:
        config = SolveConfig()
    if not is_semicomplete(d):
        raise ValueError("solve requires a semicomplete digraph")
    sinks = tuple(sinks)
    nodes = 0
    if len(sinks) == 1:
        v = exact_ddpc(d, source, sinks, budget=config.budget)
        nodes = v.nodes_explored
        if v.kind == "found":
            return SolveResult("found", v.system, (), "fallback_used",
                               d.n, nodes, None)
        if v.kind == "none_exists":
            return SolveResult("none_exists", None, (), "fallback_used",
                               0, nodes, None)
        return SolveResult("unknown", None, (), "stuck", 0, nodes, None)

    link = exact_st_linkage(d, source, sinks, budget=config.budget)
    nodes += link.nodes_explored
    if link.kind == "none_exists":
        return SolveResult("none_exists", None, (), "stuck", 0, nodes, None)
    if link.kind == "budget_exceeded":
        return SolveResult("unknown", None, (), "stuck", 0, nodes, None)

    aug = augment_to_cover(d, link.system)
    cover = aug.system.cover_count()
    if aug.outcome == "covered":
        return SolveResult("found", aug.system, aug.trace, "covered",
                           cover, nodes, None)
    if config.use_fallback and d.n <= config.fallback_cap:
        fb = exact_ddpc(d, source, sinks, budget=config.budget)
        nodes += fb.nodes_explored
        if fb.kind == "found":
            return SolveResult("found", fb.system, aug.trace,
                               "fallback_used", cover, nodes, aug.system)
        if fb.kind == "none_exists":
            return SolveResult("none_exists", None, aug.trace,
                               "fallback_used", cover, nodes, aug.system)
    return SolveResult("unknown", None, aug.trace, "stuck",
                       cover, nodes, aug.system)
