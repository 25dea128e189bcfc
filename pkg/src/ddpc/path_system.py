"""Path systems: validation, psys file format, boundary partition, claim reports.

A path system routes k paths from one source to k distinct sinks; the paths
may share only the source and each vertex appears on at most one path.  A
*disjoint directed path cover* (DDPC) is a path system that additionally
covers every vertex of the digraph.

For a valid non-spanning system the covered vertices split along the boundary
with the uncovered part: *entries* receive an arc from some uncovered vertex,
*exits* send one.  The source is classified by the same rule as everything
else, so it can be an entry, an exit, or both.  Shifted sets walk one step
along the paths: predecessors of entries and successors of exits, taken per
path (the source has no predecessor; each path contributes its own successor
of the source).
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, degree_report, degree_threshold, induced_subdigraph, is_semicomplete, is_strong


class PsysFormatError(ValueError):
    """Raised when psys v1 text cannot be parsed."""


@dataclass(frozen=True)
class PathSystem:
    source: int
    sinks: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "sinks", tuple(self.sinks))
        object.__setattr__(self, "paths", tuple(tuple(p) for p in self.paths))

    @property
    def k(self) -> int:
        return len(self.sinks)

    def covered(self) -> frozenset[int]:
        out: set[int] = {self.source}
        for p in self.paths:
            out.update(p)
        return frozenset(out)

    def cover_count(self) -> int:
        return len(self.covered())


def validate_system(d: Digraph, sys: PathSystem) -> list[str]:
    """All invariant violations, as stable human-readable strings.

    An empty list means the system is valid.  Checks ranges, endpoint
    matching, sink distinctness, arc existence along every path, repeats
    within a path, and pairwise overlap beyond the source.
    """
    out: list[str] = []
    n = d.n
    if not (0 <= sys.source < n):
        out.append(f"source {sys.source} out of range")
        return out
    if len(sys.paths) != len(sys.sinks):
        out.append(f"{len(sys.paths)} paths for {len(sys.sinks)} sinks")
    if len(set(sys.sinks)) != len(sys.sinks):
        out.append("duplicate sink")
    for t in sys.sinks:
        if not (0 <= t < n):
            out.append(f"sink {t} out of range")
            return out
        if t == sys.source:
            out.append(f"sink {t} equals source")
    seen: dict[int, int] = {}
    for i, p in enumerate(sys.paths):
        if not p:
            out.append(f"path {i} is empty")
            continue
        if any(not (0 <= v < n) for v in p):
            out.append(f"path {i} has a vertex out of range")
            continue
        if p[0] != sys.source:
            out.append(f"path {i} starts at {p[0]}, expected source {sys.source}")
        if i < len(sys.sinks) and p[-1] != sys.sinks[i]:
            out.append(f"path {i} ends at {p[-1]}, expected sink {sys.sinks[i]}")
        if len(set(p)) != len(p):
            out.append(f"path {i} repeats a vertex")
        for a, b in zip(p, p[1:]):
            if not d.has_arc(a, b):
                out.append(f"path {i}: missing arc {a}->{b}")
        for v in p:
            if v == sys.source:
                continue
            if v in seen:
                out.append(f"paths {seen[v]} and {i} overlap at {v}")
            else:
                seen[v] = i
    return out


def is_ddpc(d: Digraph, sys: PathSystem) -> bool:
    """True iff the system is valid and covers every vertex; invalid input raises."""
    problems = validate_system(d, sys)
    if problems:
        raise ValueError("invalid path system: " + "; ".join(problems))
    return len(sys.covered()) == d.n


@dataclass(frozen=True)
class BoundaryPartition:
    """Boundary structure of a valid non-spanning system.

    All sets hold original vertex labels.  ``covered`` doubles as the
    staleness stamp: move search refuses a partition whose covered set no
    longer matches the system it is handed.
    """

    entries: frozenset[int]        # covered, receive an arc from uncovered
    exits: frozenset[int]          # covered, send an arc to uncovered
    pure_entries: frozenset[int]   # entries - exits
    pure_exits: frozenset[int]     # exits - entries
    pre_entries: frozenset[int]    # on-path predecessors of entries (source has none)
    post_exits: frozenset[int]     # on-path successors of exits (sinks have none)
    pre_pure_entries: frozenset[int]
    post_pure_exits: frozenset[int]
    uncovered: tuple[int, ...]     # ascending
    uncovered_strong: bool
    covered: frozenset[int]


def boundary_partition(d: Digraph, sys: PathSystem) -> BoundaryPartition:
    problems = validate_system(d, sys)
    if problems:
        raise ValueError("invalid path system: " + "; ".join(problems))
    cov = sys.covered()
    if len(cov) == d.n:
        raise ValueError("system is spanning; boundary partition undefined")
    h_mask = 0
    for v in range(d.n):
        if v not in cov:
            h_mask |= 1 << v
    entries = frozenset(v for v in cov if d.in_mask[v] & h_mask)
    exits = frozenset(v for v in cov if d.out_mask[v] & h_mask)
    pure_entries = entries - exits
    pure_exits = exits - entries
    pre_e: set[int] = set()
    pre_pe: set[int] = set()
    post_x: set[int] = set()
    post_px: set[int] = set()
    for p in sys.paths:
        for pos in range(1, len(p)):
            v = p[pos]
            if v in entries:
                pre_e.add(p[pos - 1])
                if v in pure_entries:
                    pre_pe.add(p[pos - 1])
        for pos in range(len(p) - 1):
            v = p[pos]
            if v in exits:
                post_x.add(p[pos + 1])
                if v in pure_exits:
                    post_px.add(p[pos + 1])
    uncovered = tuple(sorted(set(range(d.n)) - cov))
    sub, _ = induced_subdigraph(d, uncovered)
    return BoundaryPartition(
        entries=entries,
        exits=exits,
        pure_entries=pure_entries,
        pure_exits=pure_exits,
        pre_entries=frozenset(pre_e),
        post_exits=frozenset(post_x),
        pre_pure_entries=frozenset(pre_pe),
        post_pure_exits=frozenset(post_px),
        uncovered=uncovered,
        uncovered_strong=is_strong(sub),
        covered=cov,
    )


@dataclass(frozen=True)
class LemmaClaim:
    """One structural claim with the hypotheses its derivation relies on."""

    name: str
    holds: bool
    hypotheses: tuple[str, ...]
    hypotheses_met: bool


@dataclass(frozen=True)
class LemmaReport:
    claims: tuple[LemmaClaim, ...]
    threshold_met: bool
    maximal: bool
    uncovered_strong: bool
    n: int = 0
    k: int = 0
    cover: int = 0
    uncovered_size: int = 0

    def claim(self, name: str) -> LemmaClaim:
        for c in self.claims:
            if c.name == name:
                return c
        raise KeyError(name)

    def defects(self) -> tuple[LemmaClaim, ...]:
        """Claims that fail although every hypothesis they rely on is met."""
        return tuple(c for c in self.claims if c.hypotheses_met and not c.holds)


def lemma_report(d: Digraph, sys: PathSystem, maximal: bool = False) -> LemmaReport:
    """Evaluate the structural claims a stuck system is expected to satisfy.

    ``maximal`` declares that the caller certified the system maximum (for
    instance through the exhaustive oracle); claims whose derivation needs
    maximality are only flagged as defects when it is set.  Requires a valid
    non-spanning system on a semicomplete digraph.

    Claim inventory (L is the covered set, U the uncovered set, paths P_i):
      pairwise_uncovered_degree  min in-degree + min out-degree within U >= |U| - 1
      uncovered_strong           U induces a strong subdigraph
      uncovered_size_bound       |U| <= floor((n - k + 1) / 2) - 1
      post_exits_avoid_entries   successors of exits never land in entries
      pre_entries_avoid_exits    predecessors of entries never land in exits
      boundary_covers_all        entries and exits jointly exhaust L
      overlap_at_most_k          |entries & exits| <= k
      overlap_per_path           each path holds at most one entry-and-exit vertex
      entries_lower, exits_lower          2|set| >= n + k + 1 - 2|U|
      pure_entries_lower, pure_exits_lower  2|set| >= n - k + 1 - 2|U|
      pure_union_lower           |pure entries| + |pure exits| >= |L| - k
      pre_entries_size           |pre entries| >= |entries| - k
      post_exits_size            |post exits| >= |exits| - k

    The last two hold for any valid non-spanning system: along a fixed path
    the predecessor map is injective, so distinct entries share a
    predecessor only at the source (at most k - 1 collisions), and an
    entry that is the source itself (no predecessor) costs one more; the
    successor side drops only the at most k exits that are sinks.
    """
    if not is_semicomplete(d):
        raise ValueError("lemma_report requires a semicomplete digraph")
    part = boundary_partition(d, sys)
    n = d.n
    k = sys.k
    cover = len(part.covered)
    h = len(part.uncovered)
    h_mask = 0
    for v in part.uncovered:
        h_mask |= 1 << v
    threshold_met = degree_report(d).delta_zero >= degree_threshold(n, k)
    strong = part.uncovered_strong

    met = {
        "threshold": threshold_met,
        "maximal": maximal,
        "uncovered_strong": strong,
    }

    def claim(name: str, holds: bool, *hyps: str) -> LemmaClaim:
        return LemmaClaim(name, holds, hyps, all(met[hy] for hy in hyps))

    min_in = min(((d.in_mask[v] & h_mask).bit_count() for v in part.uncovered))
    min_out = min(((d.out_mask[v] & h_mask).bit_count() for v in part.uncovered))

    overlap = part.entries & part.exits
    per_path_ok = all(
        sum(1 for v in p if v in overlap) <= 1 for p in sys.paths
    )

    fe, fx = len(part.entries), len(part.exits)
    pe, px = len(part.pure_entries), len(part.pure_exits)

    claims = (
        claim("pairwise_uncovered_degree", min_in + min_out >= h - 1,
              "threshold", "maximal", "uncovered_strong"),
        claim("uncovered_strong", strong, "threshold", "maximal"),
        claim("uncovered_size_bound", h <= (n - k + 1) // 2 - 1,
              "threshold", "maximal", "uncovered_strong"),
        claim("post_exits_avoid_entries", not (part.post_exits & part.entries),
              "maximal", "uncovered_strong"),
        claim("pre_entries_avoid_exits", not (part.pre_entries & part.exits),
              "maximal", "uncovered_strong"),
        claim("boundary_covers_all", part.entries | part.exits == part.covered),
        claim("overlap_at_most_k", len(overlap) <= k,
              "threshold", "maximal", "uncovered_strong"),
        claim("overlap_per_path", per_path_ok,
              "threshold", "maximal", "uncovered_strong"),
        claim("entries_lower", 2 * fe >= n + k + 1 - 2 * h, "threshold"),
        claim("exits_lower", 2 * fx >= n + k + 1 - 2 * h, "threshold"),
        claim("pure_entries_lower", 2 * pe >= n - k + 1 - 2 * h,
              "threshold", "maximal", "uncovered_strong"),
        claim("pure_exits_lower", 2 * px >= n - k + 1 - 2 * h,
              "threshold", "maximal", "uncovered_strong"),
        claim("pure_union_lower", pe + px >= cover - k,
              "threshold", "maximal", "uncovered_strong"),
        claim("pre_entries_size", len(part.pre_entries) >= fe - k),
        claim("post_exits_size", len(part.post_exits) >= fx - k),
    )
    return LemmaReport(
        claims=claims,
        threshold_met=threshold_met,
        maximal=maximal,
        uncovered_strong=strong,
        n=n,
        k=k,
        cover=cover,
        uncovered_size=h,
    )


# -- psys v1 format -----------------------------------------------------------
#
#   line 1:  "s <vertex>"
#   line 2:  "k <count>"
#   then k lines, each a space-separated vertex sequence (one path)


def parse_psys(text: str) -> PathSystem:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 2:
        raise PsysFormatError("expected 's <vertex>' and 'k <count>' header lines")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "s":
        raise PsysFormatError("line 1 must be 's <vertex>'")
    kline = lines[1].split()
    if len(kline) != 2 or kline[0] != "k":
        raise PsysFormatError("line 2 must be 'k <count>'")
    try:
        source = int(head[1])
        k = int(kline[1])
    except ValueError:
        raise PsysFormatError("non-integer header value") from None
    if k < 0:
        raise PsysFormatError("negative path count")
    body = lines[2:]
    if len(body) != k:
        raise PsysFormatError(f"expected {k} path lines, found {len(body)}")
    paths = []
    for ln in body:
        try:
            paths.append(tuple(int(tok) for tok in ln.split()))
        except ValueError:
            raise PsysFormatError(f"non-integer vertex in path line {ln!r}") from None
    sinks = tuple(p[-1] for p in paths if p)
    if len(sinks) != k:
        raise PsysFormatError("empty path line")
    return PathSystem(source, sinks, tuple(paths))


def format_psys(sys: PathSystem) -> str:
    lines = [f"s {sys.source}", f"k {sys.k}"]
    lines.extend(" ".join(str(v) for v in p) for p in sys.paths)
    return "\n".join(lines) + "\n"


def read_psys(path) -> PathSystem:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_psys(fh.read())


def write_psys(path, sys: PathSystem) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_psys(sys))
