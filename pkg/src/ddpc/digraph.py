"""Dense digraph core: construction, degree reports, connectivity, dgr file format.

Vertices are the integers 0..n-1.  Between any two distinct vertices both arc
directions may be present at once (a digon); self-loops are never allowed.
A digraph is *semicomplete* when every unordered pair carries at least one arc,
and a *tournament* when every pair carries exactly one.

Instances are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class DgrFormatError(ValueError):
    """Raised when dgr v1 text cannot be parsed."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Digraph:
    """Directed graph with O(1) arc queries and per-vertex neighbor bitmasks.

    ``out_mask[u]`` / ``in_mask[u]`` hold the out- and in-neighborhoods of ``u``
    as integer bitmasks, which keeps reachability sweeps and candidate
    filtering cheap for the search code built on top.
    """

    __slots__ = ("n", "rows", "out_mask", "in_mask", "arc_count")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        rows = [bytearray(n) for _ in range(n)]
        out_mask = [0] * n
        in_mask = [0] * n
        count = 0
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if rows[u][v]:
                raise ValueError(f"duplicate arc ({u}, {v})")
            rows[u][v] = 1
            out_mask[u] |= 1 << v
            in_mask[v] |= 1 << u
            count += 1
        self.rows = rows
        self.out_mask = out_mask
        self.in_mask = in_mask
        self.arc_count = count

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u][v])

    def arcs(self) -> Iterator[tuple[int, int]]:
        """All arcs in (u, v) lexicographic order."""
        for u in range(self.n):
            row = self.rows[u]
            for v in range(self.n):
                if row[v]:
                    yield (u, v)

    def out_neighbors(self, u: int) -> list[int]:
        return list(iter_bits(self.out_mask[u]))

    def in_neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.in_mask[v]))

    def out_degree(self, u: int) -> int:
        return self.out_mask[u].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_mask[v].bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out_mask == other.out_mask

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.out_mask)))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_count})"


@dataclass(frozen=True)
class DegreeReport:
    """Per-vertex degrees plus the three degree minima.

    ``delta_zero`` is the minimum semi-degree: the smaller of the minimum
    out-degree and the minimum in-degree.  For n = 0 all minima are reported
    as 0.
    """

    out_degrees: tuple[int, ...]
    in_degrees: tuple[int, ...]
    delta_plus: int
    delta_minus: int
    delta_zero: int


def degree_report(d: Digraph) -> DegreeReport:
    outs = tuple(m.bit_count() for m in d.out_mask)
    ins = tuple(m.bit_count() for m in d.in_mask)
    dp = min(outs) if outs else 0
    dm = min(ins) if ins else 0
    return DegreeReport(outs, ins, dp, dm, min(dp, dm))


def is_semicomplete(d: Digraph) -> bool:
    """True iff every unordered pair of distinct vertices carries an arc."""
    n = d.n
    full = (1 << n) - 1
    out_mask, in_mask = d.out_mask, d.in_mask
    for u in range(n):
        if (out_mask[u] | in_mask[u]) != full ^ (1 << u):
            return False
    return True


def is_tournament(d: Digraph) -> bool:
    """True iff every unordered pair carries exactly one arc (no digons)."""
    if not is_semicomplete(d):
        return False
    return all((d.out_mask[u] & d.in_mask[u]) == 0 for u in range(d.n))


def _reaches_all(masks: list[int], start: int, n: int) -> bool:
    full = (1 << n) - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= masks[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def is_strong(d: Digraph) -> bool:
    """True iff the digraph is strongly connected.

    A one-vertex digraph counts as strong; the empty digraph does not (it has
    no component containing all vertices).
    """
    if d.n == 0:
        return False
    if d.n == 1:
        return True
    # strong iff vertex 0 reaches everything and everything reaches vertex 0
    return _reaches_all(d.out_mask, 0, d.n) and _reaches_all(d.in_mask, 0, d.n)


def degree_threshold(n: int, k: int) -> int:
    """Minimum semi-degree bound ceil((n + k - 1) / 2) for given n and k."""
    if n <= 0 or k <= 0:
        raise ValueError("n and k must be positive")
    return (n + k) // 2


def induced_subdigraph(d: Digraph, vertices: Iterable[int]) -> tuple[Digraph, tuple[int, ...]]:
    """Induced subdigraph on ``vertices`` with labels compacted to 0..m-1.

    Returns the subdigraph and a tuple mapping each new label back to the
    original vertex id.  Vertices are taken in ascending original order.
    """
    back = tuple(sorted(set(vertices)))
    for v in back:
        if not (0 <= v < d.n):
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(back)}
    arcs = []
    for u in back:
        row = d.rows[u]
        iu = index[u]
        for v in back:
            if row[v]:
                arcs.append((iu, index[v]))
    return Digraph(len(back), arcs), back


# -- dgr v1 format ------------------------------------------------------------
#
#   line 1:  "n <count>"
#   then one arc per line: "<u> <v>"
#   "#" starts a comment line; blank lines are ignored; duplicate arcs are an
#   error.


def parse_dgr(text: str) -> Digraph:
    n: int | None = None
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise DgrFormatError(f"line {lineno}: expected 'n <count>' header")
            try:
                n = int(parts[1])
            except ValueError:
                raise DgrFormatError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise DgrFormatError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise DgrFormatError(f"line {lineno}: expected '<u> <v>'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DgrFormatError(f"line {lineno}: non-integer arc endpoint") from None
        arcs.append((u, v))
    if n is None:
        raise DgrFormatError("missing 'n <count>' header")
    try:
        return Digraph(n, arcs)
    except ValueError as exc:
        raise DgrFormatError(str(exc)) from None


def format_dgr(d: Digraph) -> str:
    lines = [f"n {d.n}"]
    lines.extend(f"{u} {v}" for u, v in d.arcs())
    return "\n".join(lines) + "\n"


def read_dgr(path) -> Digraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_dgr(fh.read())


def write_dgr(path, d: Digraph) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_dgr(d))
