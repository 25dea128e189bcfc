"""Seeded instance generators and the small-instance enumerator.

All randomness comes from splitmix64, a 64-bit PRNG with a fixed, published
update rule, so any seed reproduces the same digraph on any platform and any
Python version.  Draws are consumed in a documented order (unordered pairs
(u, v) with u < v, ascending), which makes generated instances part of the
byte-determinism contract.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, degree_threshold

_MASK64 = (1 << 64) - 1


class Splitmix64:
    """splitmix64: 64-bit state, golden-ratio increment, two xor-multiply mixes.

    next_u64 implements the standard constants (0x9E3779B97F4A7C15,
    0xBF58476D1CE4E5B9, 0x94D049BB133111EB).  ``below`` reduces by modulo;
    the bias is irrelevant at the bound sizes used here and keeps the draw
    rule trivial to restate.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = s = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = ((s ^ (s >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound


GEN_KINDS = ("tournament", "semicomplete", "rotational", "near_threshold")


@dataclass(frozen=True)
class GenSpec:
    """Parameters for one generated instance.

    digon_prob applies to the ``semicomplete`` kind only.  ``k`` and
    ``offset`` apply to ``near_threshold``, which targets a minimum
    semi-degree of exactly degree_threshold(n, k) + offset.
    """

    n: int
    kind: str = "semicomplete"
    digon_prob: float = 0.25
    k: int = 2
    offset: int = 0
    seed: int = 0

    def validate(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.kind not in GEN_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if not (0.0 <= self.digon_prob <= 1.0):
            raise ValueError("digon_prob must lie in [0, 1]")
        if self.kind == "rotational" and self.n % 2 == 0:
            raise ValueError("rotational generator requires odd n")
        if self.kind == "near_threshold":
            if self.k <= 0:
                raise ValueError("near_threshold requires positive k")
            target = degree_threshold(self.n, self.k) + self.offset
            if target > self.n - 1:
                raise ValueError(
                    f"target semi-degree {target} unreachable with n={self.n}"
                )
            if target < 0:
                raise ValueError("target semi-degree is negative")


def _tournament_arcs(n: int, rng: Splitmix64) -> list[tuple[int, int]]:
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_u64() & 1:
                arcs.append((v, u))
            else:
                arcs.append((u, v))
    return arcs


def _semicomplete_arcs(n: int, digon_prob: float, rng: Splitmix64) -> list[tuple[int, int]]:
    # one draw decides digon-or-not, a second picks orientation otherwise
    digon_cut = int(digon_prob * (1 << 64))
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_u64() < digon_cut:
                arcs.append((u, v))
                arcs.append((v, u))
            elif rng.next_u64() & 1:
                arcs.append((v, u))
            else:
                arcs.append((u, v))
    return arcs


def _rotational_arcs(n: int) -> list[tuple[int, int]]:
    arcs = []
    half = (n - 1) // 2
    for i in range(n):
        for j in range(1, half + 1):
            arcs.append((i, (i + j) % n))
    return arcs


def _near_threshold_arcs(spec: GenSpec, rng: Splitmix64) -> list[tuple[int, int]]:
    """Raise delta-zero to exactly the target by adding reverse arcs.

    Starts from a seeded random tournament (digon-free), so degrees can only
    grow as arcs are added and the add-one-arc loop can stop exactly at the
    target; threshold-meeting instances for k >= 2 necessarily contain digons,
    and here every added arc creates one.  Each step fixes the currently
    weaker side: it picks the lowest-numbered vertex of minimum degree on that
    side and pairs it with the partner whose opposite-side degree is smallest.
    """
    n = spec.n
    target = degree_threshold(n, spec.k) + spec.offset
    has = [bytearray(n) for _ in range(n)]
    out_deg = [0] * n
    in_deg = [0] * n
    for u, v in _tournament_arcs(n, rng):
        has[u][v] = 1
        out_deg[u] += 1
        in_deg[v] += 1
    if min(min(out_deg), min(in_deg)) > target:
        raise ValueError("start digraph already exceeds target semi-degree")
    while True:
        dp = min(out_deg)
        dm = min(in_deg)
        if min(dp, dm) >= target:
            break
        if dp <= dm:
            v = out_deg.index(dp)
            best = None
            for w in range(n):
                if w != v and not has[v][w]:
                    if best is None or in_deg[w] < in_deg[best]:
                        best = w
            has[v][best] = 1
            out_deg[v] += 1
            in_deg[best] += 1
        else:
            v = in_deg.index(dm)
            best = None
            for w in range(n):
                if w != v and not has[w][v]:
                    if best is None or out_deg[w] < out_deg[best]:
                        best = w
            has[best][v] = 1
            out_deg[best] += 1
            in_deg[v] += 1
    arcs = []
    for u in range(n):
        row = has[u]
        for v in range(n):
            if row[v]:
                arcs.append((u, v))
    return arcs


def generate(spec: GenSpec, rng: Splitmix64 | None = None) -> Digraph:
    """Build the digraph described by ``spec`` deterministically from its seed.

    Passing ``rng`` continues that stream instead of seeding a fresh one,
    so a caller can draw further values after the arcs without touching a
    second generator.
    """
    spec.validate()
    if rng is None:
        rng = Splitmix64(spec.seed)
    if spec.kind == "tournament":
        arcs = _tournament_arcs(spec.n, rng)
    elif spec.kind == "semicomplete":
        arcs = _semicomplete_arcs(spec.n, spec.digon_prob, rng)
    elif spec.kind == "rotational":
        arcs = _rotational_arcs(spec.n)
    else:
        arcs = _near_threshold_arcs(spec, rng)
    return Digraph(spec.n, arcs)


_ENUM_CAPS = {"tournament": 6, "semicomplete": 4}


def enumerate_small(n: int, kind: str = "tournament"):
    """Yield every labeled instance on n vertices in a fixed order.

    Tournaments are supported for n <= 6 (32768 at n = 6) and general
    semicomplete digraphs for n <= 4 (729 at n = 4).  Instances are encoded
    as base-2 or base-3 numbers over the ascending pair list, least
    significant pair first, and yielded in increasing code order.
    """
    if kind not in _ENUM_CAPS:
        raise ValueError(f"enumerate_small supports kinds {sorted(_ENUM_CAPS)}, not {kind!r}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = _ENUM_CAPS[kind]
    if n > cap:
        raise ValueError(f"enumerate_small caps {kind} at n={cap}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    base = 2 if kind == "tournament" else 3
    for code in range(base ** len(pairs)):
        arcs = []
        rem = code
        for (u, v) in pairs:
            digit = rem % base
            rem //= base
            if digit == 0:
                arcs.append((u, v))
            elif digit == 1:
                arcs.append((v, u))
            else:
                arcs.append((u, v))
                arcs.append((v, u))
        yield Digraph(n, arcs)
