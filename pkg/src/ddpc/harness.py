"""Experiment sweeps and structural audits.

``run_experiment`` executes a seeded plan: for each trial it builds an
instance, draws a source and sinks from the same stream, runs the move
engine with its exhaustive fallback, runs the exhaustive search
independently, and emits one CSV row.  Every instance is written to the
run directory, and whenever a spanning system was found it is written next
to it, so any row can be re-verified from the artifacts alone.  Output is
byte-deterministic given the plan, except the runtime_ms column, which
records wall-clock time and is informational only.

``audit_lemmas`` walks a corpus of (instance, system) pairs, insists each
system is a certified maximum non-spanning one, and tallies the structural
claims of ``lemma_report`` across the corpus.  A claim failing while every
hypothesis it relies on holds is a defect; everything else is counted, not
flagged.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from pathlib import Path

from .digraph import (
    Digraph,
    degree_report,
    degree_threshold,
    is_semicomplete,
    read_dgr,
    write_dgr,
)
from .engine import SolveConfig, solve
from .gen import GEN_KINDS, GenSpec, Splitmix64, generate
from .oracle import certify_maximal, exact_ddpc
from .path_system import (
    PathSystem,
    lemma_report,
    read_psys,
    validate_system,
    write_psys,
)


class PlanFormatError(ValueError):
    pass


CSV_COLUMNS = ("seed", "n", "k", "delta_zero", "threshold", "meets_threshold",
               "oracle_ddpc", "engine_outcome", "moves_applied", "max_cover",
               "runtime_ms")

CSV_HEADER = ",".join(CSV_COLUMNS)


@dataclass(frozen=True)
class ExperimentRow:
    seed: int
    n: int
    k: int
    delta_zero: int
    threshold: int
    meets_threshold: bool
    oracle_ddpc: str
    engine_outcome: str
    moves_applied: int
    max_cover: int
    runtime_ms: int

    def to_csv(self) -> str:
        return ",".join((
            str(self.seed), str(self.n), str(self.k), str(self.delta_zero),
            str(self.threshold), "true" if self.meets_threshold else "false",
            self.oracle_ddpc, self.engine_outcome, str(self.moves_applied),
            str(self.max_cover), str(self.runtime_ms),
        ))


def parse_row(line: str) -> ExperimentRow:
    parts = line.rstrip("\n").split(",")
    if len(parts) != len(CSV_COLUMNS):
        raise ValueError(f"expected {len(CSV_COLUMNS)} fields, got "
                         f"{len(parts)}: {line!r}")
    if parts[5] not in ("true", "false"):
        raise ValueError(f"meets_threshold must be true/false: {parts[5]!r}")
    return ExperimentRow(
        seed=int(parts[0]), n=int(parts[1]), k=int(parts[2]),
        delta_zero=int(parts[3]), threshold=int(parts[4]),
        meets_threshold=parts[5] == "true",
        oracle_ddpc=parts[6], engine_outcome=parts[7],
        moves_applied=int(parts[8]), max_cover=int(parts[9]),
        runtime_ms=int(parts[10]),
    )


def read_rows(path: str | Path) -> list[ExperimentRow]:
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("missing or unexpected CSV header")
    return [parse_row(line) for line in lines[1:] if line]


def canonicalize_csv(text: str) -> str:
    """Zero out the runtime_ms column so runs can be compared byte-wise.

    runtime_ms is measured wall-clock time and therefore the one field that
    legitimately varies between identical runs.
    """
    out = []
    for i, line in enumerate(text.splitlines()):
        if i == 0 or not line:
            out.append(line)
            continue
        parts = line.split(",")
        parts[-1] = "0"
        out.append(",".join(parts))
    return "\n".join(out) + ("\n" if text.endswith("\n") else "")


# -- plan v1 format -----------------------------------------------------------
#
# Flat key=value lines; blank lines and # comments ignored.  Keys:
#
#   kind        tournament | semicomplete | rotational | near_threshold
#   n           single value, comma list, or a..b inclusive range
#   k           same forms as n
#   seeds       how many seeds per (n, k) cell
#   seed_start  first seed value (default 1)
#   offset      near_threshold semi-degree offset (default 0)
#   digon_prob  semicomplete digon probability (default 0.25)
#   budget      oracle node budget per trial (default 1000000)
#   fallback    true | false, exhaustive fallback in solve (default true)
#   fallback_cap  largest n the fallback may attack (default 14)


@dataclass(frozen=True)
class ExperimentPlan:
    kind: str
    ns: tuple[int, ...]
    ks: tuple[int, ...]
    seeds: int
    seed_start: int = 1
    offset: int = 0
    digon_prob: float = 0.25
    budget: int = 10**6
    fallback: bool = True
    fallback_cap: int = 14

    def trials(self):
        """Yield (n, k, seed) in plan order: n outermost, then k, then seed."""
        for n in self.ns:
            for k in self.ks:
                for i in range(self.seeds):
                    yield n, k, self.seed_start + i

    def trial_count(self) -> int:
        return len(self.ns) * len(self.ks) * self.seeds

    def spec_for(self, n: int, k: int, seed: int) -> GenSpec:
        return GenSpec(n=n, kind=self.kind, digon_prob=self.digon_prob,
                       k=k, offset=self.offset, seed=seed)

    def validate(self) -> None:
        if self.kind not in GEN_KINDS:
            raise PlanFormatError(f"unknown kind {self.kind!r}")
        if not self.ns:
            raise PlanFormatError("plan lists no n values")
        if not self.ks:
            raise PlanFormatError("plan lists no k values")
        if self.seeds < 0:
            raise PlanFormatError("seeds must be >= 0")
        if self.budget <= 0:
            raise PlanFormatError("budget must be positive")
        for n in self.ns:
            for k in self.ks:
                if n < k + 1:
                    raise PlanFormatError(
                        f"n={n} cannot host k={k} distinct sinks and a source")
                try:
                    self.spec_for(n, k, self.seed_start).validate()
                except ValueError as exc:
                    raise PlanFormatError(
                        f"invalid instance spec at n={n}, k={k}: {exc}"
                    ) from None


def _parse_int_list(value: str, key: str) -> tuple[int, ...]:
    value = value.strip()
    try:
        if ".." in value:
            lo_s, hi_s = value.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if hi < lo:
                raise ValueError
            return tuple(range(lo, hi + 1))
        if "," in value:
            return tuple(int(part) for part in value.split(","))
        return (int(value),)
    except ValueError:
        raise PlanFormatError(
            f"{key} must be an integer, a comma list, or a..b: {value!r}"
        ) from None


def parse_plan(text: str) -> ExperimentPlan:
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise PlanFormatError(f"line {lineno}: expected key=value: {raw!r}")
        key, value = line.split("=", 1)
        key, value = key.strip(), value.strip()
        if key in pairs:
            raise PlanFormatError(f"line {lineno}: duplicate key {key!r}")
        pairs[key] = value

    for required in ("kind", "n", "k", "seeds"):
        if required not in pairs:
            raise PlanFormatError(f"missing required key {required!r}")

    def take_int(key: str, default: int) -> int:
        if key not in pairs:
            return default
        value = pairs.pop(key)
        try:
            return int(value)
        except ValueError:
            raise PlanFormatError(
                f"{key} must be an integer: {value!r}") from None

    def take_bool(key: str, default: bool) -> bool:
        if key not in pairs:
            return default
        value = pairs.pop(key)
        if value not in ("true", "false"):
            raise PlanFormatError(f"{key} must be true or false: {value!r}")
        return value == "true"

    kind = pairs.pop("kind")
    ns = _parse_int_list(pairs.pop("n"), "n")
    ks = _parse_int_list(pairs.pop("k"), "k")
    seeds = take_int("seeds", 0)
    seed_start = take_int("seed_start", 1)
    offset = take_int("offset", 0)
    if "digon_prob" in pairs:
        try:
            digon_prob = float(pairs.pop("digon_prob"))
        except ValueError:
            raise PlanFormatError("digon_prob must be a number") from None
    else:
        digon_prob = 0.25
    budget = take_int("budget", 10**6)
    fallback = take_bool("fallback", True)
    fallback_cap = take_int("fallback_cap", 14)
    if pairs:
        raise PlanFormatError(f"unknown keys: {', '.join(sorted(pairs))}")

    plan = ExperimentPlan(kind=kind, ns=ns, ks=ks, seeds=seeds,
                          seed_start=seed_start, offset=offset,
                          digon_prob=digon_prob, budget=budget,
                          fallback=fallback, fallback_cap=fallback_cap)
    plan.validate()
    return plan


def read_plan(path: str | Path) -> ExperimentPlan:
    return parse_plan(Path(path).read_text(encoding="utf-8"))


def draw_endpoints(rng: Splitmix64, n: int, k: int) -> tuple[int, tuple[int, ...]]:
    """Source uniform over vertices, then k distinct sinks from the rest."""
    if n < k + 1:
        raise ValueError(f"n={n} too small for k={k} sinks plus a source")
    source = rng.below(n)
    remaining = [v for v in range(n) if v != source]
    sinks = []
    for _ in range(k):
        sinks.append(remaining.pop(rng.below(len(remaining))))
    return source, tuple(sinks)


def _trial_stem(n: int, k: int, seed: int) -> str:
    return f"n{n}_k{k}_s{seed}"


def run_trial(plan: ExperimentPlan, n: int, k: int,
              seed: int) -> tuple[ExperimentRow, Digraph, PathSystem | None]:
    """One trial: returns the row, the instance, and a spanning system or
    None.  The endpoint draw continues the arc stream, so the instance file
    alone pins down the whole trial."""
    started = time.perf_counter()
    rng = Splitmix64(seed)
    d = generate(plan.spec_for(n, k, seed), rng)
    source, sinks = draw_endpoints(rng, n, k)

    config = SolveConfig(use_fallback=plan.fallback,
                         fallback_cap=plan.fallback_cap, budget=plan.budget)
    result = solve(d, source, sinks, config)
    verdict = exact_ddpc(d, source, sinks, budget=plan.budget)

    report = degree_report(d)
    threshold = degree_threshold(n, k)
    system = result.system if result.status == "found" else verdict.system
    runtime_ms = int((time.perf_counter() - started) * 1000)
    row = ExperimentRow(
        seed=seed, n=n, k=k,
        delta_zero=report.delta_zero, threshold=threshold,
        meets_threshold=report.delta_zero >= threshold,
        oracle_ddpc=verdict.kind,
        engine_outcome=result.engine_outcome,
        moves_applied=len(result.trace),
        max_cover=result.max_cover,
        runtime_ms=runtime_ms,
    )
    return row, d, system


def run_experiment(plan: ExperimentPlan, out_dir: str | Path,
                   csv_name: str = "results.csv") -> list[ExperimentRow]:
    """Run every trial of the plan, writing the CSV and all artifacts.

    Oracle budget exhaustion is recorded in the row's oracle_ddpc field and
    never aborts the sweep.
    """
    plan.validate()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rows: list[ExperimentRow] = []
    with open(out / csv_name, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for n, k, seed in plan.trials():
            row, d, system = run_trial(plan, n, k, seed)
            stem = _trial_stem(n, k, seed)
            write_dgr(out / f"{stem}.dgr", d)
            if system is not None:
                write_psys(out / f"{stem}.psys", system)
            fh.write(row.to_csv() + "\n")
            rows.append(row)
    return rows


# -- lemma audits -------------------------------------------------------------


@dataclass(frozen=True)
class ClaimTally:
    """Outcome counts for one claim, split by hypothesis satisfaction."""

    name: str
    met_pass: int = 0
    met_fail: int = 0
    unmet_pass: int = 0
    unmet_fail: int = 0

    def bump(self, holds: bool, met: bool) -> "ClaimTally":
        if met and holds:
            return replace(self, met_pass=self.met_pass + 1)
        if met:
            return replace(self, met_fail=self.met_fail + 1)
        if holds:
            return replace(self, unmet_pass=self.unmet_pass + 1)
        return replace(self, unmet_fail=self.unmet_fail + 1)


@dataclass(frozen=True)
class AuditReport:
    checked: int
    tallies: tuple[ClaimTally, ...]
    defects: tuple[tuple[str, str], ...] = ()  # (instance path, claim name)
    rejected: tuple[tuple[str, str], ...] = ()  # (path, reason)

    @property
    def has_defects(self) -> bool:
        return bool(self.defects)


@dataclass
class _AuditState:
    checked: int = 0
    order: list[str] = field(default_factory=list)
    tallies: dict[str, ClaimTally] = field(default_factory=dict)
    defects: list[tuple[str, str]] = field(default_factory=list)
    rejected: list[tuple[str, str]] = field(default_factory=list)


def _audit_pair(state: _AuditState, dgr_path: Path, psys_path: Path,
                budget: int | None) -> None:
    label = str(dgr_path)
    try:
        d = read_dgr(dgr_path)
    except (OSError, ValueError) as exc:
        state.rejected.append((label, f"unreadable instance: {exc}"))
        return
    try:
        sys = read_psys(psys_path)
    except (OSError, ValueError) as exc:
        state.rejected.append((str(psys_path), f"unreadable system: {exc}"))
        return
    if not is_semicomplete(d):
        state.rejected.append((label, "instance is not semicomplete"))
        return
    problems = validate_system(d, sys)
    if problems:
        state.rejected.append((str(psys_path),
                               f"invalid system: {problems[0]}"))
        return
    if sys.cover_count() == d.n:
        state.rejected.append((str(psys_path),
                               "system is spanning; nothing left to audit"))
        return
    verdict = certify_maximal(d, sys, budget=budget)
    if verdict.kind == "found":
        state.rejected.append((str(psys_path),
                               "not a maximum system; a larger one exists"))
        return
    if verdict.kind == "budget_exceeded":
        state.rejected.append((str(psys_path),
                               "maximality certification ran out of budget"))
        return

    report = lemma_report(d, sys, maximal=True)
    state.checked += 1
    for claim in report.claims:
        if claim.name not in state.tallies:
            state.order.append(claim.name)
            state.tallies[claim.name] = ClaimTally(claim.name)
        state.tallies[claim.name] = state.tallies[claim.name].bump(
            claim.holds, claim.hypotheses_met)
        if claim.hypotheses_met and not claim.holds:
            state.defects.append((label, claim.name))


def audit_lemmas(corpus_dir: str | Path,
                 budget: int | None = None) -> AuditReport:
    """Audit every (dgr, psys) pair under ``corpus_dir``.

    Pairs are matched by stem.  Unreadable, invalid, spanning, or
    uncertified entries are rejected with a reason rather than audited; an
    empty directory yields an empty report.
    """
    root = Path(corpus_dir)
    state = _AuditState()
    dgrs = sorted(root.glob("*.dgr"))
    stems = {p.stem for p in dgrs}
    for orphan in sorted(root.glob("*.psys")):
        if orphan.stem not in stems:
            state.rejected.append((str(orphan), "no matching .dgr instance"))
    for dgr_path in dgrs:
        psys_path = dgr_path.with_suffix(".psys")
        if not psys_path.exists():
            state.rejected.append((str(dgr_path), "no matching .psys system"))
            continue
        _audit_pair(state, dgr_path, psys_path, budget)
    return AuditReport(
        checked=state.checked,
        tallies=tuple(state.tallies[name] for name in state.order),
        defects=tuple(state.defects),
        rejected=tuple(state.rejected),
    )


def format_audit_report(report: AuditReport) -> str:
    lines = [f"systems audited: {report.checked}",
             f"rejected: {len(report.rejected)}"]
    for path, reason in report.rejected:
        lines.append(f"  reject {path}: {reason}")
    for t in report.tallies:
        met_total = t.met_pass + t.met_fail
        unmet_total = t.unmet_pass + t.unmet_fail
        lines.append(f"{t.name}: met {t.met_pass}/{met_total} pass, "
                     f"unmet {t.unmet_pass}/{unmet_total} pass")
    if report.defects:
        lines.append(f"DEFECTS: {len(report.defects)}")
        for path, claim in report.defects:
            lines.append(f"  defect {path}: {claim}")
    else:
        lines.append("no defects")
    return "\n".join(lines) + "\n"
