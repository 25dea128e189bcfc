import pytest
from hypothesis import given, settings, strategies as st

from ddpc.digraph import Digraph
from ddpc.gen import GenSpec, generate
from ddpc.oracle import certify_maximal, exact_max_system, exact_st_linkage
from ddpc.path_system import (
    PathSystem,
    PsysFormatError,
    boundary_partition,
    format_psys,
    is_ddpc,
    lemma_report,
    parse_psys,
    validate_system,
)

from conftest import complete, reference_boundary, transitive

CLAIM_NAMES = (
    "pairwise_uncovered_degree", "uncovered_strong", "uncovered_size_bound",
    "post_exits_avoid_entries", "pre_entries_avoid_exits",
    "boundary_covers_all", "overlap_at_most_k", "overlap_per_path",
    "entries_lower", "exits_lower", "pure_entries_lower", "pure_exits_lower",
    "pure_union_lower", "pre_entries_size", "post_exits_size",
)


def k5_spanning():
    return PathSystem(0, (1, 2), ((0, 3, 1), (0, 4, 2)))


def k5_partial():
    return PathSystem(0, (1, 2), ((0, 3, 1), (0, 2)))


class TestValidate:
    def test_k5_valid(self, k5):
        assert validate_system(k5, k5_spanning()) == []

    def test_overlap_detected(self, k5):
        bad = PathSystem(0, (1, 2), ((0, 3, 1), (0, 3, 2)))
        problems = validate_system(k5, bad)
        assert any("3" in p and "overlap" in p for p in problems)

    def test_missing_arc_detected(self):
        d = Digraph(2, [(1, 0)])
        problems = validate_system(d, PathSystem(0, (1,), ((0, 1),)))
        assert any("arc" in p for p in problems)

    def test_endpoint_mismatch(self, k5):
        bad = PathSystem(0, (1, 2), ((0, 3, 2), (0, 4, 1)))
        assert validate_system(k5, bad)

    def test_duplicate_sink(self, k5):
        bad = PathSystem(0, (1, 1), ((0, 1), (0, 3, 1)))
        assert validate_system(k5, bad)

    def test_source_as_sink(self, k5):
        bad = PathSystem(0, (0, 2), ((0,), (0, 2)))
        assert validate_system(k5, bad)

    def test_repeat_within_path(self, k5):
        bad = PathSystem(0, (1,), ((0, 3, 4, 3, 1),))
        assert validate_system(k5, bad)


class TestDdpc:
    def test_k5_spanning(self, k5):
        assert is_ddpc(k5, k5_spanning())

    def test_k5_partial(self, k5):
        assert not is_ddpc(k5, k5_partial())

    def test_n3_both_arcs(self, tt3):
        assert is_ddpc(tt3, PathSystem(0, (1, 2), ((0, 1), (0, 2))))

    def test_invalid_rejected(self, k5):
        with pytest.raises(ValueError):
            is_ddpc(k5, PathSystem(0, (1, 2), ((0, 3, 1), (0, 3, 2))))


class TestBoundary:
    def test_k5_all_digons(self, k5):
        part = boundary_partition(k5, k5_partial())
        assert part.entries == frozenset({0, 1, 2, 3})
        assert part.exits == frozenset({0, 1, 2, 3})
        assert part.pure_entries == frozenset()
        assert part.pure_exits == frozenset()
        assert part.uncovered == (4,)
        assert part.uncovered_strong

    def test_dominating_uncovered_vertex(self):
        # 4 beats every covered vertex and receives nothing back
        arcs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                (4, 0), (4, 1), (4, 2), (4, 3)]
        d = Digraph(5, arcs)
        sys = PathSystem(0, (1, 3), ((0, 1), (0, 2, 3)))
        part = boundary_partition(d, sys)
        assert part.entries == frozenset({0, 1, 2, 3})
        assert part.exits == frozenset()
        assert part.pure_entries == frozenset({0, 1, 2, 3})
        assert part.pure_exits == frozenset()
        assert part.pre_entries == frozenset({0, 2})
        assert part.post_exits == frozenset()

    def test_shift_sets_follow_path_order(self, k5):
        part = boundary_partition(k5, k5_partial())
        # paths (0,3,1) and (0,2): every covered vertex is both entry and
        # exit, so the shifted sets are exactly the path predecessors and
        # successors of the covered vertices
        assert part.post_exits == frozenset({3, 1, 2})
        assert part.pre_entries == frozenset({0, 3})

    def test_seeded_matches_reference(self):
        d = generate(GenSpec(n=9, kind="semicomplete", seed=42))
        link = exact_st_linkage(d, 0, (1, 2))
        assert link.kind == "found"
        sys = link.system
        assert sys.cover_count() < d.n
        part = boundary_partition(d, sys)
        ref = reference_boundary(d, sys)
        assert part.entries == ref["entries"]
        assert part.exits == ref["exits"]
        assert part.pure_entries == ref["pure_entries"]
        assert part.pure_exits == ref["pure_exits"]
        assert part.pre_entries == ref["pre_entries"]
        assert part.post_exits == ref["post_exits"]
        assert part.pre_pure_entries == ref["pre_pure_entries"]
        assert part.post_pure_exits == ref["post_pure_exits"]
        assert part.uncovered == ref["uncovered"]

    @settings(max_examples=80)
    @given(st.integers(5, 11), st.integers(0, 10**6))
    def test_reference_agreement_random(self, n, seed):
        d = generate(GenSpec(n=n, kind="semicomplete", seed=seed))
        link = exact_st_linkage(d, 0, (1, 2))
        if link.kind != "found" or link.system.cover_count() == d.n:
            return
        part = boundary_partition(d, link.system)
        ref = reference_boundary(d, link.system)
        for key in ("entries", "exits", "pure_entries", "pure_exits",
                    "pre_entries", "post_exits", "pre_pure_entries",
                    "post_pure_exits"):
            assert getattr(part, key) == ref[key], key
        assert part.uncovered == ref["uncovered"]

    def test_spanning_rejected(self, k5):
        with pytest.raises(ValueError):
            boundary_partition(k5, k5_spanning())

    def test_boundary_covers_everything_semicomplete(self, k5):
        part = boundary_partition(k5, k5_partial())
        assert part.entries | part.exits == part.covered


class TestLemmaReport:
    def test_claim_inventory(self, k5):
        report = lemma_report(k5, k5_partial())
        assert tuple(c.name for c in report.claims) == CLAIM_NAMES

    def test_singleton_uncovered_degree_claim(self, k5):
        report = lemma_report(k5, k5_partial())
        assert report.claim("pairwise_uncovered_degree").holds

    def test_k5_union_size(self, k5):
        report = lemma_report(k5, k5_partial())
        assert report.claim("boundary_covers_all").holds

    def test_unconditional_shift_bounds(self, k5):
        report = lemma_report(k5, k5_partial())
        for name in ("pre_entries_size", "post_exits_size"):
            claim = report.claim(name)
            assert claim.holds and claim.hypotheses_met

    def test_hypothesis_gating(self):
        # sub-threshold tournament: threshold-gated claims are informational
        d = transitive(5)
        sys = PathSystem(0, (1, 2), ((0, 1), (0, 2)))
        report = lemma_report(d, sys)
        assert not report.threshold_met
        assert not report.claim("pairwise_uncovered_degree").hypotheses_met
        assert report.claim("boundary_covers_all").hypotheses_met

    def test_certified_max_strong_uncovered(self):
        # on a certified maximum with strong uncovered zone the successor
        # shift avoids the entry set
        hits = 0
        for seed in range(40):
            d = generate(GenSpec(n=7, kind="tournament", seed=seed))
            v = exact_max_system(d, 0, (1, 2))
            if v.kind != "found" or v.max_cover == d.n:
                continue
            assert certify_maximal(d, v.system).kind == "none_exists"
            report = lemma_report(d, v.system, maximal=True)
            if not report.uncovered_strong:
                continue
            hits += 1
            assert report.claim("post_exits_avoid_entries").holds
            assert report.claim("pre_entries_avoid_exits").holds
            assert not report.defects()
        assert hits > 0

    def test_spanning_rejected(self, k5):
        with pytest.raises(ValueError):
            lemma_report(k5, k5_spanning())


class TestPsysFormat:
    def test_round_trip(self):
        sys = k5_spanning()
        assert parse_psys(format_psys(sys)) == sys

    def test_exact_text(self):
        assert format_psys(k5_partial()) == "s 0\nk 2\n0 3 1\n0 2\n"

    def test_comments_allowed(self):
        text = "# system\ns 0\nk 2\n0 3 1\n# second\n0 2\n"
        assert parse_psys(text) == k5_partial()

    def test_malformed_rejected(self):
        for text in ("", "s 0\n", "s 0\nk 2\n0 1\n", "k 2\ns 0\n0 1\n0 2\n",
                     "s 0\nk x\n", "s 0\nk 1\n0 a\n",
                     "s 0\nk 2\n0 1\n0 2\n0 3\n"):
            with pytest.raises(PsysFormatError):
                parse_psys(text)

    @given(st.integers(4, 10), st.integers(0, 10**5))
    def test_round_trip_random(self, n, seed):
        d = generate(GenSpec(n=n, kind="semicomplete", seed=seed))
        link = exact_st_linkage(d, 0, (1, 2))
        if link.kind != "found":
            return
        assert parse_psys(format_psys(link.system)) == link.system
