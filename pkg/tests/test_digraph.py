import pytest
from hypothesis import given, strategies as st

from ddpc.digraph import (
    Digraph,
    DgrFormatError,
    degree_report,
    degree_threshold,
    format_dgr,
    induced_subdigraph,
    is_semicomplete,
    is_strong,
    is_tournament,
    parse_dgr,
)
from ddpc.gen import GenSpec, generate

from conftest import complete, cycle3, transitive


def seeded_semicomplete(draw_n=st.integers(1, 12), seeds=st.integers(0, 10**6)):
    return st.builds(
        lambda n, seed: generate(GenSpec(n=n, kind="semicomplete", seed=seed)),
        draw_n, seeds)


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Digraph(3, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Digraph(3, [(0, 3)])
        with pytest.raises(ValueError):
            Digraph(3, [(-1, 0)])

    def test_rejects_duplicate_arc(self):
        with pytest.raises(ValueError):
            Digraph(3, [(0, 1), (0, 1)])

    def test_empty_digraph_allowed(self):
        d = Digraph(0, [])
        assert d.n == 0 and d.arc_count == 0

    def test_equality_and_hash(self):
        a = Digraph(3, [(0, 1), (1, 2)])
        b = Digraph(3, [(1, 2), (0, 1)])
        assert a == b and hash(a) == hash(b)
        assert a != Digraph(3, [(0, 1)])


class TestPredicates:
    def test_c3_semicomplete(self):
        assert is_semicomplete(cycle3())

    def test_two_isolated_vertices_not_semicomplete(self):
        assert not is_semicomplete(Digraph(2, []))

    def test_complete_3_semicomplete(self):
        assert is_semicomplete(complete(3))

    def test_small_vacuous(self):
        assert is_semicomplete(Digraph(0, []))
        assert is_semicomplete(Digraph(1, []))

    def test_tournament_predicate(self):
        assert is_tournament(transitive(4))
        assert not is_tournament(complete(3))
        assert not is_tournament(Digraph(2, []))

    def test_c3_strong(self):
        assert is_strong(cycle3())

    def test_tt3_not_strong(self):
        assert not is_strong(transitive(3))

    def test_single_vertex_strong(self):
        assert is_strong(Digraph(1, []))

    def test_empty_not_strong(self):
        assert not is_strong(Digraph(0, []))


class TestDegrees:
    def test_c3_delta_zero(self):
        assert degree_report(cycle3()).delta_zero == 1

    def test_complete3_delta_zero(self):
        assert degree_report(complete(3)).delta_zero == 2

    def test_tt3_delta_zero(self):
        assert degree_report(transitive(3)).delta_zero == 0

    def test_report_consistency(self):
        rep = degree_report(complete(4))
        assert rep.delta_zero == min(rep.delta_plus, rep.delta_minus)
        assert sum(rep.out_degrees) == sum(rep.in_degrees) == 12

    @given(seeded_semicomplete())
    def test_degree_sums_equal_arc_count(self, d):
        rep = degree_report(d)
        assert sum(rep.out_degrees) == d.arc_count
        assert sum(rep.in_degrees) == d.arc_count

    @given(seeded_semicomplete(draw_n=st.integers(2, 12)))
    def test_semicomplete_degree_lower_bound(self, d):
        rep = degree_report(d)
        for v in range(d.n):
            assert rep.out_degrees[v] + rep.in_degrees[v] >= d.n - 1
            assert rep.out_degrees[v] + rep.in_degrees[v] <= 2 * (d.n - 1)


class TestThreshold:
    def test_pinned_values(self):
        assert degree_threshold(10, 2) == 6
        assert degree_threshold(9, 2) == 5
        assert degree_threshold(1, 1) == 1

    def test_matches_ceiling_formula(self):
        import math
        for n in range(1, 30):
            for k in range(1, 6):
                assert degree_threshold(n, k) == math.ceil((n + k - 1) / 2)

    def test_rejects_nonpositive(self):
        for n, k in ((0, 1), (1, 0), (-2, 2), (3, -1)):
            with pytest.raises(ValueError):
                degree_threshold(n, k)

    def test_qualifying_instances_have_digons(self):
        # meeting the threshold with k >= 2 forces degree sums above the
        # tournament ceiling of n - 1
        for seed in range(5):
            d = generate(GenSpec(n=9, kind="near_threshold", k=2, seed=seed))
            assert is_semicomplete(d) and not is_tournament(d)


class TestMonotone:
    @given(seeded_semicomplete(draw_n=st.integers(2, 10)),
           st.integers(0, 10**6))
    def test_semicomplete_survives_arc_addition(self, d, pick):
        missing = [(u, v) for u in range(d.n) for v in range(d.n)
                   if u != v and not d.has_arc(u, v)]
        if not missing:
            return
        extra = missing[pick % len(missing)]
        enlarged = Digraph(d.n, list(d.arcs()) + [extra])
        assert is_semicomplete(enlarged)


class TestInduced:
    def test_c3_pair(self):
        sub, back = induced_subdigraph(cycle3(), [0, 1])
        assert sub.n == 2 and list(sub.arcs()) == [(0, 1)]
        assert back == (0, 1)

    def test_empty_subset(self):
        sub, back = induced_subdigraph(complete(4), [])
        assert sub.n == 0 and back == ()

    def test_complete_minor(self):
        sub, back = induced_subdigraph(complete(4), [1, 2, 3])
        assert sub == complete(3)
        assert back == (1, 2, 3)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            induced_subdigraph(cycle3(), [0, 3])


class TestDgrFormat:
    def test_round_trip(self):
        d = complete(4)
        assert parse_dgr(format_dgr(d)) == d

    def test_comments_and_order(self):
        text = "# instance\nn 3\n2 0\n0 1\n# done\n1 2\n"
        assert parse_dgr(text) == cycle3()

    def test_duplicate_arc_rejected(self):
        with pytest.raises(DgrFormatError):
            parse_dgr("n 3\n0 1\n0 1\n")

    def test_malformed_rejected(self):
        for text in ("", "m 3\n", "n x\n", "n 3\n0\n", "n 3\n0 1 2\n",
                     "n 3\n0 a\n", "n 3\n0 0\n", "n 3\n0 5\n"):
            with pytest.raises(DgrFormatError):
                parse_dgr(text)

    @given(seeded_semicomplete())
    def test_round_trip_random(self, d):
        assert parse_dgr(format_dgr(d)) == d
