"""Brute-force enumeration oracles and their guards."""

import itertools

import pytest
from graphcase import complete_graph, cycle_graph, path_graph, random_probmap

from dclab import Graph, ProbMap, gnp_generate, subset_probability
from dclab.oracle import (EventPredicate, enumerate_dominating_cliques,
                          event_from_permutation, event_members,
                          exact_event_probability, exact_max_clique,
                          is_clique, is_decreasing_event, is_dominating,
                          is_dominating_clique, is_increasing_event)
from dclab.rng import RngStream


class TestCheckers:
    def test_clique_conventions(self):
        g = path_graph(4)
        assert is_clique(g, [])
        assert is_clique(g, [3])
        assert is_clique(g, [2, 3])
        assert not is_clique(g, [1, 3])

    def test_domination(self):
        g = path_graph(4)
        assert is_dominating(g, [2, 3])
        assert not is_dominating(g, [2])
        assert not is_dominating(g, [])

    def test_dominating_clique(self):
        g = path_graph(4)
        assert is_dominating_clique(g, [2, 3])
        assert not is_dominating_clique(g, [1, 4])


class TestEnumerateDominatingCliques:
    def test_k3_all_nonempty_subsets(self):
        dcs, size = enumerate_dominating_cliques(complete_graph(3))
        assert len(dcs) == 7 and size == 1

    def test_c6_has_none(self):
        assert enumerate_dominating_cliques(cycle_graph(6)) == ([], None)

    def test_p4_minimum_pair(self):
        dcs, size = enumerate_dominating_cliques(path_graph(4))
        assert size == 2 and frozenset({2, 3}) in dcs

    def test_every_result_passes_checker(self):
        for seed in range(10):
            g = gnp_generate(9, 0.45, seed)
            dcs, size = enumerate_dominating_cliques(g)
            for s in dcs:
                assert is_dominating_clique(g, s)
            if dcs:
                assert size == min(len(s) for s in dcs)

    def test_matches_full_subset_scan(self):
        for seed in range(6):
            g = gnp_generate(8, 0.5, seed + 50)
            dcs, _ = enumerate_dominating_cliques(g)
            brute = {frozenset(s)
                     for r in range(1, g.n + 1)
                     for s in itertools.combinations(range(1, g.n + 1), r)
                     if is_dominating_clique(g, s)}
            assert set(dcs) == brute

    def test_guard(self):
        with pytest.raises(ValueError, match="n <= 25"):
            enumerate_dominating_cliques(gnp_generate(26, 0.1, 0))


class TestExactEventProbability:
    def test_p3_clique(self):
        g = path_graph(3)
        assert exact_event_probability(g, ProbMap.uniform(3, 0.5), EventPredicate.clique()) == pytest.approx(0.75)

    def test_k3_dominating(self):
        g = complete_graph(3)
        assert exact_event_probability(g, ProbMap.uniform(3, 0.5), EventPredicate.dominating()) == pytest.approx(0.875)

    def test_disconnected_has_no_dominating_clique(self):
        g = Graph(4, [(1, 2), (3, 4)])
        rng = RngStream(1)
        for _ in range(3):
            pm = random_probmap(4, rng)
            assert exact_event_probability(g, pm, EventPredicate.dominating_clique()) == 0.0

    def test_clique_and_complement_sum_to_one(self):
        rng = RngStream(2)
        for seed in range(5):
            g = gnp_generate(7, 0.4, seed)
            pm = random_probmap(7, rng)
            members = event_members(g, EventPredicate.clique())
            universe = [frozenset(s) for r in range(g.n + 1)
                        for s in itertools.combinations(range(1, g.n + 1), r)]
            non_members = [s for s in universe if s not in set(members)]
            p = exact_event_probability(g, pm, EventPredicate.clique())
            q = exact_event_probability(g, pm, EventPredicate.custom(non_members))
            assert p + q == pytest.approx(1.0, abs=1e-12)

    def test_custom_event_matches_manual_sum(self):
        g = path_graph(3)
        pm = ProbMap(3, (0.2, 0.5, 0.9))
        subsets = [{1}, {1, 2}]
        pred = EventPredicate.custom(subsets)
        expect = sum(subset_probability(pm, s) for s in subsets)
        assert exact_event_probability(g, pm, pred) == pytest.approx(expect)

    def test_guard(self):
        g = gnp_generate(21, 0.1, 0)
        with pytest.raises(ValueError, match="n <= 20"):
            exact_event_probability(g, ProbMap.uniform(21, 0.5), EventPredicate.clique())


class TestMonotoneClassification:
    def test_dominating_is_increasing_clique_is_decreasing(self):
        for seed in range(6):
            g = gnp_generate(7, 0.45, seed + 10)
            dom = event_members(g, EventPredicate.dominating())
            clq = event_members(g, EventPredicate.clique())
            assert is_increasing_event(dom, g.n)
            assert is_decreasing_event(clq, g.n)


class TestEventFromPermutation:
    def test_single_vertex(self):
        assert event_from_permutation(Graph(1, []), [1]) == [frozenset({1})]

    def test_k2(self):
        got = event_from_permutation(complete_graph(2), [1, 2])
        assert sorted(got, key=sorted) == [frozenset({1}), frozenset({1, 2}), frozenset({2})]

    def test_p3(self):
        got = event_from_permutation(path_graph(3), [2, 1, 3])
        expect = [{2}, {1, 2}, {2, 3}, {1, 2, 3}, {1}, {3}]
        assert {frozenset(s) for s in expect} == set(got)
        assert len(got) == 6  # no duplicates across positions

    def test_members_are_distinct(self):
        rng = RngStream(3)
        for seed in range(8):
            n = 4 + seed % 4
            g = gnp_generate(n, 0.5, seed)
            order = sorted(range(1, n + 1), key=lambda v: rng.next_u64())
            got = event_from_permutation(g, order)
            assert len(got) == len(set(got))

    def test_guard(self):
        g = gnp_generate(16, 0.2, 0)
        with pytest.raises(ValueError, match="n <= 15"):
            event_from_permutation(g, list(range(1, 17)))


class TestExactMaxClique:
    def test_small_examples(self):
        assert exact_max_clique(complete_graph(3))[1] == 3
        assert exact_max_clique(cycle_graph(6))[1] == 2
        assert exact_max_clique(path_graph(4))[1] == 2

    def test_returned_set_is_clique_of_exact_size(self):
        for seed in range(8):
            g = gnp_generate(30, 0.5, seed)
            clique, size = exact_max_clique(g)
            assert is_clique(g, clique) and len(clique) == size

    def test_matches_exhaustive_search(self):
        for seed in range(6):
            g = gnp_generate(10, 0.55, seed + 20)
            _, size = exact_max_clique(g)
            brute = max(len(s) for r in range(g.n + 1)
                        for s in itertools.combinations(range(1, g.n + 1), r)
                        if is_clique(g, s))
            assert size == brute

    def test_guard(self):
        with pytest.raises(ValueError, match="n <= 200"):
            exact_max_clique(gnp_generate(201, 0.01, 0))
