"""Tests for ballot-level and election-level distances."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from conftest import random_election
from votedist import (
    Election,
    ElectionMetric,
    INFINITY,
    PreferenceOrder,
    deletion_distance,
    deletion_quasidistance,
    deletion_step_cost,
    discrete_distance,
    election_distance,
    hamming_distance,
    insertion_distance,
    insertion_quasidistance,
    is_finite,
    lifted_swap_distance,
    separating_example,
    swap_distance,
)

perm4 = st.permutations(range(4)).map(tuple)


class TestBallotDistances:
    def test_discrete(self):
        a = PreferenceOrder((0, 1, 2))
        b = PreferenceOrder((0, 2, 1))
        assert discrete_distance(a, a) == 0
        assert discrete_distance(a, b) == 1

    def test_swap_examples(self):
        a = PreferenceOrder((0, 1, 2, 3))
        assert swap_distance(a, a) == 0
        assert swap_distance(a, PreferenceOrder((1, 0, 2, 3))) == 1
        assert swap_distance(a, PreferenceOrder((3, 2, 1, 0))) == 6

    @settings(max_examples=300, deadline=None)
    @given(perm4, perm4)
    def test_swap_matches_bfs(self, x, y):
        assert swap_distance(PreferenceOrder(x), PreferenceOrder(y)) == brute.swap_bfs(x, y)

    @settings(max_examples=200, deadline=None)
    @given(perm4, perm4)
    def test_swap_is_a_metric(self, x, y):
        a, b = PreferenceOrder(x), PreferenceOrder(y)
        d = swap_distance(a, b)
        assert d >= 0
        assert (d == 0) == (x == y)
        assert d == swap_distance(b, a)

    @settings(max_examples=200, deadline=None)
    @given(perm4, perm4, perm4)
    def test_swap_triangle(self, x, y, z):
        a, b, c = (PreferenceOrder(p) for p in (x, y, z))
        assert swap_distance(a, c) <= swap_distance(a, b) + swap_distance(b, c)


def two_voter_election(b1: str, b2: str) -> Election:
    return Election.from_names(list("ab"), [list(b1), list(b2)])


class TestVotewiseDistances:
    def test_hamming_counts_changed_ballots(self):
        e1 = two_voter_election("ab", "ab")
        e2 = two_voter_election("ab", "ba")
        assert hamming_distance(e1, e1) == 0
        assert hamming_distance(e1, e2) == 1
        assert hamming_distance(e2, e1) == 1

    def test_alignment_is_by_voter_name_not_position(self):
        e1 = Election.from_names(["a", "b"], [["a", "b"], ["b", "a"]], ["x", "y"])
        e2 = Election.from_names(["a", "b"], [["b", "a"], ["a", "b"]], ["y", "x"])
        assert hamming_distance(e1, e2) == 0
        assert lifted_swap_distance(e1, e2) == 0

    def test_different_voter_sets_are_infinitely_far(self):
        e1 = Election.from_names(["a", "b"], [["a", "b"]], ["x"])
        e2 = Election.from_names(["a", "b"], [["a", "b"]], ["y"])
        assert hamming_distance(e1, e2) == INFINITY
        assert lifted_swap_distance(e1, e2) == INFINITY

    def test_different_rosters_are_infinitely_far(self):
        e1 = Election.from_names(["a", "b"], [["a", "b"]])
        e2 = Election.from_names(["a", "c"], [["a", "c"]])
        assert hamming_distance(e1, e2) == INFINITY

    def test_lifted_swap_sums_swap_distances(self):
        e1 = Election.from_names(list("abc"), [["a", "b", "c"], ["c", "b", "a"]])
        e2 = Election.from_names(list("abc"), [["b", "a", "c"], ["b", "c", "a"]])
        assert lifted_swap_distance(e1, e2) == 1 + 1

    def test_metric_axioms_on_random_profiles(self, rng):
        pool = [random_election(rng, 3, 4) for _ in range(40)]
        for fn in (hamming_distance, lifted_swap_distance):
            for x, y in itertools.product(pool, repeat=2):
                d = fn(x, y)
                assert d >= 0
                assert d == fn(y, x)
                assert (d == 0) == (x.profile == y.profile)
            for x, y, z in zip(pool, pool[1:], pool[2:]):
                assert fn(x, z) <= fn(x, y) + fn(y, z)


class TestInsertionDistance:
    def test_counts_voters_outside_the_overlap(self):
        e = Election.from_names(["a", "b"], [["a", "b"], ["b", "a"]], ["x", "y"])
        assert insertion_distance(e, e) == 0
        assert insertion_distance(e, e.delete_voters(["y"])) == 1
        other = Election.from_names(["a", "b"], [["a", "b"]], ["z"])
        assert insertion_distance(e, other) == 3

    def test_disagreeing_shared_voter_is_infinite(self):
        e1 = Election.from_names(["a", "b"], [["a", "b"]], ["x"])
        e2 = Election.from_names(["a", "b"], [["b", "a"]], ["x"])
        assert insertion_distance(e1, e2) == INFINITY

    def test_symmetry(self, rng):
        pool = [random_election(rng, 2, 2, prefix=p) for p in ("v", "v", "w")]
        for x, y in itertools.product(pool, repeat=2):
            assert insertion_distance(x, y) == insertion_distance(y, x)

    def test_quasidistance_is_one_sided(self):
        e = Election.from_names(["a", "b"], [["a", "b"], ["b", "a"]], ["x", "y"])
        sub = e.delete_voters(["y"])
        assert insertion_quasidistance(sub, e) == 1
        assert insertion_quasidistance(e, sub) == INFINITY
        assert deletion_quasidistance(e, sub) == 1
        assert deletion_quasidistance(sub, e) == INFINITY

    def test_quasidistance_identity_and_triangle(self, rng):
        pool = [random_election(rng, 2, rng.randint(0, 3)) for _ in range(25)]
        for fn in (insertion_quasidistance, deletion_quasidistance):
            for x in pool:
                assert fn(x, x) == 0
            for x, y, z in itertools.product(pool[:12], repeat=3):
                lhs, a, b = fn(x, z), fn(x, y), fn(y, z)
                if is_finite(a) and is_finite(b):
                    assert lhs <= a + b


class TestDeletionStepCost:
    def test_zero_only_for_equal(self):
        e = Election.from_names(["a", "b"], [["a", "b"]])
        assert deletion_step_cost(e, e) == 0

    def test_single_step_value(self):
        e = separating_example()
        sub = e.delete_voters([f"v{k}" for k in range(14, 22)])
        expected = 2 - Fraction(1, 8 + 29 * 29 + 1)
        assert deletion_step_cost(e, sub) == expected
        assert deletion_step_cost(sub, e) == expected
        assert expected == Fraction(1699, 850)

    def test_step_cost_is_between_5_thirds_and_2(self, rng):
        for _ in range(60):
            e = random_election(rng, 3, rng.randint(1, 6))
            drop = rng.sample(e.voters, rng.randint(1, e.n))
            cost = deletion_step_cost(e, e.delete_voters(drop))
            assert Fraction(5, 3) <= cost < 2

    def test_incomparable_pairs_are_infinite(self):
        e1 = Election.from_names(["a", "b"], [["a", "b"]], ["x"])
        e2 = Election.from_names(["a", "b"], [["b", "a"]], ["y"])
        assert deletion_step_cost(e1, e2) == INFINITY
        e3 = Election.from_names(["a", "b"], [["b", "a"]], ["x"])
        assert deletion_step_cost(e1, e3) == INFINITY


class TestDeletionDistance:
    def test_identity(self):
        e = Election.from_names(["a", "b"], [["a", "b"]])
        assert deletion_distance(e, e) == 0

    def test_containment_is_a_single_step(self):
        e = Election.from_names(["a", "b"], [["a", "b"], ["b", "a"]])
        sub = e.delete_voters(["v2"])
        assert deletion_distance(e, sub) == deletion_step_cost(e, sub)
        assert deletion_distance(sub, e) == deletion_step_cost(sub, e)

    def test_disjoint_two_voter_pair(self):
        e1 = Election.from_names(["a", "b"], [["a", "b"], ["a", "b"]])
        e2 = Election.from_names(["a", "b"], [["b", "a"], ["b", "a"]])
        assert deletion_distance(e1, e2) == Fraction(26, 7)

    def test_matches_shortest_paths_two_candidates(self):
        universe = brute.assignment_universe(["a", "b"], ["p", "q", "r", "s"])
        for source in (0, 7, 40, 80):
            dist = brute.dijkstra_deletion(universe, source, deletion_step_cost)
            for target, e in enumerate(universe):
                assert deletion_distance(universe[source], e) == dist[target], (
                    source,
                    target,
                )

    def test_matches_shortest_paths_three_candidates(self):
        universe = brute.assignment_universe(["a", "b", "c"], ["p", "q"])
        dist = brute.dijkstra_deletion(universe, 17, deletion_step_cost)
        for target, e in enumerate(universe):
            assert deletion_distance(universe[17], e) == dist[target]

    def test_symmetry_and_triangle(self, rng):
        pool = [random_election(rng, 2, rng.randint(0, 3)) for _ in range(20)]
        for x, y in itertools.product(pool, repeat=2):
            assert deletion_distance(x, y) == deletion_distance(y, x)
        for x, y, z in itertools.product(pool[:10], repeat=3):
            assert deletion_distance(x, z) <= (
                deletion_distance(x, y) + deletion_distance(y, z)
            )


class TestElectionMetricDispatch:
    def test_tokens_round_trip(self):
        tokens = {m.value for m in ElectionMetric}
        assert tokens == {
            "hamming",
            "swap",
            "insertion",
            "deletion",
            "insertion-quasi",
            "deletion-quasi",
        }
        for metric in ElectionMetric:
            assert ElectionMetric(metric.value) is metric

    def test_symmetry_flags(self):
        symmetric = {m for m in ElectionMetric if m.is_symmetric}
        assert symmetric == {
            ElectionMetric.HAMMING,
            ElectionMetric.SWAP,
            ElectionMetric.INSERTION,
            ElectionMetric.DELETION,
        }

    def test_dispatch_agrees_with_direct_functions(self, rng):
        e1 = random_election(rng, 3, 3)
        e2 = random_election(rng, 3, 3)
        pairs = [
            (ElectionMetric.HAMMING, hamming_distance),
            (ElectionMetric.SWAP, lifted_swap_distance),
            (ElectionMetric.INSERTION, insertion_distance),
            (ElectionMetric.DELETION, deletion_distance),
            (ElectionMetric.INSERTION_QUASI, insertion_quasidistance),
            (ElectionMetric.DELETION_QUASI, deletion_quasidistance),
        ]
        for metric, fn in pairs:
            assert election_distance(metric, e1, e2) == fn(e1, e2)

    def test_infinity_is_math_inf(self):
        assert INFINITY == math.inf
        assert not is_finite(INFINITY)
        assert is_finite(Fraction(3, 2))
        assert is_finite(0)
