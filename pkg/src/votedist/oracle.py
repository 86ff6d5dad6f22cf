"""Brute-force closest-consensus search.

``dr_score_oracle`` computes, for one candidate, the least distance from the
given election to any election that candidate wins outright, by enumerating
candidate elections and evaluating the distance functions directly.  It
never touches the solvers in ``scores``, so the two sides can check each
other: each score function is supposed to agree with the oracle under the
matching distance (replacement with hamming, dodgson with swap, maximin
with insertion, young with deletion, and the two one-sided variants with
insertion and deletion scores respectively).

Enumeration spaces, with the pruning that keeps each one exact:

* hamming / swap keep the voter set fixed, so all rankings-to-the-power-n
  profiles are scanned outright.
* the voter-set metrics enumerate every deletion subset combined with up to
  ``addition_budget`` appended voters.  Appended voters always rank the
  target candidate first with the rest in roster order: if any addition
  producing a win exists, the same addition with those ballots also wins,
  and the distances charge additions by count only.  Pass
  ``additions="all"`` to forgo that pruning and enumerate every added
  ballot multiset (feasible only for tiny elections).

When the budget cannot certify that the found minimum is global, the oracle
raises ``InconclusiveSearch`` rather than guessing.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb, factorial

from .core import Candidate, Election, PreferenceOrder, condorcet_winner
from .distances import (
    INFINITY,
    ElectionMetric,
    Value,
    election_distance,
    swap_distance,
)
from .rules import WinnerSet

_PROFILE_METRICS = (ElectionMetric.HAMMING, ElectionMetric.SWAP)


class InconclusiveSearch(Exception):
    """The enumeration budget ran out before the minimum was certified."""


@lru_cache(maxsize=None)
def _rankings(m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(m)))


@lru_cache(maxsize=None)
def _swap_table(m: int) -> tuple[tuple[int, ...], ...]:
    orders = [PreferenceOrder(r) for r in _rankings(m)]
    return tuple(tuple(swap_distance(a, b) for b in orders) for a in orders)


@lru_cache(maxsize=None)
def _profile_winner(m: int, ids: tuple[int, ...]) -> int | None:
    """Condorcet winner of the profile given by ranking indices, if any."""
    rankings = _rankings(m)
    beats = [[0] * m for _ in range(m)]
    for i in ids:
        ranking = rankings[i]
        for a in range(m):
            for b in range(a + 1, m):
                beats[ranking[a]][ranking[b]] += 1
    n = len(ids)
    for c in range(m):
        if all(2 * beats[c][b] > n for b in range(m) if b != c):
            return c
    return None


def _profile_minima(e: Election, metric: ElectionMetric, limit: int) -> list[Value]:
    """Least distance to a profile won by each candidate, voter set fixed."""
    m, n = e.m, e.n
    rankings = _rankings(m)
    if len(rankings) ** n > limit:
        raise InconclusiveSearch(
            f"profile space {len(rankings)}**{n} exceeds the enumeration limit"
        )
    index = {r: i for i, r in enumerate(rankings)}
    original = [index[ballot.ranking] for ballot in e.profile]
    if metric is ElectionMetric.SWAP:
        table = _swap_table(m)
    else:
        table = tuple(
            tuple(0 if a == b else 1 for b in range(len(rankings)))
            for a in range(len(rankings))
        )
    minima: list[Value] = [INFINITY] * m
    for ids in itertools.product(range(len(rankings)), repeat=n):
        winner = _profile_winner(m, ids)
        if winner is None:
            continue
        dist = 0
        for orig, new in zip(original, ids):
            dist += table[orig][new]
        if dist < minima[winner]:
            minima[winner] = dist
    assert all(v != INFINITY for v in minima), "a unanimous profile wins for anyone"
    return minima


def _added_ballot_choices(
    e: Election, cand: int, count: int, additions: str
) -> itertools.chain | list:
    if additions == "top":
        canonical = PreferenceOrder(
            (cand,) + tuple(x for x in range(e.m) if x != cand)
        )
        return [[canonical] * count]
    all_orders = [PreferenceOrder(r) for r in _rankings(e.m)]
    return [list(combo) for combo in itertools.combinations_with_replacement(all_orders, count)]


def _edit_minimum(
    e: Election,
    metric: ElectionMetric,
    cand: int,
    budget: int,
    additions: str,
    limit: int,
) -> Value:
    n = e.n
    add_choices = 1 if additions == "top" else comb(factorial(e.m) + budget - 1, budget)
    if 2**n * (budget + 1) * add_choices > limit:
        raise InconclusiveSearch("edit space exceeds the enumeration limit")
    best: Value = INFINITY
    for r in range(n + 1):
        for drop in itertools.combinations(e.voters, r):
            trimmed = e.delete_voters(drop)
            for extra in range(budget + 1):
                for ballots in _added_ballot_choices(e, cand, extra, additions):
                    modified = trimmed.add_voters(ballots)
                    winner = condorcet_winner(modified)
                    if winner is None or winner.index != cand:
                        continue
                    dist = election_distance(metric, e, modified)
                    if dist < best:
                        best = dist
    return best


def _certified_floor(metric: ElectionMetric, n: int, budget: int) -> Value:
    """Largest found value the enumeration can still certify as minimal.

    Anything the edit enumeration skipped involves more than ``budget``
    additions.  Under the counting metrics such an election is farther than
    ``budget``; under the deletion metric its distance exceeds the cost of a
    budget+1 pure addition, which the bound below undercuts.  The one-sided
    deletion distance needs no additions at all, so its scan is always
    complete.
    """
    if metric is ElectionMetric.DELETION_QUASI:
        return INFINITY
    if metric is ElectionMetric.DELETION:
        from fractions import Fraction

        j = budget + 1
        return 2 - Fraction(1, j + (n + j) ** 2 + 1)
    return budget


def dr_score_oracle(
    e: Election,
    metric: ElectionMetric,
    cand: Candidate | int | str,
    *,
    addition_budget: int | None = None,
    additions: str = "top",
    limit: int = 5_000_000,
) -> Value:
    """Least distance from ``e`` to an election that ``cand`` wins outright.

    ``addition_budget`` caps how many voters the edit enumeration may append
    (default n + 1, which always certifies).  ``additions`` selects the
    appended ballots: "top" for the canonical cand-first ballot, "all" for
    every multiset.  Raises InconclusiveSearch when the scan cannot certify
    its minimum within the limits.
    """
    if additions not in ("top", "all"):
        raise ValueError("additions must be 'top' or 'all'")
    idx = e.candidate_index(cand)
    if metric in _PROFILE_METRICS:
        return _profile_minima(e, metric, limit)[idx]
    budget = e.n + 1 if addition_budget is None else addition_budget
    best = _edit_minimum(e, metric, idx, budget, additions, limit)
    if not best <= _certified_floor(metric, e.n, budget):
        raise InconclusiveSearch(
            f"found {best} for {metric.value}, but elections beyond "
            f"{budget} additions could do better"
        )
    return best


def dr_winners_oracle(
    e: Election,
    metric: ElectionMetric,
    *,
    addition_budget: int | None = None,
    additions: str = "top",
    limit: int = 5_000_000,
) -> WinnerSet:
    """Candidates whose closest won election is nearest, by brute force."""
    if e.n == 0:
        raise ValueError("closest-consensus winners need at least one voter")
    if metric in _PROFILE_METRICS:
        scores = _profile_minima(e, metric, limit)
    else:
        scores = [
            dr_score_oracle(
                e,
                metric,
                c,
                addition_budget=addition_budget,
                additions=additions,
                limit=limit,
            )
            for c in range(e.m)
        ]
    low = min(scores)
    assert low != INFINITY
    winners = tuple(e.candidates[i] for i in range(e.m) if scores[i] == low)
    return WinnerSet(f"closest-{metric.value}", winners)
