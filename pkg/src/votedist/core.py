"""Core election model: candidates, strict rankings, elections, pairwise tallies.

An election couples three things that most voting libraries conflate: a fixed
candidate roster, a set of voter identities, and one strict total order per
voter.  Voter identities matter here because several distances treat "the same
voter with the same ballot" differently from "a fresh voter who happens to
vote identically", so profiles are never reduced to anonymous multisets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

CandidateRef = Union["Candidate", int, str]


def _check_candidate_name(name: str) -> None:
    if not isinstance(name, str) or not name:
        raise ValueError("candidate name must be a non-empty string")
    if any(ch.isspace() for ch in name) or ">" in name or name.startswith("#"):
        raise ValueError(f"candidate name {name!r} clashes with the profile syntax")


@dataclass(frozen=True, order=True)
class Candidate:
    """A candidate: a stable index into the roster plus a display name."""

    index: int
    name: str

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError("candidate index must be non-negative")
        _check_candidate_name(self.name)


@dataclass(frozen=True)
class PreferenceOrder:
    """A strict total order over the roster, most preferred first.

    ``ranking`` holds candidate indices, so the order is roster-relative and
    only meaningful next to the election it belongs to.
    """

    ranking: tuple[int, ...]

    def __post_init__(self) -> None:
        ranking = tuple(self.ranking)
        object.__setattr__(self, "ranking", ranking)
        if not ranking:
            raise ValueError("a ballot must rank at least one candidate")
        if sorted(ranking) != list(range(len(ranking))):
            raise ValueError(f"ranking {ranking!r} is not a permutation of 0..m-1")

    @property
    def m(self) -> int:
        return len(self.ranking)

    @cached_property
    def positions(self) -> tuple[int, ...]:
        """positions[c] is the rank of candidate c, 0 for the top choice."""
        pos = [0] * len(self.ranking)
        for place, cand in enumerate(self.ranking):
            pos[cand] = place
        return tuple(pos)

    def position(self, cand: int) -> int:
        return self.positions[cand]

    def prefers(self, a: int, b: int) -> bool:
        return self.positions[a] < self.positions[b]

    def top(self) -> int:
        return self.ranking[0]


@dataclass(frozen=True)
class Election:
    """A roster, a tuple of distinct voter names, and one ballot per voter."""

    candidates: tuple[Candidate, ...]
    voters: tuple[str, ...]
    profile: tuple[PreferenceOrder, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "candidates", tuple(self.candidates))
        object.__setattr__(self, "voters", tuple(self.voters))
        object.__setattr__(self, "profile", tuple(self.profile))
        for i, cand in enumerate(self.candidates):
            if cand.index != i:
                raise ValueError("candidates must be listed in index order 0..m-1")
        names = [c.name for c in self.candidates]
        if len(set(names)) != len(names):
            raise ValueError("candidate names must be unique")
        if len(self.voters) != len(self.profile):
            raise ValueError("need exactly one ballot per voter")
        if len(set(self.voters)) != len(self.voters):
            raise ValueError("voter names must be unique")
        for voter in self.voters:
            if not isinstance(voter, str) or not voter:
                raise ValueError("voter names must be non-empty strings")
        m = len(self.candidates)
        for ballot in self.profile:
            if ballot.m != m:
                raise ValueError("ballot does not cover the candidate roster")

    @classmethod
    def from_names(
        cls,
        candidate_names: Sequence[str],
        ballots: Iterable[Sequence[str]],
        voters: Sequence[str] | None = None,
    ) -> "Election":
        """Build an election from candidate names and name-based ballots.

        Voters default to ``v1..vn`` in ballot order.
        """
        candidates = tuple(Candidate(i, name) for i, name in enumerate(candidate_names))
        index = {name: i for i, name in enumerate(candidate_names)}
        profile = tuple(
            PreferenceOrder(tuple(index[name] for name in ballot)) for ballot in ballots
        )
        if voters is None:
            voters = tuple(f"v{i + 1}" for i in range(len(profile)))
        return cls(candidates, tuple(voters), profile)

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def n(self) -> int:
        return len(self.voters)

    @cached_property
    def candidate_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.candidates)

    @cached_property
    def ballot_of(self) -> dict[str, PreferenceOrder]:
        return dict(zip(self.voters, self.profile))

    def candidate_index(self, ref: CandidateRef) -> int:
        """Resolve a Candidate, index, or name to a roster index."""
        if isinstance(ref, Candidate):
            if ref.index >= self.m or self.candidates[ref.index] != ref:
                raise KeyError(f"{ref} is not on this roster")
            return ref.index
        if isinstance(ref, int):
            if not 0 <= ref < self.m:
                raise KeyError(f"candidate index {ref} out of range")
            return ref
        try:
            return self.candidate_names.index(ref)
        except ValueError:
            raise KeyError(f"no candidate named {ref!r}") from None

    def delete_voters(self, names: Iterable[str]) -> "Election":
        """Return the election restricted to voters outside ``names``."""
        drop = set(names)
        unknown = drop - set(self.voters)
        if unknown:
            raise KeyError(f"cannot delete unknown voters {sorted(unknown)}")
        kept = [(v, b) for v, b in zip(self.voters, self.profile) if v not in drop]
        return Election(
            self.candidates,
            tuple(v for v, _ in kept),
            tuple(b for _, b in kept),
        )

    def add_voters(
        self,
        ballots: Iterable[PreferenceOrder | Sequence[int]],
        names: Sequence[str] | None = None,
    ) -> "Election":
        """Return the election extended by fresh voters casting ``ballots``."""
        new_ballots = [
            b if isinstance(b, PreferenceOrder) else PreferenceOrder(tuple(b))
            for b in ballots
        ]
        if names is None:
            taken = set(self.voters)
            names = []
            counter = itertools.count(self.n + 1)
            while len(names) < len(new_ballots):
                candidate_name = f"v{next(counter)}"
                if candidate_name not in taken:
                    names.append(candidate_name)
        return Election(
            self.candidates,
            self.voters + tuple(names),
            self.profile + tuple(new_ballots),
        )


@dataclass(frozen=True)
class PairwiseTally:
    """counts[a][b] is the number of voters preferring candidate a to b."""

    counts: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self) -> None:
        m = len(self.counts)
        for a in range(m):
            if len(self.counts[a]) != m:
                raise ValueError("tally must be square")
            if self.counts[a][a] != 0:
                raise ValueError("tally diagonal must be zero")
            for b in range(m):
                if a != b and self.counts[a][b] + self.counts[b][a] != self.n:
                    raise ValueError("opposed cells must sum to the voter count")
                if self.counts[a][b] < 0:
                    raise ValueError("tally cells must be non-negative")

    @property
    def m(self) -> int:
        return len(self.counts)

    def support(self, a: int, b: int) -> int:
        return self.counts[a][b]


def pairwise_tally(e: Election) -> PairwiseTally:
    """Count, for every ordered candidate pair, the voters preferring the first."""
    m = e.m
    counts = [[0] * m for _ in range(m)]
    # Identical ballots contribute identically, so tally per distinct ballot.
    weights: dict[tuple[int, ...], int] = {}
    for ballot in e.profile:
        weights[ballot.ranking] = weights.get(ballot.ranking, 0) + 1
    for ranking, w in weights.items():
        for i in range(m):
            winner = ranking[i]
            for j in range(i + 1, m):
                counts[winner][ranking[j]] += w
    return PairwiseTally(tuple(tuple(row) for row in counts), e.n)


def tally_condorcet_winner(tally: PairwiseTally) -> int | None:
    """Index of the candidate beating every rival by strict majority, if any."""
    winner = None
    threshold = tally.n  # support(a, b) > n/2 iff 2 * support > n
    for a in range(tally.m):
        if all(2 * tally.counts[a][b] > threshold for b in range(tally.m) if b != a):
            # Two winners would have to beat each other, so at most one exists.
            assert winner is None
            winner = a
    return winner


def condorcet_winner(e: Election) -> Candidate | None:
    """The candidate preferred to every rival by a strict majority, if one exists.

    With no voters there is no strict majority over anything, so the answer
    is None; with a single candidate the condition is vacuous and that
    candidate wins as soon as one voter exists.
    """
    if e.n == 0:
        return None
    idx = tally_condorcet_winner(pairwise_tally(e))
    return None if idx is None else e.candidates[idx]


def is_consensus(e: Election) -> bool:
    """True when the election has at least one voter and a Condorcet winner."""
    return e.n >= 1 and condorcet_winner(e) is not None
