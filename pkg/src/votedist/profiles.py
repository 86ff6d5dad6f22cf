"""Plain-text election profiles.

The format is line-oriented::

    # optional comments anywhere
    4
    a b c d
    2: a > b > c > d
    1: d > c > b > a

First significant line: the number of candidates.  Second: that many
whitespace-separated candidate names.  Every further line is a ballot with a
positive multiplier.  Voter identities are positional: parsing assigns
``v1..vn`` in line order, expanding multiplicities, so serializing and
re-parsing reproduces an election exactly when its voters already carry the
positional names.
"""

from __future__ import annotations

import itertools

from .core import Candidate, Election, PreferenceOrder


class ProfileParseError(ValueError):
    """Raised for malformed profile files, with a line number."""


def parse_profile(text: str) -> Election:
    lines = [
        (lineno, line.strip())
        for lineno, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if len(lines) < 2:
        raise ProfileParseError("profile needs a candidate count and a name line")
    lineno, head = lines[0]
    try:
        m = int(head)
    except ValueError:
        raise ProfileParseError(f"line {lineno}: candidate count must be an integer") from None
    if m < 1:
        raise ProfileParseError(f"line {lineno}: need at least one candidate")
    lineno, name_line = lines[1]
    names = name_line.split()
    if len(names) != m:
        raise ProfileParseError(f"line {lineno}: expected {m} candidate names, got {len(names)}")
    if len(set(names)) != m:
        raise ProfileParseError(f"line {lineno}: duplicate candidate name")
    index = {name: i for i, name in enumerate(names)}

    ballots: list[tuple[int, ...]] = []
    for lineno, line in lines[2:]:
        head, sep, tail = line.partition(":")
        if not sep:
            raise ProfileParseError(f"line {lineno}: ballot lines look like 'count: a > b'")
        try:
            count = int(head.strip())
        except ValueError:
            raise ProfileParseError(f"line {lineno}: ballot count must be an integer") from None
        if count < 1:
            raise ProfileParseError(f"line {lineno}: ballot count must be positive")
        entries = [token.strip() for token in tail.split(">")]
        if sorted(entries) != sorted(names):
            raise ProfileParseError(
                f"line {lineno}: ballot must rank every candidate exactly once"
            )
        ranking = tuple(index[token] for token in entries)
        ballots.extend([ranking] * count)

    voters = tuple(f"v{i + 1}" for i in range(len(ballots)))
    try:
        candidates = tuple(Candidate(i, name) for i, name in enumerate(names))
        return Election(candidates, voters, tuple(PreferenceOrder(r) for r in ballots))
    except ValueError as exc:
        raise ProfileParseError(str(exc)) from None


def serialize_profile(e: Election, comments: tuple[str, ...] = ()) -> str:
    """Render an election in the profile format, byte-stable.

    Consecutive identical ballots collapse into one counted line, which
    keeps ballot order (and so the positional voter identities) intact.
    """
    out = [f"# {comment}" for comment in comments]
    out.append(str(e.m))
    out.append(" ".join(e.candidate_names))
    for ranking, group in itertools.groupby(ballot.ranking for ballot in e.profile):
        row = " > ".join(e.candidate_names[i] for i in ranking)
        out.append(f"{sum(1 for _ in group)}: {row}")
    return "\n".join(out) + "\n"
