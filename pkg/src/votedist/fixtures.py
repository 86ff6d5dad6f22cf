"""Built-in example elections, keyed by the CLI fixture token."""

from __future__ import annotations

from .core import Election


def separating_example() -> Election:
    """A 29-voter, 4-candidate election where the repair rules disagree.

    Candidate a needs only 3 ballot rewrites to win but at least 12 voter
    removals; candidate b needs 8 removals but more rewrites than a.  The
    rewrite-based rule therefore elects a while the removal-based rule
    elects b, and plurality picks yet another set.
    """
    ballots = (
        [["a", "b", "c", "d"]] * 2
        + [["a", "c", "d", "b"]] * 2
        + [["a", "b", "d", "c"]] * 1
        + [["b", "c", "a", "d"]] * 8
        + [["c", "d", "a", "b"]] * 8
        + [["d", "b", "a", "c"]] * 8
    )
    return Election.from_names(["a", "b", "c", "d"], ballots)


FIXTURES = {
    "thm35": separating_example,
}
