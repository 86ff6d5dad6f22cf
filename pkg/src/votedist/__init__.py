"""Voting rules as closest-consensus search.

The package models elections with explicit voter identities, measures
distances between elections, scores candidates by the smallest repair that
makes them Condorcet winners, exposes the voting rules those scores induce,
and ships an executable vertex-cover reduction showing that the
replacement score is NP-hard to compute.
"""

from .core import (
    Candidate,
    Election,
    PairwiseTally,
    PreferenceOrder,
    condorcet_winner,
    is_consensus,
    pairwise_tally,
    tally_condorcet_winner,
)
from .distances import (
    INFINITY,
    ElectionMetric,
    Value,
    VoterDistanceKind,
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
    swap_distance,
    votewise_distance,
)
from .fixtures import FIXTURES, separating_example
from .oracle import InconclusiveSearch, dr_score_oracle, dr_winners_oracle
from .profiles import ProfileParseError, parse_profile, serialize_profile
from .reduction import (
    GraphParseError,
    ReductionElection,
    ReductionReport,
    RestrictedVcInstance,
    VcInstance,
    build_election,
    parse_dimacs,
    restrict,
    vc_exact,
    verify_reduction,
)
from .rules import (
    WinnerSet,
    condorcet_rule,
    dodgson_winners,
    maximin_winners,
    plurality_winners,
    replacement_winners,
    young_winners,
)
from .scores import (
    ScoreKind,
    ScoreTable,
    deletion_score,
    dodgson_score,
    insertion_score,
    maximin_score,
    replacement_deficits,
    replacement_score,
    score_table,
)

__version__ = "0.1.0"

__all__ = [
    "Candidate",
    "Election",
    "ElectionMetric",
    "FIXTURES",
    "GraphParseError",
    "INFINITY",
    "InconclusiveSearch",
    "PairwiseTally",
    "PreferenceOrder",
    "ProfileParseError",
    "ReductionElection",
    "ReductionReport",
    "RestrictedVcInstance",
    "ScoreKind",
    "ScoreTable",
    "Value",
    "VcInstance",
    "VoterDistanceKind",
    "WinnerSet",
    "build_election",
    "condorcet_rule",
    "condorcet_winner",
    "deletion_distance",
    "deletion_quasidistance",
    "deletion_score",
    "deletion_step_cost",
    "discrete_distance",
    "dodgson_score",
    "dodgson_winners",
    "dr_score_oracle",
    "dr_winners_oracle",
    "election_distance",
    "hamming_distance",
    "insertion_distance",
    "insertion_quasidistance",
    "insertion_score",
    "is_consensus",
    "is_finite",
    "lifted_swap_distance",
    "maximin_score",
    "maximin_winners",
    "pairwise_tally",
    "parse_dimacs",
    "parse_profile",
    "plurality_winners",
    "replacement_deficits",
    "replacement_score",
    "replacement_winners",
    "restrict",
    "score_table",
    "separating_example",
    "serialize_profile",
    "swap_distance",
    "tally_condorcet_winner",
    "vc_exact",
    "verify_reduction",
    "votewise_distance",
    "young_winners",
]
