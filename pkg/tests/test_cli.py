"""End-to-end tests for the command-line interface."""

from __future__ import annotations

import pytest

from votedist import separating_example, serialize_profile
from votedist.cli import main

EXAMPLE = serialize_profile(separating_example())
SMALL = "3\na b c\n2: a > b > c\n1: b > c > a\n"
CYCLE = "3\na b c\n1: a > b > c\n1: b > c > a\n1: c > a > b\n"
TRIANGLE = "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"


@pytest.fixture
def profile(tmp_path):
    def write(text: str, name: str = "in.profile") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


class TestWinners:
    def test_plurality(self, profile, capsys):
        assert main(["winners", "plurality", profile(SMALL)]) == 0
        assert capsys.readouterr().out == "a\n"

    def test_condorcet_empty_output(self, profile, capsys):
        assert main(["winners", "condorcet", profile(CYCLE)]) == 0
        assert capsys.readouterr().out == ""

    def test_example_winner_split(self, profile, capsys):
        path = profile(EXAMPLE)
        assert main(["winners", "young", path]) == 0
        assert capsys.readouterr().out == "b\n"
        assert main(["winners", "replacement", path]) == 0
        assert capsys.readouterr().out == "a\n"

    def test_unknown_rule_is_input_error(self, profile, capsys):
        assert main(["winners", "borda", profile(SMALL)]) == 1
        assert "error" in capsys.readouterr().err

    def test_missing_file_is_input_error(self, capsys):
        assert main(["winners", "plurality", "/no/such/file"]) == 1
        assert "error" in capsys.readouterr().err

    def test_malformed_profile_is_input_error(self, profile, capsys):
        assert main(["winners", "plurality", profile("2\na b\n1: a > a\n")]) == 1
        assert "error" in capsys.readouterr().err


class TestScore:
    def test_full_table(self, profile, capsys):
        assert main(["score", "maximin", profile(EXAMPLE)]) == 0
        assert capsys.readouterr().out == "a\t13\nb\t11\nc\t10\nd\t9\n"

    def test_single_candidate(self, profile, capsys):
        assert main(["score", "dodgson", profile(EXAMPLE), "c"]) == 0
        assert capsys.readouterr().out == "c\t5\n"

    def test_deletion_prints_inf(self, profile, capsys):
        assert main(["score", "deletion", profile("2\na b\n2: b > a\n")]) == 0
        assert capsys.readouterr().out == "a\tinf\nb\t0\n"

    def test_unknown_candidate_is_input_error(self, profile, capsys):
        assert main(["score", "maximin", profile(SMALL), "zz"]) == 1
        assert "error" in capsys.readouterr().err


class TestDistance:
    def test_hamming(self, profile, capsys):
        a = profile("2\na b\n2: a > b\n", "a.profile")
        b = profile("2\na b\n1: a > b\n1: b > a\n", "b.profile")
        assert main(["distance", "hamming", a, b]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_deletion_fraction(self, profile, capsys):
        a = profile("2\na b\n2: a > b\n", "a.profile")
        b = profile("2\na b\n1: a > b\n", "b.profile")
        assert main(["distance", "deletion", a, b]) == 0
        assert capsys.readouterr().out == "11/6\n"

    def test_infinite_distance(self, profile, capsys):
        a = profile("2\na b\n1: a > b\n", "a.profile")
        b = profile("2\na b\n1: b > a\n", "b.profile")
        assert main(["distance", "insertion", a, b]) == 0
        assert capsys.readouterr().out == "inf\n"

    def test_unknown_metric_is_input_error(self, profile, capsys):
        a = profile(SMALL)
        assert main(["distance", "euclid", a, a]) == 1
        assert capsys.readouterr().err


class TestRationalize:
    def test_swap_matches_dodgson(self, profile, capsys):
        assert main(["rationalize", "swap", profile(SMALL)]) == 0
        assert capsys.readouterr().out == "a\n"

    def test_budget_too_small_is_inconclusive(self, profile, capsys):
        assert main(["rationalize", "insertion", profile("2\na b\n2: b > a\n"),
                     "--budget", "0"]) == 2
        assert capsys.readouterr().out == "inconclusive\n"

    def test_profile_space_too_big_is_inconclusive(self, profile, capsys):
        big = "3\na b c\n10: a > b > c\n"
        assert main(["rationalize", "swap", profile(big)]) == 2
        assert capsys.readouterr().out == "inconclusive\n"


class TestReduce:
    def test_reduce_prints_parseable_profile(self, profile, capsys, tmp_path):
        graph = tmp_path / "g.col"
        graph.write_text(TRIANGLE, encoding="utf-8")
        assert main(["reduce", str(graph), "2"]) == 0
        out = capsys.readouterr().out
        assert "# vertex cover instance: 3 vertices, 3 edges, budget 2" in out
        assert "# minimum cover of the padded instance: 3 (within budget)" in out
        from votedist import parse_profile

        e = parse_profile(out)
        assert e.candidate_names[-5:] == ("a", "b", "c", "p", "z")

    def test_reduce_verify_flag(self, profile, capsys, tmp_path):
        graph = tmp_path / "g.col"
        graph.write_text(TRIANGLE, encoding="utf-8")
        assert main(["reduce", str(graph), "1", "--verify"]) == 0
        out = capsys.readouterr().out
        assert "# all checks passed" in out
        assert "# expected answer: no" in out

    def test_reduce_bad_graph_is_input_error(self, capsys, tmp_path):
        graph = tmp_path / "g.col"
        graph.write_text("p edge 2 1\ne 1 5\n", encoding="utf-8")
        assert main(["reduce", str(graph), "1"]) == 1
        assert "error" in capsys.readouterr().err


class TestFixture:
    def test_fixture_output_round_trips(self, capsys):
        assert main(["fixture", "thm35"]) == 0
        assert capsys.readouterr().out == EXAMPLE

    def test_fixture_matches_shipped_file(self, capsys):
        import pathlib

        shipped = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
        text = (shipped / "thm35.profile").read_text(encoding="utf-8")
        assert main(["fixture", "thm35"]) == 0
        assert capsys.readouterr().out == text

    def test_unknown_fixture_is_input_error(self, capsys):
        assert main(["fixture", "nope"]) == 1
        assert "unknown fixture" in capsys.readouterr().err


class TestParserBasics:
    def test_help_exits_zero(self, capsys):
        assert main(["-h"]) == 0
        assert "votedist" in capsys.readouterr().out

    def test_no_command_is_input_error(self, capsys):
        assert main([]) == 1

    def test_entry_point_installed(self):
        import shutil

        assert shutil.which("votedist") is not None
