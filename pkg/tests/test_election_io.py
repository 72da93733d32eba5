"""
Tests for the election and control-instance text formats
"""

import pytest

from src.models.control_models import ControlFamily, TieRule
from src.models.election_models import VotingRule
from src.models.response_models import ErrorCode
from src.utils.error_handling import FormatError
from src.voting.election_io import (
    format_election, format_instance, parse_election, parse_instance,
    read_instance, write_instance,
)

from .factories import ac_instance, election, instance


class TestParseElection:

    def test_bucklin_block(self):
        e = parse_election("rule=bucklin\n3 2\n0 1 2\n2 1 0\n")
        assert e.rule is VotingRule.BUCKLIN
        assert e.candidates == {0, 1, 2}
        assert e.votes == ((0, 1, 2), (2, 1, 0))

    def test_blank_fallback_line_is_an_empty_ballot(self):
        e = parse_election("rule=fallback\n2 3\n0\n\n1 0\n")
        assert e.votes == ((0,), (), (1, 0))

    def test_format_then_parse(self):
        e = election(VotingRule.FALLBACK, 3, [(2, 0), ()])
        text = format_election(e)
        assert text == "rule=fallback\n3 2\n2 0\n\n"
        assert parse_election(text) == e

    @pytest.mark.parametrize("text, line", [
        ("rule=borda\n2 1\n0 1\n", 1),
        ("rule=bucklin\n2\n0 1\n", 2),
        ("rule=bucklin\n2 2\n0 1\n1 x\n", 4),
        ("rule=bucklin\n2 3\n0 1\n1 0\n", 5),
    ])
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(FormatError) as excinfo:
            parse_election(text)
        assert excinfo.value.line_number == line
        assert excinfo.value.message.startswith(f"line {line}:")
        assert excinfo.value.error_code is ErrorCode.PARSE_FAILED

    def test_partial_ranking_rejected_for_bucklin(self):
        with pytest.raises(FormatError):
            parse_election("rule=bucklin\n3 1\n0 1\n")

    def test_unknown_candidate_rejected(self):
        with pytest.raises(FormatError):
            parse_election("rule=fallback\n2 1\n0 5\n")


class TestParseInstance:

    def test_deleting_voters(self):
        inst = parse_instance("rule=bucklin\n2 2\n0 1\n1 0\ncontrol=CCDV\ntie=-\nc=1\nk=1\n")
        assert inst.control.name == "CCDV"
        assert inst.distinguished == 1
        assert inst.k == 1

    def test_partition_without_budget(self):
        inst = parse_instance("rule=plurality\n2 1\n0 1\ncontrol=DCPV\ntie=TP\nc=0\nk=-\n")
        assert inst.control.family is ControlFamily.PV
        assert inst.control.tie_rule is TieRule.TP
        assert inst.k is None

    def test_tie_suffix_in_control_name(self):
        inst = parse_instance("rule=bucklin\n2 1\n0 1\ncontrol=CCroPC-TE\nc=0\n")
        assert inst.control.name == "CCroPC-TE"

    def test_pool_voters_block(self):
        text = "rule=fallback\n2 1\n0\ncontrol=CCAV\nc=1\nk=1\npool_voters=2\n1\n\n"
        inst = parse_instance(text)
        assert inst.pool_voters == ((1,), ())

    def test_spoiler_candidates(self):
        text = "rule=plurality\n2 2\n2 1 0\n0 1 2\ncontrol=CCAC\nc=0\nk=1\npool_candidates=1\n"
        inst = parse_instance(text)
        assert inst.election.candidates == {0, 1}
        assert inst.election.votes == ((1, 0), (0, 1))
        assert inst.pool_candidates == {2}
        assert inst.extended_election.votes == ((2, 1, 0), (0, 1, 2))

    def test_format_then_parse(self):
        inst = ac_instance("CCAC", VotingRule.BUCKLIN, 2, 2, [(3, 0, 2, 1), (1, 2, 3, 0)], c=0, k=2)
        assert parse_instance(format_instance(inst)) == inst
        av = instance("CCAV", VotingRule.FALLBACK, 3, [(0,), (2, 1)], c=1, k=1, pool_voters=[(1,), ()])
        assert parse_instance(format_instance(av)) == av

    def test_missing_distinguished(self):
        with pytest.raises(FormatError, match="missing 'c='"):
            parse_instance("rule=bucklin\n2 1\n0 1\ncontrol=CCDV\nk=0\n")

    def test_unknown_key(self):
        with pytest.raises(FormatError) as excinfo:
            parse_instance("rule=bucklin\n2 1\n0 1\ncontrol=CCDV\nbudget=3\n")
        assert excinfo.value.line_number == 5

    def test_unsupported_control(self):
        with pytest.raises(FormatError):
            parse_instance("rule=bucklin\n2 1\n0 1\ncontrol=CCAUC\nc=0\nk=0\n")

    def test_budget_above_voter_count(self):
        with pytest.raises(FormatError, match="exceeds"):
            parse_instance("rule=bucklin\n2 1\n0 1\ncontrol=CCDV\nc=0\nk=4\n")

    def test_non_numeric_budget(self):
        with pytest.raises(FormatError, match="invalid number"):
            parse_instance("rule=bucklin\n2 1\n0 1\ncontrol=CCDV\nc=0\nk=two\n")

    def test_truncated_pool(self):
        with pytest.raises(FormatError, match="unexpected end of input"):
            parse_instance("rule=bucklin\n2 1\n0 1\ncontrol=CCAV\nc=0\nk=1\npool_voters=2\n1 0\n")


def test_write_and_read_file(tmp_path):
    inst = instance("DCDC", VotingRule.BUCKLIN, 3, [(0, 1, 2), (2, 0, 1)], c=2, k=1)
    path = tmp_path / "nested" / "instance.txt"
    write_instance(inst, path)
    assert read_instance(path) == inst
