"""
Tests for winner determination and candidate restriction
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.models.election_models import Election, VotingRule
from src.models.response_models import ErrorCode
from src.utils.error_handling import ElectionError
from src.voting.election_ops import append_votes, drop_votes, restrict, select_votes
from src.voting.winners import (
    bucklin_winners, fallback_winners, is_unique_winner, level_score,
    majority_threshold, plurality_winners, winners,
)

from .factories import election, fallback_elections, ranked_elections

A, B, C, D = 0, 1, 2, 3


class TestMajorityThreshold:

    @pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (4, 3), (5, 3), (128, 65)])
    def test_strict_majority(self, n, expected):
        assert majority_threshold(n) == expected

    def test_negative_count_rejected(self):
        with pytest.raises(ElectionError):
            majority_threshold(-1)


class TestLevelScore:

    def test_single_vote(self):
        e = election(VotingRule.BUCKLIN, 3, [(C, B, A)])
        assert level_score(e, C, 1) == 1
        assert level_score(e, B, 2) == 1
        assert level_score(e, A, 2) == 0

    def test_disapproved_candidate_never_scores(self):
        e = election(VotingRule.FALLBACK, 3, [(C,)])
        assert level_score(e, A, 3) == 0
        assert level_score(e, C, 1) == 1

    def test_unknown_candidate(self):
        e = election(VotingRule.BUCKLIN, 2, [(A, B)])
        with pytest.raises(ElectionError) as excinfo:
            level_score(e, 5, 1)
        assert excinfo.value.error_code is ErrorCode.UNKNOWN_CANDIDATE

    @pytest.mark.parametrize("level", [0, 3])
    def test_level_out_of_range(self, level):
        e = election(VotingRule.BUCKLIN, 2, [(A, B)])
        with pytest.raises(ElectionError) as excinfo:
            level_score(e, A, level)
        assert excinfo.value.error_code is ErrorCode.INVALID_LEVEL

    @given(ranked_elections(max_m=5, max_n=7))
    def test_full_rankings_reach_n_at_level_m(self, e):
        for c in e.candidates:
            assert level_score(e, c, e.m) == e.n

    @given(fallback_elections(max_m=5, max_n=7))
    def test_matches_direct_count_and_is_monotone(self, e):
        for c in e.candidates:
            previous = 0
            for level in range(1, e.m + 1):
                direct = sum(1 for vote in e.votes if c in vote[:level])
                score = level_score(e, c, level)
                assert score == direct
                assert score >= previous
                previous = score


class TestBucklin:

    def test_level_one_majority(self):
        e = election(VotingRule.BUCKLIN, 3, [(A, B, C), (A, C, B), (B, A, C)])
        result = bucklin_winners(e)
        assert result.winners == {A}
        assert result.winning_level == 1

    def test_single_voter(self):
        result = bucklin_winners(election(VotingRule.BUCKLIN, 3, [(A, B, C)]))
        assert result.winners == {A}
        assert result.winning_level == 1

    def test_highest_score_at_winning_level(self):
        # maj = 3; nobody reaches it at level 2, c leads at level 3 with 4
        e = election(VotingRule.BUCKLIN, 4, [(A, B, C, D), (B, A, C, D), (C, D, A, B), (D, C, B, A)])
        result = bucklin_winners(e)
        assert result.winners == {C}
        assert result.winning_level == 3

    def test_tie_at_winning_level(self):
        e = election(VotingRule.BUCKLIN, 3, [(A, B, C), (B, A, C)])
        result = bucklin_winners(e)
        assert result.winners == {A, B}
        assert result.winning_level == 2

    def test_empty_vote_list(self):
        with pytest.raises(ElectionError) as excinfo:
            bucklin_winners(election(VotingRule.BUCKLIN, 3, []))
        assert excinfo.value.error_code is ErrorCode.EMPTY_VOTE_LIST

    @given(ranked_elections(max_m=5, max_n=7))
    def test_always_a_winner_and_level_one_is_unique(self, e):
        result = bucklin_winners(e)
        assert result.winners
        assert result.winners <= e.candidates
        if result.winning_level == 1:
            assert result.is_unique

    @given(ranked_elections(max_m=4, max_n=6), st.randoms(use_true_random=False))
    def test_invariant_under_vote_order(self, e, rnd):
        shuffled = list(e.votes)
        rnd.shuffle(shuffled)
        assert bucklin_winners(Election.build(e.rule, e.candidates, shuffled)) == bucklin_winners(e)


class TestFallback:

    def test_approval_stage(self):
        e = election(VotingRule.FALLBACK, 2, [(A,), (B,), ()])
        result = fallback_winners(e)
        assert result.winners == {A, B}
        assert result.winning_level is None

    def test_majority_level(self):
        result = fallback_winners(election(VotingRule.FALLBACK, 2, [(A,), (A,), (B,)]))
        assert result.winners == {A}
        assert result.winning_level == 1

    def test_nobody_approved_means_everybody_wins(self):
        e = election(VotingRule.FALLBACK, 3, [(), ()])
        assert fallback_winners(e).winners == {A, B, C}
        assert not is_unique_winner(e, A)

    def test_level_two_tie(self):
        e = election(VotingRule.FALLBACK, 3, [(A, B), (B,), (C, A)])
        result = fallback_winners(e)
        assert result.winners == {A, B}
        assert result.winning_level == 2

    @given(ranked_elections(max_m=5, max_n=7))
    def test_full_approval_equals_bucklin(self, e):
        approving = Election.build(VotingRule.FALLBACK, e.candidates, e.votes)
        assert fallback_winners(approving) == bucklin_winners(e)

    def test_empty_vote_list(self):
        with pytest.raises(ElectionError):
            fallback_winners(election(VotingRule.FALLBACK, 2, []))


class TestPlurality:

    def test_most_first_places(self):
        e = election(VotingRule.PLURALITY, 3, [(A, B, C), (A, C, B), (B, A, C)])
        assert plurality_winners(e).winners == {A}
        assert plurality_winners(e).winning_level is None

    def test_tie(self):
        e = election(VotingRule.PLURALITY, 2, [(A, B), (B, A)])
        assert plurality_winners(e).winners == {A, B}
        assert not is_unique_winner(e, A)
        assert not is_unique_winner(e, B)

    def test_single_voter(self):
        assert plurality_winners(election(VotingRule.PLURALITY, 3, [(C, A, B)])).winners == {C}


class TestDispatch:

    def test_rule_dispatch(self, any_rule):
        votes = [(A, B, C)] * 3
        e = election(any_rule, 3, votes)
        assert winners(e).winners == {A}
        assert is_unique_winner(e, A)

    def test_level_one_winner_is_unique(self):
        e = election(VotingRule.BUCKLIN, 3, [(B, A, C), (B, C, A), (A, B, C)])
        assert is_unique_winner(e, B)


class TestRestrict:

    def test_identity(self):
        e = election(VotingRule.BUCKLIN, 3, [(A, B, C), (C, A, B)])
        assert restrict(e, {A, B, C}) is e

    def test_preserves_relative_order(self):
        e = election(VotingRule.BUCKLIN, 3, [(C, B, A)])
        sub = restrict(e, {B, A})
        assert sub.votes == ((B, A),)
        assert sub.candidates == {A, B}

    def test_fallback_vote_may_become_empty(self):
        e = election(VotingRule.FALLBACK, 3, [(C, A), (B,)])
        sub = restrict(e, {B})
        assert sub.votes == ((), (B,))

    def test_keep_must_be_nonempty_subset(self):
        e = election(VotingRule.BUCKLIN, 2, [(A, B)])
        with pytest.raises(ElectionError):
            restrict(e, set())
        with pytest.raises(ElectionError) as excinfo:
            restrict(e, {A, 7})
        assert excinfo.value.error_code is ErrorCode.UNKNOWN_CANDIDATE

    @settings(max_examples=60)
    @given(fallback_elections(max_m=5, max_n=6), st.data())
    def test_matches_filtering_and_composes(self, e, data):
        outer = data.draw(st.sets(st.sampled_from(sorted(e.candidates)), min_size=1))
        inner = data.draw(st.sets(st.sampled_from(sorted(outer)), min_size=1))
        once = restrict(e, outer)
        assert once.votes == tuple(tuple(x for x in vote if x in outer) for vote in e.votes)
        twice = restrict(once, inner)
        direct = restrict(e, inner)
        assert twice.votes == direct.votes
        assert np.array_equal(twice.level_scores, Election.build(e.rule, inner, direct.votes).level_scores)
        assert winners(twice) == winners(direct)

    def test_cached_positions_match_rebuilt_election(self):
        e = election(VotingRule.BUCKLIN, 4, [(D, A, C, B), (B, D, A, C)])
        sub = restrict(e, {A, D})
        rebuilt = Election.build(e.rule, {A, D}, sub.votes)
        assert np.array_equal(sub.positions, rebuilt.positions)


class TestSelectVotes:

    def test_keeps_requested_ballots_in_order(self):
        e = election(VotingRule.BUCKLIN, 2, [(A, B), (B, A), (A, B)])
        sub = select_votes(e, [2, 1])
        assert sub.votes == ((A, B), (B, A))
        assert sub.positions.shape == (2, 2)

    def test_no_ballots(self):
        e = election(VotingRule.BUCKLIN, 2, [(A, B)])
        assert select_votes(e, []).n == 0


class TestVoterSideEdits:

    VOTES = [(A, B, C), (B, C, A), (C, A, B), (A, C, B)]

    def test_split_and_rejoin_restores_the_election(self):
        e = election(VotingRule.BUCKLIN, 3, self.VOTES)
        head = select_votes(e, [0, 1])
        rejoined = append_votes(head, select_votes(e, [2, 3]).votes)
        assert rejoined.votes == e.votes
        assert np.array_equal(rejoined.positions, e.positions)
        assert winners(rejoined) == winners(e)

    def test_append_nothing_is_identity(self):
        e = election(VotingRule.FALLBACK, 3, [(A,), ()])
        assert append_votes(e, []) is e

    def test_appended_ballots_count_towards_the_majority(self):
        e = election(VotingRule.PLURALITY, 2, [(B, A)])
        assert winners(append_votes(e, [(A, B), (A, B)])).winners == {A}

    def test_drop_keeps_the_rest_in_order(self):
        e = election(VotingRule.BUCKLIN, 3, self.VOTES)
        assert drop_votes(e, [0, 2]).votes == ((B, C, A), (A, C, B))
        assert drop_votes(e, range(4)).n == 0
