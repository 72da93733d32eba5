"""
Winner determination for Bucklin, fallback and plurality voting
"""

from typing import FrozenSet, Optional

import numpy as np

from ..models.election_models import Election, VotingRule, WinnerSet
from ..models.response_models import ErrorCode
from ..utils.error_handling import ElectionError


def majority_threshold(n: int) -> int:
    """Strict majority of ``n`` votes: floor(n/2) + 1"""
    if n < 0:
        raise ElectionError(f"Vote count must be non-negative, got {n}")
    return n // 2 + 1


def level_score(election: Election, candidate: int, level: int) -> int:
    """
    Number of voters ranking ``candidate`` among their top ``level`` positions.

    Fallback ballots only count approved positions.

    Raises:
        ElectionError: unknown candidate or level outside 1..m
    """
    if candidate not in election.candidates:
        raise ElectionError(f"Unknown candidate {candidate}", error_code=ErrorCode.UNKNOWN_CANDIDATE)
    if not 1 <= level <= election.m:
        raise ElectionError(f"Level {level} outside 1..{election.m}", error_code=ErrorCode.INVALID_LEVEL)
    return int(election.level_scores[level - 1, candidate])


def _require_votes(election: Election):
    if election.n == 0:
        raise ElectionError("Winners are undefined for an empty vote list",
                            error_code=ErrorCode.EMPTY_VOTE_LIST)


def _argmax(scores: np.ndarray, mask: np.ndarray) -> FrozenSet[int]:
    masked = np.where(mask, scores, -1)
    return frozenset(np.flatnonzero(masked == masked.max()).tolist())


def _majority_level(election: Election) -> Optional[WinnerSet]:
    """Smallest level where someone reaches a strict majority, with its top scorers"""
    scores = election.level_scores
    reached = (scores >= majority_threshold(election.n)).any(axis=1)
    if not reached.any():
        return None
    index = int(np.argmax(reached))
    return WinnerSet(_argmax(scores[index], election.active_mask), winning_level=index + 1)


def bucklin_winners(election: Election) -> WinnerSet:
    """
    Bucklin winners: at the smallest level where some candidate's level score
    reaches a strict majority, every candidate with the highest level score.
    """
    _require_votes(election)
    result = _majority_level(election)
    if result is None:
        # unreachable for full rankings: every candidate scores n at level m
        raise ElectionError("Ballots are not full rankings", error_code=ErrorCode.INVALID_ELECTION)
    return result


def fallback_winners(election: Election) -> WinnerSet:
    """
    Fallback winners: Bucklin on the approved prefixes; when no level yields a
    strict majority, the candidates with the highest approval score (all
    candidates when nobody is approved).
    """
    _require_votes(election)
    result = _majority_level(election)
    if result is not None:
        return result
    return WinnerSet(_argmax(election.approval_scores, election.active_mask))


def plurality_winners(election: Election) -> WinnerSet:
    """Candidates with the most first places"""
    _require_votes(election)
    return WinnerSet(_argmax(election.level_scores[0], election.active_mask))


_DISPATCH = {
    VotingRule.BUCKLIN: bucklin_winners,
    VotingRule.FALLBACK: fallback_winners,
    VotingRule.PLURALITY: plurality_winners,
}


def winners(election: Election) -> WinnerSet:
    """Winner set under the election's own rule"""
    return _DISPATCH[election.rule](election)


def is_unique_winner(election: Election, candidate: int) -> bool:
    return winners(election).winners == {candidate}
