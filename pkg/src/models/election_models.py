"""
Election models: voting rules, ballots and winner sets
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple

import numpy as np


Vote = Tuple[int, ...]


class VotingRule(Enum):
    """Supported voting rules"""
    BUCKLIN = "bucklin"
    FALLBACK = "fallback"
    PLURALITY = "plurality"

    @property
    def short_name(self) -> str:
        return {"bucklin": "BV", "fallback": "FV", "plurality": "PV"}[self.value]

    @property
    def uses_approval(self) -> bool:
        return self is VotingRule.FALLBACK


@dataclass(frozen=True)
class Election:
    """
    An election over a set of candidate ids and an ordered list of ballots.

    Bucklin and plurality ballots are full rankings of ``candidates``;
    fallback ballots list the approved candidates only, best first.
    Candidate ids are dense integers of a universe that may be larger than
    ``candidates`` (restrictions keep the original ids).
    """
    rule: VotingRule
    candidates: FrozenSet[int]
    votes: Tuple[Vote, ...]

    @property
    def n(self) -> int:
        return len(self.votes)

    @property
    def m(self) -> int:
        return len(self.candidates)

    @cached_property
    def universe_size(self) -> int:
        return max(self.candidates) + 1 if self.candidates else 0

    @cached_property
    def candidate_list(self) -> Tuple[int, ...]:
        return tuple(sorted(self.candidates))

    @cached_property
    def positions(self) -> np.ndarray:
        """
        Matrix of shape (n, universe_size): 0-based rank of each candidate in
        each ballot, ``universe_size`` where the candidate is unranked
        (disapproved or inactive).
        """
        width = self.universe_size
        pos = np.full((self.n, width), width, dtype=np.int64)
        for row, vote in enumerate(self.votes):
            if vote:
                pos[row, list(vote)] = np.arange(len(vote))
        return pos

    @cached_property
    def level_scores(self) -> np.ndarray:
        """
        Matrix of shape (m, universe_size): row ``i - 1`` holds every
        candidate's level-i score.
        """
        width = self.universe_size
        if self.n == 0:
            return np.zeros((self.m, width), dtype=np.int64)
        columns = np.broadcast_to(np.arange(width), self.positions.shape)
        flat = columns * (width + 1) + self.positions
        hist = np.bincount(flat.ravel(), minlength=width * (width + 1))
        cumulative = hist.reshape(width, width + 1).cumsum(axis=1)
        return np.ascontiguousarray(cumulative[:, :self.m].T)

    @cached_property
    def approval_scores(self) -> np.ndarray:
        """Number of ballots ranking/approving each candidate id"""
        return (self.positions < self.universe_size).sum(axis=0)

    @cached_property
    def active_mask(self) -> np.ndarray:
        mask = np.zeros(self.universe_size, dtype=bool)
        mask[list(self.candidates)] = True
        return mask

    def validate(self) -> None:
        """
        Check the ballots against the candidate set.

        Raises:
            ElectionError: when a ballot is malformed
        """
        from ..utils.error_handling import ElectionError
        from .response_models import ErrorCode

        if not self.candidates:
            raise ElectionError("An election needs at least one candidate",
                                error_code=ErrorCode.INVALID_ELECTION)
        if min(self.candidates) < 0:
            raise ElectionError("Candidate ids must be non-negative",
                                error_code=ErrorCode.UNKNOWN_CANDIDATE)
        for index, vote in enumerate(self.votes):
            if len(set(vote)) != len(vote):
                raise ElectionError(f"Vote {index} repeats a candidate",
                                    error_code=ErrorCode.INVALID_ELECTION)
            unknown = set(vote) - self.candidates
            if unknown:
                raise ElectionError(f"Vote {index} names unknown candidates {sorted(unknown)}",
                                    error_code=ErrorCode.UNKNOWN_CANDIDATE)
            if not self.rule.uses_approval and len(vote) != self.m:
                raise ElectionError(f"Vote {index} is not a full ranking of {self.m} candidates",
                                    error_code=ErrorCode.INVALID_ELECTION)

    @classmethod
    def build(
        cls,
        rule: VotingRule,
        candidates: Iterable[int],
        votes: Iterable[Sequence[int]],
    ) -> "Election":
        """Create and validate an election"""
        election = cls(rule, frozenset(candidates), tuple(tuple(v) for v in votes))
        election.validate()
        return election


@dataclass(frozen=True)
class WinnerSet:
    """Winners of an election and, for Bucklin-style rules, the deciding level"""
    winners: FrozenSet[int]
    winning_level: Optional[int] = None

    @property
    def is_unique(self) -> bool:
        return len(self.winners) == 1

    def __contains__(self, candidate: int) -> bool:
        return candidate in self.winners
