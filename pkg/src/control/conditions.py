"""
Trivial-case checks that decide a control instance without search
"""

import logging
import math
from enum import Enum
from typing import Optional

import numpy as np

from ..models.control_models import (
    ActionKind, ControlAction, ControlFamily, ControlInstance, Outcome, Verdict,
)
from ..models.election_models import Election, VotingRule
from ..models.response_models import ErrorCode
from ..utils.error_handling import InstanceError
from ..voting.winners import majority_threshold

logger = logging.getLogger('control_lab.conditions')


class LevelMode(Enum):
    """Whether voters are deleted (CCDV) or added (CCAV)"""
    DELETE = "delete"
    ADD = "add"


def _unsupported(message: str):
    raise InstanceError(message, error_code=ErrorCode.UNSUPPORTED_CONTROL)


def _last_everywhere(election: Election, candidate: int) -> bool:
    # last place, or unranked (a fallback disapproval)
    column = election.positions[:, candidate]
    return bool(np.all((column == election.m - 1) | (column == election.universe_size)))


def condition1(inst: ControlInstance) -> bool:
    """
    True when the distinguished candidate is last (or disapproved) in every
    relevant ballot and at least two candidates stay in every reachable
    final election; the instance is then a NO.

    Raises:
        InstanceError: destructive instances and candidate partitions
    """
    control = inst.control
    if not control.is_constructive:
        _unsupported(f"Condition 1 applies to constructive control, not {control.name}")
    if control.family in (ControlFamily.PC, ControlFamily.ROPC):
        _unsupported(f"Condition 1 does not apply to {control.name}")

    if inst.election.m < 2:
        return False
    if control.family is ControlFamily.DC and inst.k > inst.election.m - 2:
        return False

    c = inst.distinguished
    if control.family is ControlFamily.AV:
        relevant = (inst.election, inst.pool_election)
    elif control.family is ControlFamily.AC:
        relevant = (inst.extended_election,)
    else:
        relevant = (inst.election,)
    return all(_last_everywhere(e, c) for e in relevant)


def _first_level(column: np.ndarray, threshold: int) -> float:
    reached = np.flatnonzero(column >= threshold)
    return float(reached[0] + 1) if reached.size else math.inf


def condition_levels(inst: ControlInstance, mode: LevelMode) -> bool:
    """
    Conditions 2 (deleting voters) and 3 (adding voters).

    For every k' in 0..k some rival reaches its adjusted threshold at a level
    strictly below the level where the distinguished candidate can first
    reach its own. True means the instance is a NO.

    Raises:
        InstanceError: plurality instances
    """
    election = inst.election
    if election.rule is VotingRule.PLURALITY:
        _unsupported("Level conditions are defined for Bucklin and fallback voting only")

    n = election.n
    c = inst.distinguished
    scores = election.level_scores
    rivals = list(inst.rivals)
    if not rivals:
        return False

    for spent in range(inst.k + 1):
        if mode is LevelMode.DELETE:
            own_threshold = (n - spent) // 2 + 1
            rival_threshold = (n - spent) // 2 + 1 + spent
        else:
            own_threshold = (n + spent) // 2 + 1 - spent
            rival_threshold = (n + spent) // 2 + 1
        own_level = _first_level(scores[:, c], own_threshold)
        beaten = False
        for rival in rivals:
            rival_level = _first_level(scores[:, rival], rival_threshold)
            if rival_level < math.inf and rival_level <= own_level - 1:
                beaten = True
                break
        if not beaten:
            return False
    return True


def condition4_decide(inst: ControlInstance) -> Optional[Outcome]:
    """
    A strict level-1 majority winner wins every voter partition.

    Returns a forced YES (with the trivial partition) when that winner already
    meets the goal, a forced NO when it defeats the goal, and None when no
    candidate holds a level-1 majority.

    Raises:
        InstanceError: control other than partition of voters
    """
    if inst.control.family is not ControlFamily.PV:
        _unsupported(f"Condition 4 decides partition of voters only, not {inst.control.name}")

    election = inst.election
    if election.n == 0:
        return None
    first_level = election.level_scores[0]
    leaders = np.flatnonzero(
        (first_level >= majority_threshold(election.n)) & election.active_mask
    )
    if leaders.size == 0:
        return None

    leader = int(leaders[0])
    goal_met = (leader == inst.distinguished) == inst.control.is_constructive
    logger.debug(f"{inst.control.name}: candidate {leader} holds a level-1 majority")
    if goal_met:
        return Outcome(Verdict.YES, ControlAction(ActionKind.VOTER_PARTITION), forced_by="condition4")
    return Outcome(Verdict.NO, forced_by="condition4")


def destructive_majority_guard(inst: ControlInstance) -> bool:
    """
    True when the distinguished candidate holds a strict level-1 majority that
    no candidate action can break (destructive candidate control); the
    instance is then a NO. Adding candidates is judged over the ballots on C ∪ D.

    Raises:
        InstanceError: other control types
    """
    control = inst.control
    if control.is_constructive or control.family.is_voter_control:
        _unsupported(f"The majority guard applies to destructive candidate control, not {control.name}")

    election = inst.extended_election if control.family is ControlFamily.AC else inst.election
    if election.n == 0:
        return False
    return int(election.level_scores[0, inst.distinguished]) >= majority_threshold(election.n)
