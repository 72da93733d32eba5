"""
Control problems: replaying actions against instances and checking the chair's goal
"""

from typing import FrozenSet, Iterable, Optional

from ..models.control_models import (
    ACTION_FOR_FAMILY, ActionKind, ControlAction, ControlFamily, ControlInstance, TieRule,
)
from ..models.election_models import Election
from ..models.response_models import ErrorCode
from ..utils.error_handling import InstanceError
from ..voting.election_ops import drop_votes, restrict, select_votes
from ..voting.winners import winners


def final_winners(election: Optional[Election]) -> FrozenSet[int]:
    """Winners of a final election; no candidates or no voters means no winners"""
    if election is None or election.n == 0:
        return frozenset()
    return winners(election).winners


def tie_filtered_winners(election: Optional[Election], tie: TieRule) -> FrozenSet[int]:
    """
    Winners that move on from a subelection.

    Ties promote keeps every winner, ties eliminate keeps a unique winner only.
    An empty cell or a cell without voters moves nobody on.
    """
    found = final_winners(election)
    if tie is TieRule.TE and len(found) != 1:
        return frozenset()
    return found


def _runoff(election: Election, finalists: FrozenSet[int]) -> Optional[Election]:
    if not finalists:
        return None
    return restrict(election, finalists)


def apply_voter_partition(election: Election, first_cell: Iterable[int], tie: TieRule) -> Optional[Election]:
    """
    Two-stage election over a voter partition (V1, V - V1).

    Returns the runoff election over the surviving candidates with the full
    vote list, or None when nobody survives.
    """
    first = sorted(set(first_cell))
    chosen = set(first)
    second = [i for i in range(election.n) if i not in chosen]
    finalists = (
        tie_filtered_winners(select_votes(election, first), tie)
        | tie_filtered_winners(select_votes(election, second), tie)
    )
    return _runoff(election, finalists)


def apply_candidate_partition(
    election: Election,
    first_cell: Iterable[int],
    tie: TieRule,
    runoff: bool,
) -> Optional[Election]:
    """
    Two-stage election over a candidate partition (C1, C - C1).

    Without runoff the C1 winners face all of C2 directly; with runoff both
    cells hold a subelection first. Returns None when no candidate survives.
    """
    first = frozenset(first_cell)
    second = election.candidates - first

    def cell(members: FrozenSet[int]) -> Optional[Election]:
        return restrict(election, members) if members else None

    finalists = tie_filtered_winners(cell(first), tie)
    if runoff:
        finalists |= tie_filtered_winners(cell(second), tie)
    else:
        finalists |= second
    return _runoff(election, finalists)


def _check_action(inst: ControlInstance, action: ControlAction) -> None:
    family = inst.control.family
    expected = ACTION_FOR_FAMILY[family]
    if action.kind is not expected:
        raise InstanceError(f"{inst.control.name} expects {expected.value}, got {action.kind.value}",
                            error_code=ErrorCode.ACTION_MISMATCH)
    members = action.members
    if len(set(members)) != len(members):
        raise InstanceError(f"{action.describe()} repeats a member", error_code=ErrorCode.ACTION_MISMATCH)
    if family.uses_budget and len(members) > inst.k:
        raise InstanceError(f"{action.describe()} exceeds budget k={inst.k}",
                            error_code=ErrorCode.BUDGET_EXCEEDED)

    if family in (ControlFamily.DV, ControlFamily.PV):
        allowed = range(inst.election.n)
    elif family is ControlFamily.AV:
        allowed = range(len(inst.pool_voters))
    elif family is ControlFamily.AC:
        allowed = inst.pool_candidates
    else:
        allowed = inst.election.candidates
    outside = [x for x in members if x not in allowed]
    if outside:
        raise InstanceError(f"{action.describe()} names {outside} outside the instance",
                            error_code=ErrorCode.ACTION_MISMATCH)
    if family is ControlFamily.DC and inst.distinguished in members:
        raise InstanceError("The distinguished candidate cannot be deleted",
                            error_code=ErrorCode.ACTION_MISMATCH)


def apply_action(inst: ControlInstance, action: ControlAction, check: bool = True) -> Optional[Election]:
    """
    The final election an action produces (None when no candidate survives a partition).

    Raises:
        InstanceError: action of the wrong shape, outside the instance or over budget
    """
    if check:
        _check_action(inst, action)
    election = inst.election
    members = action.members
    kind = action.kind

    if kind is ActionKind.DELETE_VOTERS:
        return drop_votes(election, members)
    if kind is ActionKind.ADD_VOTERS:
        n = election.n
        return select_votes(inst.voter_universe, list(range(n)) + [n + i for i in members])
    if kind is ActionKind.DELETE_CANDIDATES:
        return restrict(election, election.candidates - set(members))
    if kind is ActionKind.ADD_CANDIDATES:
        return restrict(inst.extended_election, election.candidates | set(members))
    if kind is ActionKind.VOTER_PARTITION:
        return apply_voter_partition(election, members, inst.control.tie_rule)
    return apply_candidate_partition(
        election, members, inst.control.tie_rule,
        runoff=inst.control.family is ControlFamily.ROPC,
    )


def goal_satisfied(inst: ControlInstance, action: ControlAction, check: bool = True) -> bool:
    """
    Whether ``action`` achieves the chair's goal: the distinguished candidate
    is the unique winner (constructive) or is not (destructive).
    """
    unique = final_winners(apply_action(inst, action, check)) == {inst.distinguished}
    return unique if inst.control.is_constructive else not unique


def empty_action(inst: ControlInstance) -> ControlAction:
    """The do-nothing action of the instance's shape (C1 = ∅ for candidate partitions)"""
    return ControlAction(ACTION_FOR_FAMILY[inst.control.family])
