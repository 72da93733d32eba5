"""
Heuristic control solver
Trivial-case checks, voter/candidate preordering and depth-first search over
bounded sublists, aborted at a wall-clock deadline
"""

import logging
import math
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..control.conditions import (
    LevelMode, condition1, condition4_decide, condition_levels, destructive_majority_guard,
)
from ..control.problems import empty_action, goal_satisfied
from ..models.config_models import SolverConfig
from ..models.control_models import (
    ACTION_FOR_FAMILY, ControlAction, ControlFamily, ControlInstance, ControlType,
    Outcome, Verdict,
)
from ..models.election_models import Election, VotingRule
from ..utils.error_handling import ConfigurationError
from ..utils.monitoring import track_solve

logger = logging.getLogger('control_lab.solver')


class ControlSolverInterface(ABC):
    """Anything that decides control instances"""

    @abstractmethod
    def decide(self, instance: ControlInstance) -> Optional[bool]:
        """True for YES, False for NO, None when undecided (timeout)"""
        pass


class TrivialCheck(Enum):
    """Checks that may decide an instance before search"""
    CONDITION1 = "condition1"
    CONDITION2 = "condition2"
    CONDITION3 = "condition3"
    CONDITION4 = "condition4"
    MAJORITY_GUARD = "majority_guard"


class OrderTarget(Enum):
    VOTERS = "voters"
    POOL_VOTERS = "pool_voters"
    CANDIDATES = "candidates"
    NONE = "none"


class OrderDirection(Enum):
    """Ascending puts the entries worst for the distinguished candidate first"""
    ASCENDING = "ascending"
    DESCENDING = "descending"
    NONE = "none"


class ActionSpace(Enum):
    VOTER_SUBLISTS = "voter_sublists"
    POOL_SUBLISTS = "pool_sublists"
    CANDIDATE_SUBSETS = "candidate_subsets"
    VOTER_PARTITIONS = "voter_partitions"
    CANDIDATE_PARTITIONS = "candidate_partitions"


@dataclass(frozen=True)
class SearchPlan:
    """How one control type is searched"""
    checks: Tuple[TrivialCheck, ...]
    order_target: OrderTarget
    order_direction: OrderDirection
    action_space: ActionSpace


_ASC, _DESC, _NO_ORDER = OrderDirection.ASCENDING, OrderDirection.DESCENDING, OrderDirection.NONE

# (family, constructive) -> (checks, order target, direction, action space)
_PLANS = {
    (ControlFamily.DV, True): ((TrivialCheck.CONDITION1, TrivialCheck.CONDITION2),
                               OrderTarget.VOTERS, _ASC, ActionSpace.VOTER_SUBLISTS),
    (ControlFamily.DV, False): ((), OrderTarget.VOTERS, _DESC, ActionSpace.VOTER_SUBLISTS),
    (ControlFamily.AV, True): ((TrivialCheck.CONDITION1, TrivialCheck.CONDITION3),
                               OrderTarget.POOL_VOTERS, _DESC, ActionSpace.POOL_SUBLISTS),
    (ControlFamily.AV, False): ((), OrderTarget.POOL_VOTERS, _ASC, ActionSpace.POOL_SUBLISTS),
    (ControlFamily.PV, True): ((TrivialCheck.CONDITION4, TrivialCheck.CONDITION1),
                               OrderTarget.VOTERS, _DESC, ActionSpace.VOTER_PARTITIONS),
    (ControlFamily.PV, False): ((TrivialCheck.CONDITION4,),
                                OrderTarget.NONE, _NO_ORDER, ActionSpace.VOTER_PARTITIONS),
    (ControlFamily.DC, True): ((TrivialCheck.CONDITION1,),
                               OrderTarget.CANDIDATES, _DESC, ActionSpace.CANDIDATE_SUBSETS),
    (ControlFamily.DC, False): ((TrivialCheck.MAJORITY_GUARD,),
                                OrderTarget.CANDIDATES, _ASC, ActionSpace.CANDIDATE_SUBSETS),
    (ControlFamily.AC, True): ((TrivialCheck.CONDITION1,),
                               OrderTarget.CANDIDATES, _ASC, ActionSpace.CANDIDATE_SUBSETS),
    (ControlFamily.AC, False): ((TrivialCheck.MAJORITY_GUARD,),
                                OrderTarget.CANDIDATES, _DESC, ActionSpace.CANDIDATE_SUBSETS),
    (ControlFamily.PC, True): ((), OrderTarget.CANDIDATES, _ASC, ActionSpace.CANDIDATE_PARTITIONS),
    (ControlFamily.PC, False): ((TrivialCheck.MAJORITY_GUARD,),
                                OrderTarget.CANDIDATES, _DESC, ActionSpace.CANDIDATE_PARTITIONS),
    (ControlFamily.ROPC, True): ((), OrderTarget.CANDIDATES, _ASC, ActionSpace.CANDIDATE_PARTITIONS),
    (ControlFamily.ROPC, False): ((TrivialCheck.MAJORITY_GUARD,),
                                  OrderTarget.CANDIDATES, _DESC, ActionSpace.CANDIDATE_PARTITIONS),
}

_LEVEL_CHECKS = (TrivialCheck.CONDITION2, TrivialCheck.CONDITION3)


def build_plan(control: ControlType, rule: VotingRule) -> SearchPlan:
    """Search plan for a control type; plurality skips the level conditions"""
    checks, target, direction, space = _PLANS[(control.family, control.is_constructive)]
    if rule is VotingRule.PLURALITY:
        checks = tuple(check for check in checks if check not in _LEVEL_CHECKS)
    return SearchPlan(checks, target, direction, space)


class Deadline:
    """Wall-clock budget of one solve call"""

    def __init__(self, budget_secs: float, clock: Callable[[], float] = time.perf_counter):
        if not budget_secs > 0:
            raise ConfigurationError(f"Deadline must be positive, got {budget_secs}",
                                     config_key="timeout_secs")
        self.budget_secs = budget_secs
        self._clock = clock
        self._expires_at = clock() + budget_secs

    @classmethod
    def unlimited(cls) -> "Deadline":
        return cls(math.inf)

    def expired(self) -> bool:
        return self._clock() >= self._expires_at


def _stable_order(keys: np.ndarray, direction: OrderDirection) -> List[int]:
    if direction is OrderDirection.ASCENDING:
        return np.argsort(-keys, kind='stable').tolist()
    if direction is OrderDirection.DESCENDING:
        return np.argsort(keys, kind='stable').tolist()
    return list(range(len(keys)))


def preorder_voters(election: Election, candidate: int, direction: OrderDirection) -> List[int]:
    """
    Vote indices ordered by the candidate's position.

    Ascending starts with the voters placing the candidate worst (a fallback
    disapproval counts as position m), descending with those placing it best.
    Ties keep the original order.
    """
    rank = np.minimum(election.positions[:, candidate], election.m)
    return _stable_order(rank, direction)


def preorder_candidates(
    election: Election,
    candidate: int,
    direction: OrderDirection,
    among: Optional[Sequence[int]] = None,
) -> List[int]:
    """
    Candidates other than ``candidate`` ordered by how many voters place them
    strictly before it; descending puts the most frequent first. ``among``
    restricts the ordering to a subset (e.g. the spoiler candidates).
    """
    pool = [d for d in (among if among is not None else election.candidate_list) if d != candidate]
    positions = election.positions
    ahead = (positions[:, pool] < positions[:, [candidate]]).sum(axis=0)
    if direction is OrderDirection.ASCENDING:
        order = np.argsort(ahead, kind='stable').tolist()
    elif direction is OrderDirection.DESCENDING:
        order = np.argsort(-ahead, kind='stable').tolist()
    else:
        return pool
    return [pool[i] for i in order]


def bounded_sublists(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """
    Nonempty strictly increasing index lists of length at most ``k`` over
    ``range(n)``, in depth-first order: (0), (0,1), (0,1,2), ..., (0,2), ...
    """
    path: List[int] = []
    nxt = 0
    while True:
        if nxt < n and len(path) < k:
            path.append(nxt)
            yield tuple(path)
            nxt += 1
        elif path:
            nxt = path.pop() + 1
        else:
            return


class HeuristicSolver(ControlSolverInterface):
    """Depth-first control solver with trivial-case pruning and a deadline"""

    def __init__(self, settings: Optional[SolverConfig] = None):
        self.settings = settings or SolverConfig()

    @classmethod
    def from_settings(cls, timeout_secs: float, use_preorder: bool = True,
                      use_conditions: bool = True) -> "HeuristicSolver":
        return cls(SolverConfig(timeout_secs=timeout_secs, use_preorder=use_preorder,
                                use_conditions=use_conditions))

    def decide(self, instance: ControlInstance) -> Optional[bool]:
        verdict = self.solve(instance).verdict
        return None if verdict is Verdict.TIMEOUT else verdict is Verdict.YES

    def solve(self, instance: ControlInstance, deadline: Optional[Deadline] = None) -> Outcome:
        """
        Decide a control instance.

        Returns:
            YES with the first witness found, NO after exhausting the search
            or from a trivial check, TIMEOUT when the deadline passes first

        Raises:
            InstanceError: malformed instance
        """
        instance.validate()
        if deadline is None:
            deadline = Deadline(self.settings.timeout_secs)

        with track_solve() as timer:
            outcome = self._search(instance, deadline)
        outcome = replace(outcome, elapsed_ms=timer.elapsed_ms)

        if outcome.verdict is Verdict.TIMEOUT:
            logger.warning(f"{instance.control.name}: timed out after {outcome.nodes} actions "
                           f"({outcome.elapsed_ms:.1f} ms)")
        else:
            logger.debug(f"{instance.control.name}: {outcome.to_line()}")
        return outcome

    def _search(self, instance: ControlInstance, deadline: Deadline) -> Outcome:
        plan = build_plan(instance.control, instance.rule)
        if self.settings.use_conditions:
            forced = self._run_checks(plan, instance)
            if forced is not None:
                return forced

        nodes = 0
        for action in self._actions(plan, instance):
            if deadline.expired():
                return Outcome(Verdict.TIMEOUT, nodes=nodes)
            nodes += 1
            if goal_satisfied(instance, action, check=False):
                return Outcome(Verdict.YES, action, nodes=nodes)
        return Outcome(Verdict.NO, nodes=nodes)

    def _run_checks(self, plan: SearchPlan, instance: ControlInstance) -> Optional[Outcome]:
        for check in plan.checks:
            if check is TrivialCheck.CONDITION4:
                forced = condition4_decide(instance)
                if forced is not None:
                    return forced
                continue
            if check is TrivialCheck.CONDITION1:
                fired = condition1(instance)
            elif check is TrivialCheck.CONDITION2:
                fired = condition_levels(instance, LevelMode.DELETE)
            elif check is TrivialCheck.CONDITION3:
                fired = condition_levels(instance, LevelMode.ADD)
            else:
                fired = destructive_majority_guard(instance)
            if fired:
                logger.debug(f"{instance.control.name}: decided NO by {check.value}")
                return Outcome(Verdict.NO, forced_by=check.value)
        return None

    def _direction(self, plan: SearchPlan) -> OrderDirection:
        return plan.order_direction if self.settings.use_preorder else OrderDirection.NONE

    def _actions(self, plan: SearchPlan, instance: ControlInstance) -> Iterator[ControlAction]:
        """The empty action first, then the plan's action space in search order"""
        yield empty_action(instance)

        kind = ACTION_FOR_FAMILY[instance.control.family]
        c = instance.distinguished
        direction = self._direction(plan)
        space = plan.action_space

        if space in (ActionSpace.VOTER_SUBLISTS, ActionSpace.VOTER_PARTITIONS):
            order = preorder_voters(instance.election, c, direction)
            depth = instance.k if space is ActionSpace.VOTER_SUBLISTS else instance.election.n // 2
        elif space is ActionSpace.POOL_SUBLISTS:
            order = preorder_voters(instance.pool_election, c, direction)
            depth = instance.k
        elif space is ActionSpace.CANDIDATE_SUBSETS:
            if instance.control.family is ControlFamily.AC:
                order = preorder_candidates(instance.extended_election, c, direction,
                                            among=sorted(instance.pool_candidates))
            else:
                order = preorder_candidates(instance.election, c, direction)
            depth = instance.k
        else:
            yield from self._partition_actions(instance, direction)
            return

        for picked in bounded_sublists(len(order), depth):
            yield ControlAction.of(kind, (order[i] for i in picked))

    def _partition_actions(self, instance: ControlInstance,
                           direction: OrderDirection) -> Iterator[ControlAction]:
        """
        Candidate partitions with the distinguished candidate pinned to one
        cell (C2 when constructive, C1 when destructive) and the rivals
        filled into that cell in preorder. Without a runoff the cells are not
        interchangeable, so a second pass pins the candidate to the other cell.
        """
        kind = ACTION_FOR_FAMILY[instance.control.family]
        c = instance.distinguished
        candidates = instance.election.candidates
        rivals = preorder_candidates(instance.election, c, direction)
        pinned_first = not instance.control.is_constructive

        passes = [pinned_first]
        if instance.control.family is ControlFamily.PC:
            passes.append(not pinned_first)

        for in_first_cell in passes:
            for picked in _with_empty(bounded_sublists(len(rivals), len(rivals))):
                pinned = {c}.union(rivals[i] for i in picked)
                first = pinned if in_first_cell else candidates - pinned
                yield ControlAction.of(kind, first)


def _with_empty(stream: Iterator[Tuple[int, ...]]) -> Iterator[Tuple[int, ...]]:
    yield ()
    yield from stream
