"""
Brute-force oracle
Enumerates every legal action of a small control instance; ground truth for
the heuristic solver and the trivial-case conditions
"""

import logging
from itertools import chain, combinations
from math import comb
from typing import Iterator, Optional

from ..control.problems import goal_satisfied
from ..models.config_models import OracleConfig
from ..models.control_models import (
    ACTION_FOR_FAMILY, ControlAction, ControlFamily, ControlInstance, OracleVerdict,
)
from ..utils.error_handling import OracleLimitError
from .heuristic_solver import ControlSolverInterface

logger = logging.getLogger('control_lab.oracle')


def _subsets(items, max_size: int):
    return chain.from_iterable(combinations(items, size) for size in range(max_size + 1))


def action_space_size(inst: ControlInstance) -> int:
    """Number of actions ``enumerate_actions`` emits"""
    family = inst.control.family
    if family is ControlFamily.PV:
        return 2 ** max(inst.election.n - 1, 0)
    if family is ControlFamily.PC:
        return 2 ** inst.election.m
    if family is ControlFamily.ROPC:
        return 2 ** (inst.election.m - 1)
    return sum(comb(_budget_universe(inst), size) for size in range(inst.k + 1))


def _budget_universe(inst: ControlInstance) -> int:
    family = inst.control.family
    if family is ControlFamily.DV:
        return inst.election.n
    if family is ControlFamily.AV:
        return len(inst.pool_voters)
    if family is ControlFamily.DC:
        return inst.election.m - 1
    return len(inst.pool_candidates)


def enumerate_actions(inst: ControlInstance) -> Iterator[ControlAction]:
    """
    Every legal action exactly once.

    Budgeted controls yield all subsets of size at most k (the empty one
    included). Voter partitions yield each unordered split once, keeping the
    last voter in V2. Runoff candidate partitions are symmetric and yield each
    unordered split once; plain candidate partitions are not, so every C1
    is yielded.
    """
    family = inst.control.family
    kind = ACTION_FOR_FAMILY[family]
    election = inst.election

    if family is ControlFamily.DV:
        members = _subsets(range(election.n), inst.k)
    elif family is ControlFamily.AV:
        members = _subsets(range(len(inst.pool_voters)), inst.k)
    elif family is ControlFamily.DC:
        members = _subsets(inst.rivals, inst.k)
    elif family is ControlFamily.AC:
        members = _subsets(sorted(inst.pool_candidates), inst.k)
    elif family is ControlFamily.PV:
        members = _subsets(range(election.n - 1), max(election.n - 1, 0))
    elif family is ControlFamily.PC:
        members = _subsets(election.candidate_list, election.m)
    else:
        # the largest candidate stays in C2
        members = _subsets(election.candidate_list[:-1], election.m - 1)

    for subset in members:
        yield ControlAction.of(kind, subset)


class BruteForceOracle(ControlSolverInterface):
    """Exhaustive solver guarded by an action-space cap"""

    def __init__(self, settings: Optional[OracleConfig] = None):
        self.settings = settings or OracleConfig()

    def decide(self, instance: ControlInstance) -> Optional[bool]:
        return self.brute_force(instance).yes

    def brute_force(self, instance: ControlInstance) -> OracleVerdict:
        """
        Try every action; YES stops at the first witness.

        Raises:
            OracleLimitError: the action space exceeds the configured cap
            InstanceError: malformed instance
        """
        instance.validate()
        size = action_space_size(instance)
        cap = self.settings.max_actions
        if size > cap:
            raise OracleLimitError(
                f"{instance.control.name} has {size} actions, above the oracle cap of {cap}",
                action_count=size, cap=cap,
            )

        checked = 0
        for action in enumerate_actions(instance):
            checked += 1
            if goal_satisfied(instance, action, check=False):
                logger.debug(f"{instance.control.name}: YES after {checked} actions")
                return OracleVerdict(True, checked, action)
        logger.debug(f"{instance.control.name}: NO after {checked} actions")
        return OracleVerdict(False, checked)


def brute_force(instance: ControlInstance, max_actions: int = OracleConfig.max_actions) -> OracleVerdict:
    """Convenience wrapper around :class:`BruteForceOracle`"""
    return BruteForceOracle(OracleConfig(max_actions=max_actions)).brute_force(instance)
