"""
Control instance generation with the experiment's budget and pool conventions
"""

import logging
from typing import Optional

import numpy as np

from ..models.control_models import ControlFamily, ControlInstance, ControlType
from ..models.election_models import Election, VotingRule
from ..models.experiment_models import CellKey, DistModel, TrialSeed
from ..voting.election_ops import restrict
from .vote_generators import derive_seed, draw_votes

logger = logging.getLogger('control_lab.generators')


def budget_for(control: ControlType, m: int, n: int) -> Optional[int]:
    """k = floor(n/3), clamped to the spoiler pool (AC) or to m-1 (DC); None for partitions"""
    family = control.family
    if family.is_partition:
        return None
    k = n // 3
    if family is ControlFamily.DC:
        return min(k, m - 1)
    if family is ControlFamily.AC:
        return min(k, m)
    return k


def gen_instance(
    control: ControlType,
    rule: VotingRule,
    dist: DistModel,
    m: int,
    n: int,
    rng: np.random.Generator,
) -> ControlInstance:
    """
    A random control instance over m registered candidates and n voters.

    Adding voters draws a pool of n more ballots from the same model (TM
    shares its two mainstreams). Adding candidates draws ballots over 2m
    candidates, registers 0..m-1 and offers m..2m-1 as spoilers.
    """
    family = control.family
    k = budget_for(control, m, n)

    if family is ControlFamily.AC:
        votes, _ = draw_votes(rule, dist, 2 * m, n, rng)
        extended = Election(rule, frozenset(range(2 * m)), votes)
        registered = restrict(extended, range(m))
        distinguished = int(rng.integers(0, m))
        return ControlInstance(
            control, registered, distinguished, k,
            pool_candidates=frozenset(range(m, 2 * m)),
            extended_election=extended,
        )

    candidates = frozenset(range(m))
    if family is ControlFamily.AV:
        votes, _ = draw_votes(rule, dist, m, 2 * n, rng)
        distinguished = int(rng.integers(0, m))
        return ControlInstance(
            control, Election(rule, candidates, votes[:n]), distinguished, k,
            pool_voters=votes[n:],
        )

    votes, _ = draw_votes(rule, dist, m, n, rng)
    distinguished = int(rng.integers(0, m))
    return ControlInstance(control, Election(rule, candidates, votes), distinguished, k)


class InstanceGenerator:
    """Reproducible instances keyed by master seed, grid cell and trial index"""

    def rng_for(self, seed: TrialSeed) -> np.random.Generator:
        return np.random.default_rng(derive_seed(*seed.parts()))

    def generate(self, seed: TrialSeed) -> ControlInstance:
        cell = seed.cell
        instance = gen_instance(cell.control, cell.rule, cell.dist, cell.m, cell.n, self.rng_for(seed))
        logger.debug(f"{cell.describe()} trial {seed.trial}: c={instance.distinguished} k={instance.k}")
        return instance

    def generate_for(self, master: int, cell: CellKey, trial: int) -> ControlInstance:
        return self.generate(TrialSeed(master, cell, trial))
