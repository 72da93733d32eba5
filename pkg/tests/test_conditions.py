"""
Tests for the trivial-case checks, including an exhaustive soundness sweep
against the brute-force oracle on small elections
"""

from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Tuple

import pytest

from src.control.conditions import (
    LevelMode, condition1, condition4_decide, condition_levels, destructive_majority_guard,
)
from src.control.problems import goal_satisfied
from src.models.control_models import (
    ActionKind, ControlFamily, ControlInstance, ControlType, Verdict,
)
from src.models.election_models import VotingRule
from src.models.response_models import ErrorCode
from src.service.oracle import brute_force
from src.utils.error_handling import InstanceError
from src.voting.election_ops import restrict

from .factories import ac_instance, election, instance

A, B, C = 0, 1, 2


class TestCondition1:

    def test_last_everywhere(self):
        votes = [(A, B, C), (B, A, C), (A, B, C), (B, A, C)]
        assert condition1(instance("CCDV", VotingRule.BUCKLIN, 3, votes, c=C, k=1))

    def test_first_somewhere(self):
        votes = [(A, B, C), (C, A, B), (A, B, C)]
        assert not condition1(instance("CCDV", VotingRule.BUCKLIN, 3, votes, c=C, k=1))

    def test_disapproved_in_both_voter_lists(self):
        inst = instance("CCAV", VotingRule.FALLBACK, 3, [(A,), (B, A)], c=C, k=1,
                        pool_voters=[(A, B), ()])
        assert condition1(inst)

    def test_pool_ballot_can_rescue(self):
        inst = instance("CCAV", VotingRule.FALLBACK, 3, [(A,), (B, A)], c=C, k=1,
                        pool_voters=[(C,), ()])
        assert not condition1(inst)

    def test_deleting_all_rivals_is_not_excluded(self):
        votes = [(A, B, C), (B, A, C)]
        assert not condition1(instance("CCDC", VotingRule.BUCKLIN, 3, votes, c=C, k=2))
        assert condition1(instance("CCDC", VotingRule.BUCKLIN, 3, votes, c=C, k=1))

    def test_spoiler_ballots_count(self):
        # c is last among the registered candidates but ahead of the spoiler
        inst = ac_instance("CCAC", VotingRule.BUCKLIN, 2, 1, [(A, B, 2), (A, B, 2)], c=B, k=1)
        assert not condition1(inst)

    @pytest.mark.parametrize("control", ["DCDV", "CCPC-TE", "CCroPC-TP"])
    def test_unsupported(self, control):
        inst = instance(control, VotingRule.BUCKLIN, 2, [(A, B)], c=A,
                        k=0 if control == "DCDV" else None)
        with pytest.raises(InstanceError) as excinfo:
            condition1(inst)
        assert excinfo.value.error_code is ErrorCode.UNSUPPORTED_CONTROL


class TestLevelConditions:

    VOTES = [(B, A, C), (B, A, C), (A, B, C)]

    def test_rival_already_ahead(self):
        inst = instance("CCDV", VotingRule.BUCKLIN, 3, self.VOTES, c=A, k=0)
        assert condition_levels(inst, LevelMode.DELETE)

    def test_adding_voters_may_help(self):
        inst = instance("CCAV", VotingRule.BUCKLIN, 3, self.VOTES, c=A, k=0,
                        pool_voters=[(A, C, B)])
        assert condition_levels(inst, LevelMode.ADD)
        inst = instance("CCAV", VotingRule.BUCKLIN, 3, self.VOTES, c=A, k=1,
                        pool_voters=[(A, C, B)])
        assert not condition_levels(inst, LevelMode.ADD)

    def test_level_one_majority_never_fires(self):
        votes = [(A, B, C), (A, C, B), (B, A, C)]
        inst = instance("CCDV", VotingRule.BUCKLIN, 3, votes, c=A, k=1)
        assert not condition_levels(inst, LevelMode.DELETE)

    def test_fallback_rival_never_reaching_threshold(self):
        # a is approved by one voter only and can never reach a majority
        votes = [(B,), (B,), (A, B), ()]
        inst = instance("CCDV", VotingRule.FALLBACK, 2, votes, c=A, k=0)
        assert condition_levels(inst, LevelMode.DELETE)
        inst = instance("CCDV", VotingRule.FALLBACK, 2, votes, c=A, k=1)
        assert condition_levels(inst, LevelMode.DELETE)
        assert not brute_force(inst).yes

    def test_plurality_rejected(self):
        inst = instance("CCDV", VotingRule.PLURALITY, 2, [(A, B)], c=A, k=0)
        with pytest.raises(InstanceError):
            condition_levels(inst, LevelMode.DELETE)


class TestCondition4:

    def test_distinguished_majority_blocks_destruction(self):
        inst = instance("DCPV-TE", VotingRule.BUCKLIN, 3, [(A, B, C), (A, C, B), (B, A, C)], c=A)
        forced = condition4_decide(inst)
        assert forced.verdict is Verdict.NO
        assert forced.forced_by == "condition4"

    def test_rival_majority_gives_trivial_witness(self):
        inst = instance("DCPV-TP", VotingRule.FALLBACK, 3, [(B,), (B, A), (A,)], c=A)
        forced = condition4_decide(inst)
        assert forced.verdict is Verdict.YES
        assert forced.witness.kind is ActionKind.VOTER_PARTITION
        assert forced.witness.members == ()
        assert goal_satisfied(inst, forced.witness)

    def test_constructive_with_rival_majority(self):
        inst = instance("CCPV-TE", VotingRule.PLURALITY, 2, [(B, A), (B, A), (A, B)], c=A)
        assert condition4_decide(inst).verdict is Verdict.NO

    def test_no_majority_no_decision(self):
        inst = instance("CCPV-TP", VotingRule.BUCKLIN, 3, [(A, B, C), (B, A, C)], c=A)
        assert condition4_decide(inst) is None

    def test_voter_partitions_only(self):
        inst = instance("CCDV", VotingRule.BUCKLIN, 2, [(A, B)], c=A, k=0)
        with pytest.raises(InstanceError):
            condition4_decide(inst)


class TestMajorityGuard:

    def test_majority_holder(self):
        inst = instance("DCDC", VotingRule.BUCKLIN, 3, [(A, B, C), (A, C, B), (B, A, C)], c=A, k=2)
        assert destructive_majority_guard(inst)

    def test_spoilers_judged_over_extended_ballots(self):
        inst = ac_instance("DCAC", VotingRule.BUCKLIN, 2, 1, [(2, A, B), (2, A, B), (A, B, 2)], c=A, k=1)
        assert not destructive_majority_guard(inst)
        assert brute_force(inst).yes

    def test_constructive_rejected(self):
        inst = instance("CCDC", VotingRule.BUCKLIN, 2, [(A, B)], c=A, k=1)
        with pytest.raises(InstanceError):
            destructive_majority_guard(inst)


# ----------------------------------------------------------------------------
# Soundness: whenever a check decides, the oracle agrees
# ----------------------------------------------------------------------------

def _domain(rule: VotingRule, m: int) -> List[Tuple[int, ...]]:
    if rule is VotingRule.FALLBACK:
        return [vote for length in range(m + 1) for vote in permutations(range(m), length)]
    return list(permutations(range(m)))


def _profiles(rule: VotingRule, m: int, max_n: int) -> Dict[int, List[Tuple]]:
    domain = _domain(rule, m)
    return {n: list(product(domain, repeat=n)) for n in range(1, max_n + 1)}


def _instances(rule: VotingRule, m: int, votes: Tuple, pool: Tuple, c: int) -> Iterator[ControlInstance]:
    e = election(rule, m, votes)

    def make(name: str, k: Optional[int] = None, **extra) -> ControlInstance:
        inst = ControlInstance(ControlType.parse(name), e, c, k, **extra)
        inst.validate()
        return inst

    n = len(votes)
    for k in range(n + 1):
        yield make("CCDV", k)
        yield make("CCAV", k, pool_voters=pool)
    for name in ("CCPV-TE", "CCPV-TP", "DCPV-TE", "DCPV-TP",
                 "DCPC-TE", "DCPC-TP", "DCroPC-TE", "DCroPC-TP"):
        yield make(name)
    for k in range(m):
        yield make("CCDC", k)
        yield make("DCDC", k)
    if c < m - 1:
        # the largest id acts as the spoiler
        registered = restrict(e, range(m - 1))
        for name in ("CCAC", "DCAC"):
            for k in (0, 1):
                inst = ControlInstance(ControlType.parse(name), registered, c, k,
                                       pool_candidates=frozenset({m - 1}), extended_election=e)
                inst.validate()
                yield inst


def _forced(inst: ControlInstance) -> List[Tuple[str, Verdict]]:
    control = inst.control
    family = control.family
    found = []
    if family is ControlFamily.PV:
        forced = condition4_decide(inst)
        if forced is not None:
            found.append(("condition4", forced.verdict))
    if control.is_constructive and family not in (ControlFamily.PC, ControlFamily.ROPC):
        if condition1(inst):
            found.append(("condition1", Verdict.NO))
    if control.is_constructive and inst.rule is not VotingRule.PLURALITY:
        if family is ControlFamily.DV and condition_levels(inst, LevelMode.DELETE):
            found.append(("condition2", Verdict.NO))
        if family is ControlFamily.AV and condition_levels(inst, LevelMode.ADD):
            found.append(("condition3", Verdict.NO))
    if not control.is_constructive and not family.is_voter_control:
        if destructive_majority_guard(inst):
            found.append(("majority_guard", Verdict.NO))
    return found


def _sweep(rule: VotingRule, m: int, max_n: int) -> int:
    decided = 0
    for n, profiles in _profiles(rule, m, max_n).items():
        for index, votes in enumerate(profiles):
            pool = profiles[(index + 1) % len(profiles)]
            for c in range(m):
                for inst in _instances(rule, m, votes, pool, c):
                    for check, verdict in _forced(inst):
                        decided += 1
                        oracle = brute_force(inst)
                        assert oracle.yes == (verdict is Verdict.YES), (
                            f"{check} decided {verdict.value} for {inst.control.name} "
                            f"c={c} k={inst.k} votes={votes}"
                        )
    return decided


class TestSoundness:

    @pytest.mark.parametrize("max_n", [3, pytest.param(4, marks=pytest.mark.slow)])
    def test_bucklin_three_candidates(self, max_n):
        assert _sweep(VotingRule.BUCKLIN, 3, max_n) > 0

    @pytest.mark.parametrize("max_n", [3, pytest.param(4, marks=pytest.mark.slow)])
    def test_fallback_two_candidates(self, max_n):
        assert _sweep(VotingRule.FALLBACK, 2, max_n) > 0

    def test_plurality_three_candidates(self):
        assert _sweep(VotingRule.PLURALITY, 3, 3) > 0
