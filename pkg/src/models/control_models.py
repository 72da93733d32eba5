"""
Control problem models: control types, instances, actions and outcomes
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import FrozenSet, Optional, Tuple

from .election_models import Election, Vote, VotingRule


class ControlFamily(Enum):
    """What the chair may change"""
    AV = "AV"      # add voters
    DV = "DV"      # delete voters
    PV = "PV"      # partition voters
    AC = "AC"      # add candidates
    DC = "DC"      # delete candidates
    PC = "PC"      # partition candidates
    ROPC = "roPC"  # runoff partition of candidates

    @property
    def is_partition(self) -> bool:
        return self in (ControlFamily.PV, ControlFamily.PC, ControlFamily.ROPC)

    @property
    def uses_budget(self) -> bool:
        return not self.is_partition

    @property
    def is_voter_control(self) -> bool:
        return self in (ControlFamily.AV, ControlFamily.DV, ControlFamily.PV)


class Direction(Enum):
    """Constructive (make c the unique winner) or destructive (prevent it)"""
    CONSTRUCTIVE = "constructive"
    DESTRUCTIVE = "destructive"

    @property
    def prefix(self) -> str:
        return "CC" if self is Direction.CONSTRUCTIVE else "DC"


class TieRule(Enum):
    """Tie handling in partition subelections"""
    TE = "TE"   # ties eliminate
    TP = "TP"   # ties promote
    NONE = "-"


@dataclass(frozen=True)
class ControlType:
    """A control family with its direction and, for partitions, its tie rule"""
    family: ControlFamily
    direction: Direction
    tie_rule: TieRule = TieRule.NONE

    def __post_init__(self):
        if self.family.is_partition == (self.tie_rule is TieRule.NONE):
            from ..utils.error_handling import InstanceError
            from .response_models import ErrorCode
            raise InstanceError(
                f"{self.direction.prefix}{self.family.value} "
                f"{'needs' if self.family.is_partition else 'takes no'} tie rule",
                error_code=ErrorCode.UNSUPPORTED_CONTROL
            )

    @property
    def is_constructive(self) -> bool:
        return self.direction is Direction.CONSTRUCTIVE

    @property
    def base_name(self) -> str:
        """Name without the tie suffix, e.g. ``CCroPC``"""
        return f"{self.direction.prefix}{self.family.value}"

    @property
    def name(self) -> str:
        """Canonical name, e.g. ``DCPV-TP``"""
        if self.tie_rule is TieRule.NONE:
            return self.base_name
        return f"{self.base_name}-{self.tie_rule.value}"

    @property
    def is_non_paper(self) -> bool:
        """DCAV and DCDV are left out of the experiments (those rules are vulnerable)"""
        return (not self.is_constructive) and self.family in (ControlFamily.AV, ControlFamily.DV)

    def is_paper_pair(self, rule: VotingRule) -> bool:
        """Whether the published experiments ran this control type for ``rule``"""
        if self.is_non_paper:
            return False
        if rule is VotingRule.PLURALITY:
            if self.family in (ControlFamily.AV, ControlFamily.DV):
                return False
            if self.family is ControlFamily.PV and self.tie_rule is TieRule.TE:
                return False
        return True

    @classmethod
    def parse(cls, name: str, tie: Optional[str] = None) -> "ControlType":
        """
        Parse a control name such as ``CCAV``, ``DCroPC-TE`` or ``CCPV`` + ``tie="TP"``.

        Raises:
            InstanceError: unknown or unsupported name (AUC variants included)
        """
        from ..utils.error_handling import InstanceError
        from .response_models import ErrorCode

        text = name.strip()
        if "-" in text:
            text, suffix = text.split("-", 1)
            if tie not in (None, "-", "", suffix):
                raise InstanceError(f"Conflicting tie rules {suffix!r} and {tie!r}",
                                    error_code=ErrorCode.UNSUPPORTED_CONTROL)
            tie = suffix
        prefix, family_name = text[:2].upper(), text[2:]
        directions = {"CC": Direction.CONSTRUCTIVE, "DC": Direction.DESTRUCTIVE}
        families = {f.value.upper(): f for f in ControlFamily}
        families["RPC"] = ControlFamily.ROPC
        if prefix not in directions or family_name.upper() not in families:
            raise InstanceError(f"Unsupported control type: {name}",
                                error_code=ErrorCode.UNSUPPORTED_CONTROL)
        family = families[family_name.upper()]
        if family.is_partition:
            if tie not in ("TE", "TP"):
                raise InstanceError(f"{name} needs a tie rule (TE or TP)",
                                    error_code=ErrorCode.UNSUPPORTED_CONTROL)
            tie_rule = TieRule(tie)
        else:
            tie_rule = TieRule.NONE
        return cls(family, directions[prefix], tie_rule)

    def __str__(self) -> str:
        return self.name


def all_control_types() -> Tuple[ControlType, ...]:
    """The twenty supported control types (eighteen studied plus DCAV/DCDV)"""
    types = []
    for family in ControlFamily:
        for direction in Direction:
            if family.is_partition:
                for tie in (TieRule.TE, TieRule.TP):
                    types.append(ControlType(family, direction, tie))
            else:
                types.append(ControlType(family, direction))
    return tuple(types)


class ActionKind(Enum):
    """Shape of a control action"""
    DELETE_VOTERS = "DeleteVoters"
    ADD_VOTERS = "AddVoters"
    DELETE_CANDIDATES = "DeleteCandidates"
    ADD_CANDIDATES = "AddCandidates"
    VOTER_PARTITION = "VoterPartition"
    CANDIDATE_PARTITION = "CandidatePartition"


ACTION_FOR_FAMILY = {
    ControlFamily.DV: ActionKind.DELETE_VOTERS,
    ControlFamily.AV: ActionKind.ADD_VOTERS,
    ControlFamily.DC: ActionKind.DELETE_CANDIDATES,
    ControlFamily.AC: ActionKind.ADD_CANDIDATES,
    ControlFamily.PV: ActionKind.VOTER_PARTITION,
    ControlFamily.PC: ActionKind.CANDIDATE_PARTITION,
    ControlFamily.ROPC: ActionKind.CANDIDATE_PARTITION,
}


@dataclass(frozen=True)
class ControlAction:
    """
    A concrete witness that can be replayed against an instance.

    ``members`` are vote indices (voter actions; for partitions the indices
    of V1), pool indices (adding voters) or candidate ids (candidate
    actions; for partitions the members of C1).
    """
    kind: ActionKind
    members: Tuple[int, ...] = ()

    @classmethod
    def of(cls, kind: ActionKind, members) -> "ControlAction":
        return cls(kind, tuple(sorted(members)))

    def describe(self) -> str:
        return f"{self.kind.value}({','.join(str(x) for x in self.members)})"

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class ControlInstance:
    """
    Everything a control decision problem needs.

    ``election`` is the registered election. For adding candidates,
    ``extended_election`` carries the same voters ranking C ∪ D and
    ``pool_candidates`` is D; for adding voters, ``pool_voters`` holds the
    unregistered ballots over C. ``k`` is None for partition problems.
    """
    control: ControlType
    election: Election
    distinguished: int
    k: Optional[int] = None
    pool_voters: Optional[Tuple[Vote, ...]] = None
    pool_candidates: Optional[FrozenSet[int]] = None
    extended_election: Optional[Election] = None

    @property
    def rule(self) -> VotingRule:
        return self.election.rule

    @cached_property
    def rivals(self) -> Tuple[int, ...]:
        return tuple(c for c in self.election.candidate_list if c != self.distinguished)

    @cached_property
    def pool_election(self) -> Optional[Election]:
        """The unregistered voters as an election over C (adding voters only)"""
        if self.pool_voters is None:
            return None
        return Election(self.election.rule, self.election.candidates, self.pool_voters)

    @cached_property
    def voter_universe(self) -> Election:
        """Registered ballots followed by the unregistered ones"""
        from ..voting.election_ops import append_votes
        return append_votes(self.election, tuple(self.pool_voters or ()))

    def validate(self) -> None:
        """
        Check the structural invariants of the instance.

        Raises:
            InstanceError: on any violated invariant
        """
        from ..utils.error_handling import InstanceError
        from .response_models import ErrorCode

        def fail(message: str, code: ErrorCode = ErrorCode.INVALID_INSTANCE):
            raise InstanceError(message, error_code=code)

        election = self.election
        election.validate()
        family = self.control.family
        if self.distinguished not in election.candidates:
            fail(f"Distinguished candidate {self.distinguished} is not registered",
                 ErrorCode.UNKNOWN_CANDIDATE)
        if family.uses_budget:
            if self.k is None or self.k < 0:
                fail(f"{self.control.name} needs a non-negative budget k")
        elif self.k not in (None, 0):
            fail(f"{self.control.name} takes no budget")

        if family is ControlFamily.AV:
            if self.pool_voters is None:
                fail("Adding voters needs a pool of unregistered voters")
            self.pool_election.validate()
            if self.k > len(self.pool_voters):
                fail(f"k={self.k} exceeds the pool of {len(self.pool_voters)} voters",
                     ErrorCode.BUDGET_EXCEEDED)
        elif self.pool_voters is not None:
            fail("Only adding-voters instances carry unregistered voters")

        if family is ControlFamily.AC:
            if not self.pool_candidates or self.extended_election is None:
                fail("Adding candidates needs spoiler candidates and ballots over C ∪ D")
            if self.pool_candidates & election.candidates:
                fail("Spoiler candidates must be disjoint from the registered ones")
            if self.extended_election.candidates != election.candidates | self.pool_candidates:
                fail("Extended ballots must rank exactly C ∪ D")
            if self.extended_election.n != election.n:
                fail("Extended ballots must belong to the registered voters")
            self.extended_election.validate()
            if self.k > len(self.pool_candidates):
                fail(f"k={self.k} exceeds the {len(self.pool_candidates)} spoiler candidates",
                     ErrorCode.BUDGET_EXCEEDED)
        elif self.pool_candidates is not None or self.extended_election is not None:
            fail("Only adding-candidates instances carry spoiler candidates")

        if family is ControlFamily.DV and self.k > election.n:
            fail(f"k={self.k} exceeds the {election.n} registered voters", ErrorCode.BUDGET_EXCEEDED)
        if family is ControlFamily.DC and self.k > election.m - 1:
            fail(f"k={self.k} exceeds the {election.m - 1} deletable candidates",
                 ErrorCode.BUDGET_EXCEEDED)


class Verdict(Enum):
    """Result of deciding a control instance"""
    YES = "YES"
    NO = "NO"
    TIMEOUT = "TIMEOUT"


@dataclass(frozen=True)
class Outcome:
    """
    Verdict of a solve call with its witness, wall time and search effort.

    ``forced_by`` names the trivial check that decided the instance, if any.
    """
    verdict: Verdict
    witness: Optional[ControlAction] = None
    elapsed_ms: float = 0.0
    nodes: int = 0
    forced_by: Optional[str] = None

    @property
    def is_yes(self) -> bool:
        return self.verdict is Verdict.YES

    def to_line(self) -> str:
        """One-line rendering used by the CLI"""
        parts = [self.verdict.value]
        if self.witness is not None:
            parts.append(f"witness={self.witness.describe()}")
        if self.forced_by:
            parts.append(f"forced_by={self.forced_by}")
        parts.append(f"nodes={self.nodes}")
        parts.append(f"elapsed_ms={self.elapsed_ms:.3f}")
        return " ".join(parts)


@dataclass(frozen=True)
class OracleVerdict:
    """Exhaustive verdict; ``witnesses_checked`` is the full space size on NO"""
    yes: bool
    witnesses_checked: int
    witness: Optional[ControlAction] = None

    def to_line(self) -> str:
        parts = ["YES" if self.yes else "NO"]
        if self.witness is not None:
            parts.append(f"witness={self.witness.describe()}")
        parts.append(f"witnesses_checked={self.witnesses_checked}")
        return " ".join(parts)
