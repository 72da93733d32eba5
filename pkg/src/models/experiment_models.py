"""
Experiment models: distribution models, trial seeds, cells and their statistics
"""

from dataclasses import dataclass
from enum import Enum
from statistics import fmean
from typing import Iterable, Optional, Tuple

from .control_models import ControlType, Verdict
from .election_models import VotingRule


class DistModel(Enum):
    """Vote distribution models"""
    IC = "IC"   # impartial culture
    TM = "TM"   # two mainstreams


@dataclass(frozen=True)
class CellKey:
    """One data point of the experiment grid"""
    rule: VotingRule
    control: ControlType
    dist: DistModel
    m: int
    n: int

    def sort_key(self) -> Tuple:
        return (self.rule.value, self.control.name, self.dist.value, self.m, self.n)

    def describe(self) -> str:
        return f"{self.rule.short_name}-{self.control.name}/{self.dist.value} m={self.m} n={self.n}"


@dataclass(frozen=True)
class TrialSeed:
    """Coordinates that determine one generated instance"""
    master: int
    cell: CellKey
    trial: int

    def parts(self) -> Tuple:
        cell = self.cell
        return (self.master, cell.rule.value, cell.control.name, cell.dist.value,
                cell.m, cell.n, self.trial)


@dataclass(frozen=True)
class TrialResult:
    """Verdict and wall time of a single trial"""
    trial: int
    verdict: Verdict
    elapsed_ms: float
    k: Optional[int] = None


def _mean(values: Iterable[float]) -> Optional[float]:
    values = list(values)
    return round(fmean(values), 3) if values else None


@dataclass(frozen=True)
class CellStats:
    """
    Counters of one grid cell: cp (yes), ci (no) and to (timeout), with mean
    decision times over yes, no and all decided trials.
    """
    cell: CellKey
    trials: int
    k: Optional[int]
    cp: int
    ci: int
    to: int
    avg_ms_yes: Optional[float]
    avg_ms_no: Optional[float]
    avg_ms_decided: Optional[float]
    seed: int

    @property
    def yes_percent(self) -> float:
        return 100.0 * self.cp / self.trials

    @classmethod
    def from_results(
        cls,
        cell: CellKey,
        results: Iterable[TrialResult],
        seed: int,
        record_timings: bool = True,
    ) -> "CellStats":
        results = sorted(results, key=lambda r: r.trial)
        yes = [r.elapsed_ms for r in results if r.verdict is Verdict.YES]
        no = [r.elapsed_ms for r in results if r.verdict is Verdict.NO]
        timeouts = sum(1 for r in results if r.verdict is Verdict.TIMEOUT)
        k = results[0].k if results else None
        return cls(
            cell=cell,
            trials=len(results),
            k=k,
            cp=len(yes),
            ci=len(no),
            to=timeouts,
            avg_ms_yes=_mean(yes) if record_timings else None,
            avg_ms_no=_mean(no) if record_timings else None,
            avg_ms_decided=_mean(yes + no) if record_timings else None,
            seed=seed,
        )


@dataclass(frozen=True)
class SummaryRow:
    """Min/max yes percentages and timeout percentage of one control case"""
    control: str
    rule: str
    dist: str
    min_percent: float
    max_percent: float
    to_percent: float
    cells: int
