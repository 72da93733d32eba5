"""
Monte-Carlo experiment runner
Generates seeded instances per grid cell, solves them under the time limit
and tallies yes / no / timeout counts
"""

import logging
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..generators.instance_generator import InstanceGenerator
from ..models.config_models import ExperimentConfig, SolverConfig
from ..models.experiment_models import CellKey, CellStats, TrialResult, TrialSeed
from ..models.response_models import ErrorCode
from ..service.heuristic_solver import Deadline, HeuristicSolver
from ..utils.error_handling import ControlLabException, ExperimentError
from ..utils.monitoring import RunMonitor

logger = logging.getLogger('control_lab.harness')


@dataclass(frozen=True)
class TrialTask:
    """Everything a worker process needs to run one trial"""
    seed: TrialSeed
    timeout_secs: float
    use_preorder: bool
    use_conditions: bool


def run_trial(task: TrialTask, generator: Optional[InstanceGenerator] = None) -> TrialResult:
    """Generate and solve one instance; module-level so worker processes can pickle it"""
    generator = generator or InstanceGenerator()
    instance = generator.generate(task.seed)
    solver = HeuristicSolver(SolverConfig(timeout_secs=task.timeout_secs,
                                          use_preorder=task.use_preorder,
                                          use_conditions=task.use_conditions))
    outcome = solver.solve(instance, Deadline(task.timeout_secs))
    return TrialResult(task.seed.trial, outcome.verdict, outcome.elapsed_ms, instance.k)


class ExperimentRunner:
    """Runs experiment cells sequentially or over a process pool"""

    def __init__(self, generator: Optional[InstanceGenerator] = None):
        self.generator = generator or InstanceGenerator()
        self.monitor = RunMonitor()

    def cells(self, cfg: ExperimentConfig) -> List[CellKey]:
        """The grid in canonical (rule, control, dist, m, n) order"""
        cells = [
            CellKey(rule, control, dist, m, n)
            for rule in cfg.rules
            for control in cfg.controls
            for dist in cfg.dists
            for m in cfg.m_values
            for n in cfg.n_values
            if not cfg.paper_pairs_only or control.is_paper_pair(rule)
        ]
        return sorted(set(cells), key=CellKey.sort_key)

    def check_cell(self, cfg: ExperimentConfig, cell: CellKey) -> None:
        """
        Raises:
            ExperimentError: the pair was not part of the published experiments
                and ``allow_non_paper`` is off
        """
        if cell.control.is_paper_pair(cell.rule):
            return
        if not cfg.allow_non_paper:
            raise ExperimentError(
                f"{cell.rule.short_name}-{cell.control.name} was not in the published grid; "
                f"pass --allow-non-paper to run it",
                error_code=ErrorCode.NON_PAPER_CELL,
            )
        logger.warning(f"Running non-published pair {cell.rule.short_name}-{cell.control.name}")

    def _tasks(self, cfg: ExperimentConfig, cell: CellKey) -> List[TrialTask]:
        timeout = cfg.timeout_for(cell.m, cell.n)
        return [
            TrialTask(TrialSeed(cfg.seed, cell, trial), timeout, cfg.use_preorder, cfg.use_conditions)
            for trial in range(cfg.trials)
        ]

    def _finish_cell(self, cfg: ExperimentConfig, cell: CellKey, results: List[TrialResult]) -> CellStats:
        for result in results:
            self.monitor.record(result.verdict, result.elapsed_ms)
        stats = CellStats.from_results(cell, results, cfg.seed, record_timings=cfg.record_timings)
        if stats.cp + stats.ci + stats.to != cfg.trials:
            raise ExperimentError(f"{cell.describe()}: counters do not add up to {cfg.trials}")
        logger.info(f"{cell.describe()}: cp={stats.cp} ci={stats.ci} to={stats.to}")
        return stats

    def run_cell(self, cfg: ExperimentConfig, cell: CellKey) -> CellStats:
        """
        Run every trial of one cell in this process.

        Raises:
            ExperimentError: non-published pair without override, or a failing trial
        """
        self.check_cell(cfg, cell)
        try:
            results = [run_trial(task, self.generator) for task in self._tasks(cfg, cell)]
        except ControlLabException as e:
            raise ExperimentError(f"{cell.describe()} failed: {e.message}", original_exception=e)
        return self._finish_cell(cfg, cell, results)

    def run_grid(self, cfg: ExperimentConfig) -> List[CellStats]:
        """
        Run all cells. Results are independent of ``cfg.jobs`` since every
        trial derives its own seed.
        """
        cells = self.cells(cfg)
        for cell in cells:
            self.check_cell(cfg, cell)

        started = time.perf_counter()
        logger.info(f"Running {len(cells)} cells x {cfg.trials} trials with {cfg.jobs} job(s)")
        if cfg.jobs == 1:
            table = [self.run_cell(cfg, cell) for cell in cells]
        else:
            table = self._run_parallel(cfg, cells)

        totals = {
            'cells': len(table),
            'trials': sum(s.trials for s in table),
            'cp': sum(s.cp for s in table),
            'ci': sum(s.ci for s in table),
            'to': sum(s.to for s in table),
            'wall_secs': round(time.perf_counter() - started, 3),
        }
        logger.info(f"Run complete: {totals}")
        self.monitor.log_summary("Solver totals")
        return table

    def _run_parallel(self, cfg: ExperimentConfig, cells: List[CellKey]) -> List[CellStats]:
        tasks: List[Tuple[int, TrialTask]] = [
            (index, task) for index, cell in enumerate(cells) for task in self._tasks(cfg, cell)
        ]
        grouped: Dict[int, List[TrialResult]] = defaultdict(list)
        chunk = max(1, len(tasks) // (cfg.jobs * 8))
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            try:
                outputs = pool.map(run_trial, [task for _, task in tasks], chunksize=chunk)
                for (index, _), result in zip(tasks, outputs):
                    grouped[index].append(result)
            except ControlLabException as e:
                raise ExperimentError(f"Experiment trial failed: {e.message}", original_exception=e)
        return [self._finish_cell(cfg, cell, grouped[index]) for index, cell in enumerate(cells)]
