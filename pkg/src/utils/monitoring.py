"""
Run monitoring: solve timing and per-run verdict counters
"""

import logging
import threading
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, Optional

import psutil

from src.models.control_models import Verdict


@dataclass
class SolveTimer:
    """Wall time of one tracked operation, filled in when the block exits"""
    start: float
    elapsed_ms: Optional[float] = None


@contextmanager
def track_solve(clock=time.perf_counter) -> Iterator[SolveTimer]:
    """Context manager measuring wall time in milliseconds"""
    timer = SolveTimer(start=clock())
    try:
        yield timer
    finally:
        timer.elapsed_ms = (clock() - timer.start) * 1000.0


def process_memory_mb() -> float:
    """Resident set size of the current process in MB"""
    return psutil.Process().memory_info().rss / (1024 * 1024)


@dataclass
class RunMonitor:
    """Collects verdict counts and total solve time across a run"""
    logger: logging.Logger = field(default_factory=lambda: logging.getLogger('control_lab.monitor'))
    counts: Dict[str, int] = field(default_factory=lambda: {v.value: 0 for v in Verdict})
    total_ms: float = 0.0
    started: float = field(default_factory=time.perf_counter)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def record(self, verdict: Verdict, elapsed_ms: float):
        with self._lock:
            self.counts[verdict.value] += 1
            self.total_ms += elapsed_ms

    @property
    def solved(self) -> int:
        return sum(self.counts.values())

    def snapshot(self) -> Dict[str, Any]:
        """Current counters plus process memory"""
        with self._lock:
            return {
                'solved': self.solved,
                'verdicts': dict(self.counts),
                'solve_ms_total': round(self.total_ms, 3),
                'wall_secs': round(time.perf_counter() - self.started, 3),
                'rss_mb': round(process_memory_mb(), 1),
            }

    def log_summary(self, label: str):
        self.logger.info(f"{label}: {self.snapshot()}")
