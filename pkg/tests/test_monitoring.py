"""
Tests for solve timing and run counters
"""

from itertools import count

from src.models.control_models import Verdict
from src.utils.monitoring import RunMonitor, process_memory_mb, track_solve


def test_track_solve_with_fake_clock():
    ticks = count(start=1.0, step=0.25)
    with track_solve(clock=lambda: next(ticks)) as timer:
        assert timer.elapsed_ms is None
    assert timer.elapsed_ms == 250.0


def test_elapsed_recorded_on_error():
    try:
        with track_solve() as timer:
            raise RuntimeError("stop")
    except RuntimeError:
        pass
    assert timer.elapsed_ms is not None and timer.elapsed_ms >= 0


def test_run_monitor_counts(mocker):
    logger = mocker.Mock()
    monitor = RunMonitor(logger=logger)
    monitor.record(Verdict.YES, 2.0)
    monitor.record(Verdict.TIMEOUT, 10.0)
    monitor.record(Verdict.YES, 1.0)
    snapshot = monitor.snapshot()
    assert snapshot["solved"] == 3
    assert snapshot["verdicts"] == {"YES": 2, "NO": 0, "TIMEOUT": 1}
    assert snapshot["solve_ms_total"] == 13.0
    monitor.log_summary("totals")
    logger.info.assert_called_once()
    assert logger.info.call_args[0][0].startswith("totals: ")


def test_process_memory():
    assert process_memory_mb() > 0
