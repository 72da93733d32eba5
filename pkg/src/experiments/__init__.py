"""
Monte-Carlo experiment harness and result files
"""

from .experiment_runner import ExperimentRunner, TrialTask, run_trial
from .results_io import (
    CSV_COLUMNS, stats_frame, write_csv, read_csv, summarize, format_summary,
    format_cell_table, case_keys,
)

__all__ = [
    'ExperimentRunner', 'TrialTask', 'run_trial',
    'CSV_COLUMNS', 'stats_frame', 'write_csv', 'read_csv', 'summarize',
    'format_summary', 'format_cell_table', 'case_keys',
]
