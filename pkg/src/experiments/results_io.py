"""
Experiment results: CSV files, overview summaries and per-case grids
"""

import logging
from pathlib import Path
from typing import List, Optional, Sequence, Union

import pandas as pd

from ..models.control_models import ControlType
from ..models.election_models import VotingRule
from ..models.experiment_models import CellKey, CellStats, DistModel, SummaryRow
from ..models.response_models import ErrorCode
from ..utils.error_handling import ExperimentError, FormatError

logger = logging.getLogger('control_lab.results')

CSV_COLUMNS = [
    'rule', 'control', 'tie', 'dist', 'm', 'n', 'trials', 'k',
    'cp', 'ci', 'to', 'avg_ms_yes', 'avg_ms_no', 'avg_ms_decided', 'seed',
]
_AVERAGES = ['avg_ms_yes', 'avg_ms_no', 'avg_ms_decided']


def stats_frame(table: Sequence[CellStats]) -> pd.DataFrame:
    """One row per cell in canonical order"""
    rows = []
    for stats in sorted(table, key=lambda s: s.cell.sort_key()):
        cell = stats.cell
        rows.append({
            'rule': cell.rule.value,
            'control': cell.control.base_name,
            'tie': cell.control.tie_rule.value,
            'dist': cell.dist.value,
            'm': cell.m,
            'n': cell.n,
            'trials': stats.trials,
            'k': stats.k,
            'cp': stats.cp,
            'ci': stats.ci,
            'to': stats.to,
            'avg_ms_yes': stats.avg_ms_yes,
            'avg_ms_no': stats.avg_ms_no,
            'avg_ms_decided': stats.avg_ms_decided,
            'seed': stats.seed,
        })
    frame = pd.DataFrame(rows, columns=CSV_COLUMNS)
    frame['k'] = frame['k'].astype('Int64')
    for column in _AVERAGES:
        frame[column] = frame[column].astype('float64')
    return frame


def write_csv(table: Sequence[CellStats], path: Union[str, Path]) -> Path:
    """
    Write cell statistics; absent averages and budgets become empty fields.

    Raises:
        ExperimentError: empty table or unwritable path
    """
    if not table:
        raise ExperimentError("No cells to write", error_code=ErrorCode.CELL_FAILED)
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        stats_frame(table).to_csv(path, index=False, na_rep='', float_format='%.3f',
                                  lineterminator='\n')
    except OSError as e:
        raise ExperimentError(f"Cannot write {path}: {e}", error_code=ErrorCode.FILE_ACCESS_DENIED,
                              original_exception=e)
    logger.info(f"Wrote {len(table)} cells to {path}")
    return path


def _optional_float(value) -> Optional[float]:
    return None if pd.isna(value) else float(value)


def read_csv(path: Union[str, Path]) -> List[CellStats]:
    """
    Read a results CSV written by :func:`write_csv`.

    Raises:
        FormatError: missing columns or unparseable rows
    """
    frame = pd.read_csv(
        path,
        dtype={'rule': str, 'control': str, 'tie': str, 'dist': str, 'k': 'Int64'},
        keep_default_na=False,
        na_values={column: [''] for column in _AVERAGES + ['k']},
    )
    missing = [column for column in CSV_COLUMNS if column not in frame.columns]
    if missing:
        raise FormatError(f"{path}: missing columns {missing}")

    table = []
    for line, row in enumerate(frame.itertuples(index=False), start=2):
        try:
            tie = None if row.tie == '-' else row.tie
            cell = CellKey(VotingRule(row.rule), ControlType.parse(row.control, tie),
                           DistModel(row.dist), int(row.m), int(row.n))
        except Exception as e:
            raise FormatError(f"{path}: {e}", line, original_exception=e)
        table.append(CellStats(
            cell=cell,
            trials=int(row.trials),
            k=None if pd.isna(row.k) else int(row.k),
            cp=int(row.cp),
            ci=int(row.ci),
            to=int(row.to),
            avg_ms_yes=_optional_float(row.avg_ms_yes),
            avg_ms_no=_optional_float(row.avg_ms_no),
            avg_ms_decided=_optional_float(row.avg_ms_decided),
            seed=int(row.seed),
        ))
    return table


def summarize(table: Sequence[CellStats]) -> List[SummaryRow]:
    """
    Overview rows per (control, rule, dist): minimum and maximum yes
    percentage over the cells (timeouts count in the denominator) and the
    overall timeout percentage.
    """
    if not table:
        raise ExperimentError("Nothing to summarize")
    frame = stats_frame(table)
    frame['case'] = [s.cell.control.name for s in sorted(table, key=lambda s: s.cell.sort_key())]
    frame['yes_percent'] = 100.0 * frame['cp'] / frame['trials']

    grouped = frame.groupby(['case', 'rule', 'dist'], sort=True).agg(
        min_percent=('yes_percent', 'min'),
        max_percent=('yes_percent', 'max'),
        to_total=('to', 'sum'),
        trials_total=('trials', 'sum'),
        cells=('m', 'size'),
    )
    return [
        SummaryRow(
            control=case,
            rule=rule,
            dist=dist,
            min_percent=float(row.min_percent),
            max_percent=float(row.max_percent),
            to_percent=100.0 * float(row.to_total) / float(row.trials_total),
            cells=int(row.cells),
        )
        for (case, rule, dist), row in grouped.iterrows()
    ]


def format_summary(rows: Sequence[SummaryRow]) -> str:
    """Overview table: one line per control case, rule and model"""
    lines = [f"{'control':<10} {'rule':<10} {'dist':<4} {'min':>6} {'max':>6} {'to':>6} {'cells':>5}"]
    for row in rows:
        lines.append(
            f"{row.control:<10} {row.rule:<10} {row.dist:<4} "
            f"{row.min_percent:>6.1f} {row.max_percent:>6.1f} {row.to_percent:>6.1f} {row.cells:>5}"
        )
    return "\n".join(lines) + "\n"


def format_cell_table(
    table: Sequence[CellStats],
    rule: VotingRule,
    control: ControlType,
    dist: DistModel,
) -> str:
    """m x n grid of cp/ci/to counters for one control case"""
    cells = {(s.cell.m, s.cell.n): s for s in table
             if s.cell.rule is rule and s.cell.control == control and s.cell.dist is dist}
    if not cells:
        return f"{rule.short_name}-{control.name}/{dist.value}: no cells\n"

    m_values = sorted({m for m, _ in cells})
    n_values = sorted({n for _, n in cells})
    width = max(11, max(len(f"{s.cp}/{s.ci}/{s.to}") for s in cells.values()) + 1)
    lines = [f"{rule.short_name}-{control.name}/{dist.value} (cp/ci/to)"]
    lines.append("m \\ n".ljust(7) + "".join(str(n).rjust(width) for n in n_values))
    for m in m_values:
        entries = []
        for n in n_values:
            stats = cells.get((m, n))
            entries.append((f"{stats.cp}/{stats.ci}/{stats.to}" if stats else "-").rjust(width))
        lines.append(str(m).ljust(7) + "".join(entries))
    return "\n".join(lines) + "\n"


def case_keys(table: Sequence[CellStats]):
    """Distinct (rule, control, dist) cases in canonical order"""
    seen = {}
    for stats in sorted(table, key=lambda s: s.cell.sort_key()):
        cell = stats.cell
        seen.setdefault((cell.rule.value, cell.control.name, cell.dist.value),
                        (cell.rule, cell.control, cell.dist))
    return list(seen.values())
