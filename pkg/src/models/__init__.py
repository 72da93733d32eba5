"""Data models for elections, control problems, experiments and configuration"""

# Election models
from .election_models import (
    Election,
    Vote,
    VotingRule,
    WinnerSet
)

# Control models
from .control_models import (
    ActionKind,
    ControlAction,
    ControlFamily,
    ControlInstance,
    ControlType,
    Direction,
    OracleVerdict,
    Outcome,
    TieRule,
    Verdict,
    all_control_types
)

# Experiment models
from .experiment_models import (
    CellKey,
    CellStats,
    DistModel,
    SummaryRow,
    TrialResult,
    TrialSeed
)

# Error models
from .response_models import (
    ErrorCode,
    ErrorRecord
)

# Configuration models
from .config_models import (
    ApplicationConfig,
    ExperimentConfig,
    ExperimentDefaults,
    LoggingConfig,
    LogLevel,
    OracleConfig,
    SolverConfig,
    TimeoutPolicy
)

__all__ = [
    # Election models
    'Election',
    'Vote',
    'VotingRule',
    'WinnerSet',

    # Control models
    'ActionKind',
    'ControlAction',
    'ControlFamily',
    'ControlInstance',
    'ControlType',
    'Direction',
    'OracleVerdict',
    'Outcome',
    'TieRule',
    'Verdict',
    'all_control_types',

    # Experiment models
    'CellKey',
    'CellStats',
    'DistModel',
    'SummaryRow',
    'TrialResult',
    'TrialSeed',

    # Error models
    'ErrorCode',
    'ErrorRecord',

    # Configuration models
    'ApplicationConfig',
    'ExperimentConfig',
    'ExperimentDefaults',
    'LoggingConfig',
    'LogLevel',
    'OracleConfig',
    'SolverConfig',
    'TimeoutPolicy'
]
