"""
Configuration models for the election-control lab
"""

from dataclasses import dataclass, field, fields, asdict
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple
import json

from .control_models import ControlType
from .election_models import VotingRule
from .experiment_models import DistModel


PAPER_GRID = (4, 8, 16, 32, 64, 128)


class LogLevel(Enum):
    """Logging levels"""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class TimeoutPolicy(Enum):
    """How the per-instance time limit is chosen"""
    CONSTANT = "constant"
    SIZE_SCALED = "size_scaled"   # scaled by m*n relative to the largest grid cell


@dataclass
class SolverConfig:
    """Heuristic solver settings"""
    timeout_secs: float = 600.0
    use_preorder: bool = True
    use_conditions: bool = True


@dataclass
class OracleConfig:
    """Brute-force oracle settings"""
    max_actions: int = 2 ** 22


@dataclass
class ExperimentDefaults:
    """Defaults for experiment runs (CLI flags override them)"""
    m_values: List[int] = field(default_factory=lambda: list(PAPER_GRID))
    n_values: List[int] = field(default_factory=lambda: list(PAPER_GRID))
    trials: int = 500
    seed: int = 0
    jobs: int = 1
    allow_non_paper: bool = False
    timeout_policy: TimeoutPolicy = TimeoutPolicy.CONSTANT
    record_timings: bool = True
    output_path: str = "results.csv"


@dataclass
class LoggingConfig:
    """Configuration for logging"""
    level: LogLevel = LogLevel.INFO
    config_file: str = "logging_config.json"
    log_directory: str = "logs"


@dataclass
class ApplicationConfig:
    """Main application configuration"""
    app_name: str = "Election Control Lab"
    version: str = "1.0.0"
    solver: SolverConfig = field(default_factory=SolverConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    experiment: ExperimentDefaults = field(default_factory=ExperimentDefaults)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    def validate(self) -> None:
        """
        Raises:
            ConfigurationError: when a value is out of range
        """
        from ..utils.error_handling import ConfigurationError

        if self.solver.timeout_secs <= 0:
            raise ConfigurationError("solver.timeout_secs must be positive",
                                     config_key="solver.timeout_secs")
        if self.oracle.max_actions < 1:
            raise ConfigurationError("oracle.max_actions must be positive",
                                     config_key="oracle.max_actions")
        if self.experiment.trials < 1:
            raise ConfigurationError("experiment.trials must be at least 1",
                                     config_key="experiment.trials")
        if self.experiment.jobs < 1:
            raise ConfigurationError("experiment.jobs must be at least 1",
                                     config_key="experiment.jobs")
        for key in ("m_values", "n_values"):
            values = getattr(self.experiment, key)
            if not values or any(v < 1 for v in values):
                raise ConfigurationError(f"experiment.{key} must be positive integers",
                                         config_key=f"experiment.{key}")

    @classmethod
    def load_from_file(cls, config_path: str) -> 'ApplicationConfig':
        """Load configuration from JSON file"""
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except FileNotFoundError:
            return cls()
        except json.JSONDecodeError as e:
            from ..utils.error_handling import ConfigurationError
            raise ConfigurationError(f"Invalid JSON in config file: {e}", config_key=config_path)
        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ApplicationConfig':
        """Create configuration from a (possibly partial) dictionary"""
        from ..utils.error_handling import ConfigurationError

        config = cls()
        for key in ("app_name", "version"):
            if key in data:
                setattr(config, key, data[key])
        sections = {
            'solver': config.solver,
            'oracle': config.oracle,
            'experiment': config.experiment,
            'logging': config.logging,
        }
        for name, target in sections.items():
            section = data.get(name, {})
            known = {f.name for f in fields(target)}
            for key, value in section.items():
                if key not in known:
                    raise ConfigurationError(f"Unknown configuration key {name}.{key}",
                                             config_key=f"{name}.{key}")
                setattr(target, key, value)
        try:
            config.logging.level = LogLevel(str(config.logging.level).upper()) \
                if not isinstance(config.logging.level, LogLevel) else config.logging.level
            policy = config.experiment.timeout_policy
            config.experiment.timeout_policy = policy if isinstance(policy, TimeoutPolicy) \
                else TimeoutPolicy(policy)
        except ValueError as e:
            raise ConfigurationError(f"Invalid configuration value: {e}")
        return config

    def save_to_file(self, config_path: str):
        """Save configuration to JSON file"""
        Path(config_path).parent.mkdir(parents=True, exist_ok=True)
        with open(config_path, 'w', encoding='utf-8') as f:
            json.dump(self.to_dict(), f, indent=2)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        data = asdict(self)
        data['logging']['level'] = self.logging.level.value
        data['experiment']['timeout_policy'] = self.experiment.timeout_policy.value
        return data


@dataclass
class ExperimentConfig:
    """A fully resolved experiment run"""
    rules: Tuple[VotingRule, ...]
    controls: Tuple[ControlType, ...]
    dists: Tuple[DistModel, ...]
    m_values: Tuple[int, ...] = PAPER_GRID
    n_values: Tuple[int, ...] = PAPER_GRID
    trials: int = 500
    timeout_secs: float = 600.0
    seed: int = 0
    output_path: Optional[str] = None
    jobs: int = 1
    allow_non_paper: bool = False
    timeout_policy: TimeoutPolicy = TimeoutPolicy.CONSTANT
    record_timings: bool = True
    use_preorder: bool = True
    use_conditions: bool = True
    paper_pairs_only: bool = False

    def __post_init__(self):
        from ..utils.error_handling import ConfigurationError

        if self.trials < 1:
            raise ConfigurationError("trials must be at least 1", config_key="trials")
        if self.timeout_secs <= 0:
            raise ConfigurationError("timeout must be positive", config_key="timeout_secs")
        if self.jobs < 1:
            raise ConfigurationError("jobs must be at least 1", config_key="jobs")
        if not (self.rules and self.controls and self.dists and self.m_values and self.n_values):
            raise ConfigurationError("An experiment needs at least one cell")

    def timeout_for(self, m: int, n: int) -> float:
        """Per-instance time limit for a cell of size m x n"""
        if self.timeout_policy is TimeoutPolicy.SIZE_SCALED:
            scale = (m * n) / float(PAPER_GRID[-1] * PAPER_GRID[-1])
            return max(1.0, self.timeout_secs * scale)
        return self.timeout_secs
