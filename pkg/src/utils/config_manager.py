"""
Configuration Manager for the election-control lab
Loads config/main_config.json into ApplicationConfig and applies environment overrides
"""

import logging
import os
from pathlib import Path
from typing import Callable, Dict, Optional

from dotenv import load_dotenv

from src.models.config_models import (
    ApplicationConfig,
    ExperimentDefaults,
    LogLevel,
    OracleConfig,
    SolverConfig,
)
from src.utils.error_handling import ConfigurationError


ENV_OVERRIDES: Dict[str, Callable[[ApplicationConfig, str], None]] = {
    'CONTROL_LAB_TIMEOUT_SECS': lambda c, v: setattr(c.solver, 'timeout_secs', float(v)),
    'CONTROL_LAB_JOBS': lambda c, v: setattr(c.experiment, 'jobs', int(v)),
    'CONTROL_LAB_ORACLE_CAP': lambda c, v: setattr(c.oracle, 'max_actions', int(v)),
    'CONTROL_LAB_LOG_LEVEL': lambda c, v: setattr(c.logging, 'level', LogLevel(v.upper())),
}


class ConfigManager:
    """Manages configuration loading and access"""

    def __init__(self, config_dir: Optional[str] = None, use_env: bool = True):
        """
        Initialize configuration manager

        Args:
            config_dir: Optional path to configuration directory
            use_env: Apply ``.env`` / ``CONTROL_LAB_*`` overrides
        """
        self.logger = logging.getLogger('control_lab.config')

        if config_dir is None:
            config_dir = Path(__file__).parent.parent.parent / "config"
        self.config_dir = Path(config_dir)
        self.main_config_file = self.config_dir / "main_config.json"
        self.use_env = use_env

        self._config: Optional[ApplicationConfig] = None

    def get_config(self) -> ApplicationConfig:
        """Get the complete application configuration"""
        if self._config is None:
            self._config = self._load_configuration()
        return self._config

    def _load_configuration(self) -> ApplicationConfig:
        """Load configuration from file, or create and save the defaults"""
        if self.main_config_file.exists():
            config = ApplicationConfig.load_from_file(str(self.main_config_file))
            self.logger.debug(f"Configuration loaded from {self.main_config_file}")
        else:
            config = ApplicationConfig()
            try:
                config.save_to_file(str(self.main_config_file))
                self.logger.info(f"Created default configuration at {self.main_config_file}")
            except OSError as e:
                self.logger.warning(f"Could not write default configuration: {e}")

        if self.use_env:
            self._apply_env_overrides(config)

        config.validate()
        return config

    def _apply_env_overrides(self, config: ApplicationConfig):
        """Apply CONTROL_LAB_* variables from the environment or a .env file"""
        load_dotenv(override=False)
        for variable, apply in ENV_OVERRIDES.items():
            value = os.getenv(variable)
            if value is None or value == "":
                continue
            try:
                apply(config, value)
            except ValueError as e:
                raise ConfigurationError(f"Invalid value for {variable}: {value!r}",
                                         config_key=variable, original_exception=e)
            self.logger.debug(f"Configuration override from {variable}")

    def get_solver_config(self) -> SolverConfig:
        return self.get_config().solver

    def get_oracle_config(self) -> OracleConfig:
        return self.get_config().oracle

    def get_experiment_defaults(self) -> ExperimentDefaults:
        return self.get_config().experiment

    def save_configuration(self):
        """Save the current configuration"""
        self.get_config().save_to_file(str(self.main_config_file))
        self.logger.info("Configuration saved successfully")

    def reload(self):
        """Reload configuration from disk"""
        self._config = None
