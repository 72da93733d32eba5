"""
Application Bootstrap - Sets up dependency injection container
"""

import logging
from pathlib import Path
from typing import Optional, Union

from .experiments.experiment_runner import ExperimentRunner
from .generators.instance_generator import InstanceGenerator
from .models.config_models import ExperimentDefaults, OracleConfig, SolverConfig
from .service.heuristic_solver import HeuristicSolver
from .service.oracle import BruteForceOracle
from .utils.config_manager import ConfigManager
from .utils.dependency_injection import container
from .utils.logger_setup import PROJECT_ROOT, setup_logging

logger = logging.getLogger('control_lab.bootstrap')


class ApplicationBootstrap:
    """
    Bootstrap class for setting up the application with dependency injection
    """

    def __init__(self, config_dir: Optional[str] = None,
                 log_level: Union[int, str, None] = None, configure_logging: bool = True):
        self.config_dir = config_dir
        self._register_dependencies()
        if configure_logging:
            self._setup_logging(log_level)

    def _setup_logging(self, log_level):
        """Apply the logging section of the configuration; ``log_level`` (--verbose) wins"""
        config_manager = self.get_config_manager()
        settings = config_manager.get_config().logging
        config_path = config_manager.config_dir / settings.config_file
        if not config_path.exists():
            config_path = PROJECT_ROOT / "config" / settings.config_file
        logs_dir = Path(settings.log_directory)
        if not logs_dir.is_absolute():
            logs_dir = PROJECT_ROOT / logs_dir
        try:
            setup_logging(
                level=log_level if log_level is not None else settings.level.value,
                config_path=config_path,
                logs_dir=logs_dir,
            )
            logger.debug("Application bootstrap starting")
        except Exception as e:
            print(f"Error setting up logging: {e}")
            logging.basicConfig(level=logging.INFO)
            logger.info("Using basic logging configuration")

    def _register_dependencies(self):
        """Register configuration sections and services in the DI container"""
        container.clear()
        config_manager = ConfigManager(self.config_dir)
        container.register_instance(ConfigManager, config_manager)

        # configuration sections are injected into the services by type
        config = config_manager.get_config()
        container.register_instance(SolverConfig, config.solver)
        container.register_instance(OracleConfig, config.oracle)
        container.register_instance(ExperimentDefaults, config.experiment)

        container.register_singleton(HeuristicSolver)
        container.register_singleton(BruteForceOracle)
        container.register_singleton(InstanceGenerator)
        container.register_singleton(ExperimentRunner)
        logger.debug("Dependency injection container configured")

    def get_config_manager(self) -> ConfigManager:
        return container.get(ConfigManager)

    def get_solver(self) -> HeuristicSolver:
        return container.get(HeuristicSolver)

    def get_oracle(self) -> BruteForceOracle:
        return container.get(BruteForceOracle)

    def get_instance_generator(self) -> InstanceGenerator:
        return container.get(InstanceGenerator)

    def get_experiment_runner(self) -> ExperimentRunner:
        return container.get(ExperimentRunner)

    def shutdown(self):
        """Clean shutdown of the application"""
        logger.debug("Application shutting down")
        container.clear()


# Global bootstrap instance
_bootstrap: Optional[ApplicationBootstrap] = None


def get_bootstrap(config_dir: Optional[str] = None,
                  log_level: Union[int, str, None] = None) -> ApplicationBootstrap:
    """
    Get or create the application bootstrap instance

    Args:
        config_dir: Optional configuration directory path
        log_level: Console log level override
    """
    global _bootstrap

    if _bootstrap is None:
        _bootstrap = ApplicationBootstrap(config_dir, log_level)

    return _bootstrap


def reset_bootstrap():
    """Drop the process-wide bootstrap (tests and repeated CLI calls)"""
    global _bootstrap
    if _bootstrap is not None:
        _bootstrap.shutdown()
    _bootstrap = None
