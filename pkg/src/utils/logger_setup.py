"""
Logging setup for the election-control lab
Configures logging from config/logging_config.json
"""

import json
import logging
import logging.config
import logging.handlers
from pathlib import Path
from typing import Optional, Union

import colorlog
from pythonjsonlogger import jsonlogger


PROJECT_ROOT = Path(__file__).parent.parent.parent
ROOT_LOGGER_NAME = 'control_lab'


def setup_logging(
    level: Union[int, str, None] = None,
    config_path: Optional[Union[str, Path]] = None,
    logs_dir: Optional[Union[str, Path]] = None,
):
    """
    Setup logging configuration

    Args:
        level: Console level override (e.g. DEBUG for --verbose)
        config_path: Path to a dictConfig JSON file
        logs_dir: Directory for log files
    """
    config_path = Path(config_path) if config_path else PROJECT_ROOT / "config" / "logging_config.json"
    logs_dir = Path(logs_dir) if logs_dir else PROJECT_ROOT / "logs"
    logs_dir.mkdir(parents=True, exist_ok=True)

    if config_path.exists():
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                config = json.load(f)

            for handler_config in config.get('handlers', {}).values():
                filename = handler_config.get('filename')
                if filename and not Path(filename).is_absolute():
                    handler_config['filename'] = str(logs_dir / filename)
                if level is not None and handler_config.get('class') == 'logging.StreamHandler':
                    handler_config['level'] = _level_name(level)

            logging.config.dictConfig(config)

        except (json.JSONDecodeError, KeyError, ValueError) as e:
            setup_basic_logging(_level_value(level), logs_dir)
            logging.getLogger(ROOT_LOGGER_NAME).warning(f"Error loading logging config, using basic setup: {e}")
    else:
        setup_basic_logging(_level_value(level), logs_dir)
        logging.getLogger(ROOT_LOGGER_NAME).info("No logging config found, using basic setup")


def setup_basic_logging(log_level: int, logs_dir: Path):
    """
    Fallback: coloured console output plus a JSON log file

    Args:
        log_level: Console log level
        logs_dir: Directory for log files
    """
    lab_logger = logging.getLogger(ROOT_LOGGER_NAME)
    lab_logger.setLevel(logging.DEBUG)
    lab_logger.handlers.clear()
    lab_logger.propagate = False

    console_handler = colorlog.StreamHandler()
    console_handler.setLevel(log_level)
    console_handler.setFormatter(colorlog.ColoredFormatter(
        '%(log_color)s%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    ))
    lab_logger.addHandler(console_handler)

    file_handler = logging.handlers.RotatingFileHandler(
        logs_dir / "control_lab.log",
        maxBytes=10 * 1024 * 1024,
        backupCount=5,
        encoding='utf-8'
    )
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(jsonlogger.JsonFormatter(
        '%(asctime)s %(name)s %(levelname)s %(funcName)s %(lineno)d %(message)s'
    ))
    lab_logger.addHandler(file_handler)


def _level_value(level: Union[int, str, None]) -> int:
    if level is None:
        return logging.INFO
    if isinstance(level, int):
        return level
    return logging.getLevelName(level.upper())


def _level_name(level: Union[int, str]) -> str:
    return logging.getLevelName(level) if isinstance(level, int) else level.upper()


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger below the lab's root logger

    Args:
        name: Short module name, e.g. ``solver``
    """
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")
