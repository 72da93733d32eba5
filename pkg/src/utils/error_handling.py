"""
Error handling for the election-control lab
"""

import functools
import logging
import traceback
from datetime import datetime
from typing import Any, Callable, Dict, Optional

from src.models.response_models import ErrorCode, ErrorRecord


class ControlLabException(Exception):
    """Base exception for the lab"""

    def __init__(
        self,
        message: str,
        error_code: ErrorCode = ErrorCode.INVALID_REQUEST,
        details: Optional[str] = None,
        original_exception: Optional[Exception] = None
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.details = details
        self.original_exception = original_exception
        self.timestamp = datetime.now()

    def to_error_record(self) -> ErrorRecord:
        """Convert to ErrorRecord model"""
        details = self.details
        if self.original_exception:
            details = f"{details}\nOriginal: {self.original_exception}" if details else str(self.original_exception)

        return ErrorRecord(
            code=self.error_code,
            message=self.message,
            details=details,
            timestamp=self.timestamp
        )


class ElectionError(ControlLabException):
    """Malformed elections and invalid winner queries"""

    def __init__(self, message: str, error_code: ErrorCode = ErrorCode.INVALID_ELECTION, **kwargs):
        super().__init__(message, error_code=error_code, **kwargs)


class InstanceError(ControlLabException):
    """Malformed control instances, mismatched actions and budget violations"""

    def __init__(self, message: str, error_code: ErrorCode = ErrorCode.INVALID_INSTANCE, **kwargs):
        super().__init__(message, error_code=error_code, **kwargs)


class OracleLimitError(ControlLabException):
    """The exhaustive action space exceeds the configured cap"""

    def __init__(self, message: str, action_count: int, cap: int, **kwargs):
        super().__init__(message, error_code=ErrorCode.ACTION_SPACE_TOO_LARGE, **kwargs)
        self.action_count = action_count
        self.cap = cap


class FormatError(ControlLabException):
    """Errors reading the election / instance text formats"""

    def __init__(self, message: str, line_number: Optional[int] = None, **kwargs):
        kwargs.setdefault('error_code', ErrorCode.PARSE_FAILED)
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message, **kwargs)
        self.line_number = line_number


class ConfigurationError(ControlLabException):
    """Errors related to configuration"""

    def __init__(self, message: str, config_key: Optional[str] = None, **kwargs):
        super().__init__(message, error_code=ErrorCode.INVALID_CONFIGURATION, **kwargs)
        self.config_key = config_key


class ExperimentError(ControlLabException):
    """Errors raised by the experiment harness"""

    def __init__(self, message: str, error_code: ErrorCode = ErrorCode.CELL_FAILED, **kwargs):
        super().__init__(message, error_code=error_code, **kwargs)


class ErrorHandler:
    """Centralized error logging and counting"""

    def __init__(self, logger: Optional[logging.Logger] = None):
        self.logger = logger or logging.getLogger('control_lab.errors')
        self._error_counts: Dict[str, int] = {}

    def handle_exception(
        self,
        exception: Exception,
        context: Optional[Dict[str, Any]] = None,
    ) -> ErrorRecord:
        """Log an exception and convert it to an ErrorRecord"""
        if isinstance(exception, ControlLabException):
            error = exception.to_error_record()
        else:
            error = self._convert_standard_exception(exception)

        if context:
            error.details = f"{error.details}\nContext: {context}" if error.details else f"Context: {context}"

        self._log_error(error, exception, context)
        self._error_counts[error.code.value] = self._error_counts.get(error.code.value, 0) + 1
        return error

    def _convert_standard_exception(self, exception: Exception) -> ErrorRecord:
        """Convert standard Python exceptions to ErrorRecord"""
        error_code = ErrorCode.INVALID_REQUEST
        message = str(exception)

        if isinstance(exception, FileNotFoundError):
            error_code = ErrorCode.FILE_NOT_FOUND
            message = f"File not found: {getattr(exception, 'filename', None) or 'unknown file'}"
        elif isinstance(exception, PermissionError):
            error_code = ErrorCode.FILE_ACCESS_DENIED
            message = f"Access denied: {getattr(exception, 'filename', None) or 'unknown file'}"

        return ErrorRecord(
            code=error_code,
            message=message,
            details=traceback.format_exc()
        )

    def _log_error(
        self,
        error: ErrorRecord,
        exception: Exception,
        context: Optional[Dict[str, Any]]
    ):
        """Log error with a level matching its code"""
        log_data = {
            'error_code': error.code.value,
            'exception_type': type(exception).__name__,
        }
        if context:
            log_data['context'] = context

        if error.code in (ErrorCode.INVALID_CONFIGURATION, ErrorCode.CELL_FAILED):
            self.logger.error(error.message, extra=log_data)
        elif error.code in (ErrorCode.PARSE_FAILED, ErrorCode.FILE_NOT_FOUND, ErrorCode.NON_PAPER_CELL):
            self.logger.warning(error.message, extra=log_data)
        else:
            self.logger.error(error.message, extra=log_data)

    def get_error_statistics(self) -> Dict[str, Any]:
        """Error counts by code"""
        return {
            'error_counts': dict(self._error_counts),
            'total_errors': sum(self._error_counts.values())
        }

    def reset_statistics(self):
        self._error_counts.clear()


_global_error_handler = ErrorHandler()


def get_error_handler() -> ErrorHandler:
    """Get the global error handler instance"""
    return _global_error_handler


def handle_errors(func: Callable[..., int]) -> Callable[..., int]:
    """
    Decorator for CLI commands: a failure prints one ``ERROR: ...`` line and
    returns exit status 1.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except KeyboardInterrupt:
            print("\nInterrupted by user")
            return 130
        except Exception as e:
            error = get_error_handler().handle_exception(e, {'command': func.__name__})
            print(f"ERROR: {error.message}")
            return 1

    return wrapper
