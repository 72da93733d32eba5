"""
Tests for the exception hierarchy and the CLI error decorator
"""

from src.models.response_models import ErrorCode
from src.utils.error_handling import (
    ConfigurationError, ControlLabException, ElectionError, ErrorHandler, FormatError,
    OracleLimitError, get_error_handler, handle_errors,
)


def test_format_error_prefixes_line_number():
    error = FormatError("bad vote", 7)
    assert error.message == "line 7: bad vote"
    assert error.line_number == 7
    assert error.error_code is ErrorCode.PARSE_FAILED
    assert FormatError("no line").message == "no line"


def test_error_record_includes_original_exception():
    original = ValueError("root cause")
    record = ElectionError("wrapped", details="context", original_exception=original).to_error_record()
    assert record.code is ErrorCode.INVALID_ELECTION
    assert record.details == "context\nOriginal: root cause"
    assert record.to_dict()["code"] == "INVALID_ELECTION"


def test_oracle_limit_carries_sizes():
    error = OracleLimitError("too big", action_count=10, cap=5)
    assert isinstance(error, ControlLabException)
    assert error.error_code is ErrorCode.ACTION_SPACE_TOO_LARGE
    assert (error.action_count, error.cap) == (10, 5)


def test_handler_counts_by_code(mocker):
    handler = ErrorHandler(logger=mocker.Mock())
    handler.handle_exception(ConfigurationError("bad"))
    handler.handle_exception(ConfigurationError("worse"))
    record = handler.handle_exception(FileNotFoundError(2, "missing", "votes.txt"))
    assert record.code is ErrorCode.FILE_NOT_FOUND
    assert record.message == "File not found: votes.txt"
    statistics = handler.get_error_statistics()
    assert statistics["error_counts"] == {"INVALID_CONFIGURATION": 2, "FILE_NOT_FOUND": 1}
    assert statistics["total_errors"] == 3
    handler.logger.error.assert_called()
    handler.logger.warning.assert_called_once()


def test_handle_errors_prints_one_line(capsys):
    @handle_errors
    def command() -> int:
        raise FormatError("unexpected token", 3)

    assert command() == 1
    assert capsys.readouterr().out == "ERROR: line 3: unexpected token\n"
    assert get_error_handler().get_error_statistics()["error_counts"] == {"PARSE_FAILED": 1}


def test_handle_errors_passes_status_through():
    @handle_errors
    def command() -> int:
        return 0

    assert command() == 0
