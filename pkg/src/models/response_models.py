"""
Error records and error codes shared across the lab
"""

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, Optional


class ErrorCode(Enum):
    """Error codes for different failure types"""
    # Election errors
    INVALID_ELECTION = "INVALID_ELECTION"
    EMPTY_VOTE_LIST = "EMPTY_VOTE_LIST"
    UNKNOWN_CANDIDATE = "UNKNOWN_CANDIDATE"
    INVALID_LEVEL = "INVALID_LEVEL"

    # Control instance errors
    INVALID_INSTANCE = "INVALID_INSTANCE"
    ACTION_MISMATCH = "ACTION_MISMATCH"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"
    UNSUPPORTED_CONTROL = "UNSUPPORTED_CONTROL"

    # Oracle errors
    ACTION_SPACE_TOO_LARGE = "ACTION_SPACE_TOO_LARGE"

    # File format errors
    PARSE_FAILED = "PARSE_FAILED"
    FILE_NOT_FOUND = "FILE_NOT_FOUND"
    FILE_ACCESS_DENIED = "FILE_ACCESS_DENIED"

    # Experiment errors
    NON_PAPER_CELL = "NON_PAPER_CELL"
    CELL_FAILED = "CELL_FAILED"

    # Configuration errors
    INVALID_CONFIGURATION = "INVALID_CONFIGURATION"
    INVALID_REQUEST = "INVALID_REQUEST"


@dataclass
class ErrorRecord:
    """Error information for failed operations"""
    code: ErrorCode
    message: str
    details: Optional[str] = None
    timestamp: datetime = field(default_factory=datetime.now)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            'code': self.code.value,
            'message': self.message,
            'details': self.details,
            'timestamp': self.timestamp.isoformat()
        }
