"""
Exception hierarchy shared by every package
"""

from typing import Any, Dict


class ShiftedPowerError(Exception):
    """Base class for all library errors"""

    code = "error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        """Machine-readable form used by the CLI"""
        payload: Dict[str, Any] = {'error': self.code, 'message': self.message}
        if self.details:
            payload['details'] = {k: _plain(v) for k, v in self.details.items()}
        return payload


def _plain(value: Any) -> Any:
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return str(value)


class ScalarDivisionError(ShiftedPowerError, ZeroDivisionError):
    code = "division_by_zero"


class FieldMismatchError(ShiftedPowerError, TypeError):
    code = "field_mismatch"


class InexactDivisionError(ShiftedPowerError, ArithmeticError):
    code = "inexact_division"


class DimensionMismatchError(ShiftedPowerError, ValueError):
    code = "dimension_mismatch"


class PreconditionError(ShiftedPowerError, ValueError):
    code = "precondition_violation"


class DomainError(ShiftedPowerError, ValueError):
    code = "domain_error"


class DuplicateNodeError(ShiftedPowerError, ValueError):
    code = "duplicate_node"


class EnumerationTooLargeError(ShiftedPowerError, ValueError):
    code = "enumeration_too_large"


class RootIsolationError(ShiftedPowerError, ArithmeticError):
    code = "root_isolation_failure"


class MalformedInputError(ShiftedPowerError, ValueError):
    code = "malformed_input"


class CertificateError(ShiftedPowerError, AssertionError):
    """Raised when a constructed object fails its own exact re-verification"""

    code = "certificate_failure"
