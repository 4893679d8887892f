from __future__ import annotations

from typing import Any

from app.core.constants import EXIT_INVARIANT, EXIT_USAGE


class OrderCheckError(Exception):
    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_INVARIANT,
        status_code: int = 500,
        error_code: str = "INTERNAL_ERROR",
        details: dict[str, Any] | None = None,
    ) -> None:
        self.message = message
        self.exit_code = exit_code
        self.status_code = status_code
        self.error_code = error_code
        self.details = details or {}
        super().__init__(message)

    def with_details(self, **details: Any) -> OrderCheckError:
        self.details = {**self.details, **details}
        return self

    def __reduce__(self) -> tuple[Any, ...]:
        # Keeps details intact when errors cross worker process boundaries.
        return _restore_error, (type(self), self.args, self.__dict__.copy())


def _restore_error(cls: type[OrderCheckError], args: tuple[Any, ...], state: dict[str, Any]) -> OrderCheckError:
    error = cls.__new__(cls)
    error.args = args
    error.__dict__.update(state)
    return error


class InputError(OrderCheckError):
    def __init__(
        self,
        message: str = "Invalid input",
        error_code: str = "INVALID_INPUT",
        details: dict[str, Any] | None = None,
        status_code: int = 400,
    ) -> None:
        super().__init__(
            message=message,
            exit_code=EXIT_USAGE,
            status_code=status_code,
            error_code=error_code,
            details=details,
        )


class OutOfRange(InputError):
    def __init__(self, message: str = "Element count out of range", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="OUT_OF_RANGE", details=details)


class ReflexiveInput(InputError):
    def __init__(self, message: str = "Relation is reflexive", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="REFLEXIVE_INPUT", details=details)


class CyclicInput(InputError):
    def __init__(self, message: str = "Relation contains a cycle", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="CYCLIC_INPUT", details=details)


class BadHeader(InputError):
    def __init__(self, message: str = "Bad digraph6 header", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="BAD_HEADER", details=details)


class BadLength(InputError):
    def __init__(self, message: str = "Bad digraph6 payload length", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="BAD_LENGTH", details=details)


class BadByte(InputError):
    def __init__(self, message: str = "Bad digraph6 byte", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="BAD_BYTE", details=details)


class BadCanonicalRecord(InputError):
    def __init__(self, message: str = "Bad canonical record", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="BAD_CANONICAL_RECORD", details=details)


class ZeroPolynomial(InputError):
    def __init__(self, message: str = "Zero polynomial", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="ZERO_POLYNOMIAL", details=details)


class InputIoError(InputError):
    def __init__(self, message: str = "I/O error", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="IO_ERROR", details=details)


class CheckpointCorrupt(InputError):
    def __init__(self, message: str = "Checkpoint is corrupt", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="CHECKPOINT_CORRUPT", details=details)


class ConfigMismatch(InputError):
    def __init__(
        self,
        message: str = "Checkpoint was written by a different configuration",
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message=message, error_code="CONFIG_MISMATCH", details=details, status_code=409)


class InvariantViolation(OrderCheckError):
    def __init__(
        self,
        message: str = "Internal invariant violated",
        error_code: str = "INVARIANT_VIOLATION",
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            exit_code=EXIT_INVARIANT,
            status_code=500,
            error_code=error_code,
            details=details,
        )


class HStarMismatch(InvariantViolation):
    def __init__(self, message: str = "h* routes disagree", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="HSTAR_MISMATCH", details=details)


class NotInteger(InvariantViolation):
    def __init__(self, message: str = "h* entry is not an integer", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="NOT_INTEGER", details=details)


class NegativeEntry(InvariantViolation):
    def __init__(self, message: str = "h* entry is negative", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="NEGATIVE_ENTRY", details=details)


class DegreeMismatch(InvariantViolation):
    def __init__(self, message: str = "Polynomial degree mismatch", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="DEGREE_MISMATCH", details=details)


class SweepCountMismatch(InvariantViolation):
    def __init__(self, message: str = "Poset count mismatch", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="SWEEP_COUNT_MISMATCH", details=details)


class InvalidPoset(InputError):
    def __init__(self, message: str = "Not a naturally labeled poset", details: dict[str, Any] | None = None) -> None:
        super().__init__(message=message, error_code="INVALID_POSET", details=details)
