"""
Houghton toolkit exception hierarchy for comprehensive error handling.
"""
from __future__ import annotations
from typing import Optional, Dict, Any


class HoughtonException(Exception):
    """
    Base exception for all toolkit errors.

    Args:
        message: Error description
        error_code: Optional error code for programmatic handling
        details: Additional error context
    """

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ) -> None:
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.details = details or {}

    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message

    def __repr__(self) -> str:
        return (
            f"{self.__class__.__name__}("
            f"message='{self.message}', "
            f"error_code={self.error_code!r}, "
            f"details={self.details!r})"
        )


class ValidationError(HoughtonException):
    """
    Raised when an encoding is malformed or violates a value invariant.

    Examples:
        Non-bijective exceptional table, point off the rays,
        malformed element JSON, negative threshold
    """

    def __init__(
        self,
        message: str,
        field_name: Optional[str] = None,
        invalid_value: Any = None,
        **kwargs: Any
    ) -> None:
        kwargs.setdefault("error_code", ErrorCodes.INVALID_ELEMENT)
        super().__init__(message, **kwargs)
        self.field_name = field_name
        self.invalid_value = invalid_value


class ArityMismatchError(HoughtonException):
    """
    Raised when two values of different arity meet in one operation.

    Values never embed implicitly into a larger Houghton group.
    """

    def __init__(
        self,
        message: str,
        left: Optional[int] = None,
        right: Optional[int] = None,
        **kwargs: Any
    ) -> None:
        kwargs.setdefault("error_code", ErrorCodes.ARITY_MISMATCH)
        kwargs.setdefault("details", {"left": left, "right": right})
        super().__init__(message, **kwargs)
        self.left = left
        self.right = right


class InfiniteOrderError(HoughtonException):
    """
    Raised when an operation defined for finite-order elements receives
    an element with non-zero translation vector.
    """

    def __init__(
        self,
        message: str,
        translations: Optional[tuple[int, ...]] = None,
        **kwargs: Any
    ) -> None:
        kwargs.setdefault("error_code", ErrorCodes.INFINITE_ORDER)
        kwargs.setdefault("details", {"m": list(translations) if translations is not None else None})
        super().__init__(message, **kwargs)
        self.translations = translations


class FiniteOrderError(HoughtonException):
    """Raised when an infinite-order element is required but a torsion element is given."""

    def __init__(self, message: str, **kwargs: Any) -> None:
        kwargs.setdefault("error_code", ErrorCodes.FINITE_ORDER)
        super().__init__(message, **kwargs)


class CapExceededError(HoughtonException):
    """
    Raised when a subgroup closure grows past the configured element cap.
    """

    def __init__(
        self,
        message: str,
        cap: Optional[int] = None,
        **kwargs: Any
    ) -> None:
        kwargs.setdefault("error_code", ErrorCodes.CAP_EXCEEDED)
        kwargs.setdefault("details", {"cap": cap})
        super().__init__(message, **kwargs)
        self.cap = cap


class NotASubgroupError(HoughtonException):
    """Raised when a claimed subgroup is not contained in the ambient group."""

    def __init__(self, message: str, **kwargs: Any) -> None:
        kwargs.setdefault("error_code", ErrorCodes.NOT_A_SUBGROUP)
        super().__init__(message, **kwargs)


class NotNormalizedError(HoughtonException):
    """
    Raised when the infinite-order element of a virtually cyclic pair does
    not normalize the finite part.
    """

    def __init__(self, message: str, **kwargs: Any) -> None:
        kwargs.setdefault("error_code", ErrorCodes.NOT_NORMALIZED)
        super().__init__(message, **kwargs)


class NotCentralizingError(HoughtonException):
    """Raised when an element expected to commute with the target does not."""

    def __init__(self, message: str, **kwargs: Any) -> None:
        kwargs.setdefault("error_code", ErrorCodes.NOT_CENTRALIZING)
        super().__init__(message, **kwargs)


class UnknownComponentError(HoughtonException):
    """Raised when a ray set is not a path component of the element's Γ-graph."""

    def __init__(
        self,
        message: str,
        component: Optional[tuple[int, ...]] = None,
        **kwargs: Any
    ) -> None:
        kwargs.setdefault("error_code", ErrorCodes.UNKNOWN_COMPONENT)
        kwargs.setdefault("details", {"component": list(component) if component is not None else None})
        super().__init__(message, **kwargs)
        self.component = component


class NotFixedError(HoughtonException):
    """Raised when a Brown vertex is not fixed by the given finite subgroup."""

    def __init__(self, message: str, **kwargs: Any) -> None:
        kwargs.setdefault("error_code", ErrorCodes.NOT_FIXED)
        super().__init__(message, **kwargs)


class SupportEscapesBoxError(HoughtonException):
    """
    Raised when an oracle receives data whose support leaves the truncation box.
    """

    def __init__(
        self,
        message: str,
        depth: Optional[int] = None,
        **kwargs: Any
    ) -> None:
        kwargs.setdefault("error_code", ErrorCodes.SUPPORT_ESCAPES_BOX)
        kwargs.setdefault("details", {"depth": depth})
        super().__init__(message, **kwargs)
        self.depth = depth


class ReportError(HoughtonException):
    """
    Raised when report logging operations fail.

    Examples:
        File write permission error, unsupported report format,
        record serialization error
    """

    def __init__(
        self,
        message: str,
        log_format: Optional[str] = None,
        **kwargs: Any
    ) -> None:
        kwargs.setdefault("error_code", ErrorCodes.REPORT_WRITE_FAILED)
        super().__init__(message, **kwargs)
        self.log_format = log_format


class ConfigurationError(HoughtonException):
    """
    Raised when configuration operations fail.

    Examples:
        Invalid configuration value, malformed environment override
    """

    def __init__(
        self,
        message: str,
        config_key: Optional[str] = None,
        **kwargs: Any
    ) -> None:
        kwargs.setdefault("error_code", ErrorCodes.INVALID_CONFIG)
        super().__init__(message, **kwargs)
        self.config_key = config_key


class InternalInvariantError(HoughtonException):
    """Raised when a bound that holds for every valid element is exceeded."""

    def __init__(self, message: str, **kwargs: Any) -> None:
        kwargs.setdefault("error_code", ErrorCodes.INTERNAL_ERROR)
        super().__init__(message, **kwargs)


# Common error code constants
class ErrorCodes:
    """Standard error codes for programmatic error handling."""

    # Validation errors
    INVALID_ELEMENT = "invalid_element"
    INVALID_JSON = "invalid_json"
    INVALID_CONFIG = "invalid_config"
    ARITY_MISMATCH = "arity_mismatch"

    # Order errors
    INFINITE_ORDER = "infinite_order"
    INFINITE_ORDER_GENERATOR = "infinite_order_generator"
    FINITE_ORDER = "finite_order"

    # Subgroup errors
    CAP_EXCEEDED = "cap_exceeded"
    NOT_A_SUBGROUP = "not_a_subgroup"
    NOT_NORMALIZED = "not_normalized"
    INFINITE_F = "infinite_f"
    FINITE_ORDER_W = "finite_order_w"

    # Centralizer errors
    NOT_CENTRALIZING = "not_centralizing"
    UNKNOWN_COMPONENT = "unknown_component"

    # Brown complex errors
    NOT_FIXED = "not_fixed"

    # Oracle errors
    SUPPORT_ESCAPES_BOX = "support_escapes_box"
    ORACLE_MISMATCH = "oracle_mismatch"

    # Reporting errors
    REPORT_WRITE_FAILED = "report_write_failed"

    INTERNAL_ERROR = "internal_error"
