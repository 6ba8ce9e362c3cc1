"""
Test suite for the Houghton exception hierarchy.
"""

from __future__ import annotations
import pytest
import logging
from houghton.exceptions import (
    HoughtonException,
    ValidationError,
    ArityMismatchError,
    InfiniteOrderError,
    FiniteOrderError,
    CapExceededError,
    NotASubgroupError,
    NotNormalizedError,
    NotCentralizingError,
    UnknownComponentError,
    NotFixedError,
    SupportEscapesBoxError,
    ReportError,
    ConfigurationError,
    InternalInvariantError,
    ErrorCodes,
)

# Configure logging for tests
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


class TestHoughtonException:
    """Test base exception functionality."""

    def test_basic_instantiation(self) -> None:
        """Test basic exception creation."""
        logger.info("Testing basic HoughtonException instantiation")
        exc = HoughtonException("Test message")
        assert str(exc) == "Test message"
        assert exc.message == "Test message"
        assert exc.error_code is None
        assert exc.details == {}
        logger.info("✓ Basic instantiation test passed")

    def test_with_error_code(self) -> None:
        """Test exception with error code."""
        exc = HoughtonException("Test message", error_code="TEST_ERROR")
        assert str(exc) == "[TEST_ERROR] Test message"
        assert exc.error_code == "TEST_ERROR"
        logger.info("✓ Error code test passed")

    def test_repr(self) -> None:
        """Test exception string representation."""
        exc = HoughtonException("Test message", error_code="TEST", details={"key": "value"})
        repr_str = repr(exc)
        logger.info(f"Exception representation: {repr_str}")
        assert "HoughtonException" in repr_str
        assert "Test message" in repr_str
        assert "TEST" in repr_str
        logger.info("✓ String representation test passed")


class TestDomainErrors:
    """Test the default machine codes and context attributes of each subclass."""

    @pytest.mark.parametrize(
        "exc, code",
        [
            (ValidationError("bad table"), ErrorCodes.INVALID_ELEMENT),
            (ArityMismatchError("2 vs 3", left=2, right=3), ErrorCodes.ARITY_MISMATCH),
            (InfiniteOrderError("phi != 0", translations=(1, -1)), ErrorCodes.INFINITE_ORDER),
            (FiniteOrderError("torsion"), ErrorCodes.FINITE_ORDER),
            (CapExceededError("too big", cap=10), ErrorCodes.CAP_EXCEEDED),
            (NotASubgroupError("not inside"), ErrorCodes.NOT_A_SUBGROUP),
            (NotNormalizedError("w"), ErrorCodes.NOT_NORMALIZED),
            (NotCentralizingError("c"), ErrorCodes.NOT_CENTRALIZING),
            (UnknownComponentError("rays", component=(1, 2)), ErrorCodes.UNKNOWN_COMPONENT),
            (NotFixedError("vertex"), ErrorCodes.NOT_FIXED),
            (SupportEscapesBoxError("box", depth=3), ErrorCodes.SUPPORT_ESCAPES_BOX),
            (ReportError("disk"), ErrorCodes.REPORT_WRITE_FAILED),
            (ConfigurationError("cfg"), ErrorCodes.INVALID_CONFIG),
            (InternalInvariantError("bound"), ErrorCodes.INTERNAL_ERROR),
        ],
    )
    def test_default_codes(self, exc: HoughtonException, code: str) -> None:
        logger.info(f"Testing default code of {type(exc).__name__}")
        assert isinstance(exc, HoughtonException)
        assert exc.error_code == code
        assert str(exc).startswith(f"[{code}]")

    def test_code_override(self) -> None:
        """Codes can be narrowed, as the virtually cyclic checks do."""
        exc = FiniteOrderError("w has finite order", error_code=ErrorCodes.FINITE_ORDER_W)
        assert exc.error_code == "finite_order_w"
        exc = InfiniteOrderError("F is infinite", translations=(1, -1), error_code=ErrorCodes.INFINITE_F)
        assert exc.error_code == "infinite_f"
        assert exc.translations == (1, -1)

    def test_context_attributes(self) -> None:
        logger.info("Testing context attributes")
        exc = ValidationError("bad", field_name="exc", invalid_value=[1])
        assert exc.field_name == "exc"
        assert exc.invalid_value == [1]

        exc = ArityMismatchError("mismatch", left=2, right=3)
        assert (exc.left, exc.right) == (2, 3)
        assert exc.details == {"left": 2, "right": 3}

        assert InfiniteOrderError("x", translations=(1, -1)).details == {"m": [1, -1]}
        assert CapExceededError("x", cap=5).cap == 5
        assert UnknownComponentError("x", component=(1, 3)).details == {"component": [1, 3]}
        assert SupportEscapesBoxError("x", depth=4).depth == 4
        assert ReportError("x", log_format="jsonl").log_format == "jsonl"
        assert ConfigurationError("x", config_key="seed").config_key == "seed"
        logger.info("✓ Context attribute test passed")

    def test_catch_by_base_class(self) -> None:
        with pytest.raises(HoughtonException):
            raise NotFixedError("not fixed")


class TestErrorCodes:
    """Test the machine codes emitted on the command line."""

    def test_codes_are_snake_case_strings(self) -> None:
        codes = [v for k, v in vars(ErrorCodes).items() if k.isupper()]
        logger.info(f"Found {len(codes)} error codes")
        assert len(codes) == len(set(codes))
        assert all(isinstance(c, str) and c == c.lower() for c in codes)

    def test_named_codes(self) -> None:
        assert ErrorCodes.ARITY_MISMATCH == "arity_mismatch"
        assert ErrorCodes.INFINITE_ORDER_GENERATOR == "infinite_order_generator"
        assert ErrorCodes.SUPPORT_ESCAPES_BOX == "support_escapes_box"
        logger.info("✓ Named codes test passed")
