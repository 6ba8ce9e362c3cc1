"""
Test suite for Houghton configuration models.
"""

from __future__ import annotations
import os
import pytest
import logging
from pathlib import Path
from pydantic import ValidationError as PydanticValidationError
from houghton.exceptions import ConfigurationError, ErrorCodes
from houghton.models.config import (
    GroupConfig,
    GammaConfig,
    BrownConfig,
    OracleConfig,
    LoggingConfig,
    ToolkitConfig,
)

# Configure logging for tests
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

ENV_VARS = [
    "HOUGHTON_CLOSURE_CAP",
    "HOUGHTON_WITNESS_WINDOW",
    "HOUGHTON_CONE_DEPTH",
    "HOUGHTON_ENUMERATION_LIMIT",
    "HOUGHTON_BOX_DEPTH",
    "HOUGHTON_SEED",
    "HOUGHTON_LOG_LEVEL",
    "HOUGHTON_LOG_FORMAT",
    "HOUGHTON_LOG_PATH",
]


@pytest.fixture
def clean_env(monkeypatch: pytest.MonkeyPatch) -> pytest.MonkeyPatch:
    for var in ENV_VARS:
        monkeypatch.delenv(var, raising=False)
    return monkeypatch


class TestComputationConfigs:
    """Test the per-module computation settings."""

    def test_default_values(self) -> None:
        logger.info("Testing computation config defaults")
        assert GroupConfig().closure_cap == 1_000_000
        assert GammaConfig().witness_window == 10
        assert BrownConfig().cone_depth == 4
        oracle = OracleConfig()
        assert oracle.enumeration_limit == 8
        assert oracle.box_depth == 3
        assert oracle.cases == 200
        assert oracle.seed == 0
        logger.info("✓ Default values test passed")

    def test_bounds(self) -> None:
        logger.info("Testing computation config bounds")
        with pytest.raises(PydanticValidationError):
            GroupConfig(closure_cap=0)
        with pytest.raises(PydanticValidationError):
            GammaConfig(witness_window=0)
        with pytest.raises(PydanticValidationError):
            BrownConfig(cone_depth=9)
        with pytest.raises(PydanticValidationError):
            OracleConfig(enumeration_limit=11)
        with pytest.raises(PydanticValidationError):
            OracleConfig(seed=-1)
        logger.info("✓ Bounds test passed")


class TestLoggingConfig:
    """Test LoggingConfig validation and functionality."""

    def test_default_values(self) -> None:
        config = LoggingConfig()
        assert config.level == "WARNING"
        assert config.format == "jsonl"
        assert config.buffer_size == 100
        assert config.auto_flush is True
        assert config.output_path is None

    def test_log_level_validation(self) -> None:
        """Test log level validation and normalization."""
        logger.info("Testing log level validation")
        assert LoggingConfig(level="debug").level == "DEBUG"
        with pytest.raises(PydanticValidationError):
            LoggingConfig(level="INVALID")
        logger.info("✓ Log level validation test passed")

    def test_format_validation(self) -> None:
        assert LoggingConfig(format="JSON").format == "json"
        with pytest.raises(PydanticValidationError):
            LoggingConfig(format="csv")

    def test_buffer_size_validation(self) -> None:
        with pytest.raises(PydanticValidationError):
            LoggingConfig(buffer_size=5)
        with pytest.raises(PydanticValidationError):
            LoggingConfig(buffer_size=50000)

    def test_output_path_conversion(self) -> None:
        """Test output path string to Path conversion."""
        config = LoggingConfig(output_path="/tmp/oracle.jsonl")
        assert isinstance(config.output_path, Path)
        assert str(config.output_path) == "/tmp/oracle.jsonl"
        assert LoggingConfig(output_path=None).output_path is None
        with pytest.raises(PydanticValidationError):
            LoggingConfig(output_path=42)


class TestToolkitConfig:
    """Test the top-level container."""

    def test_config_merging(self) -> None:
        logger.info("Testing config merging")
        base = ToolkitConfig(oracle_config=OracleConfig(seed=3, cases=50))
        override = ToolkitConfig(oracle_config=OracleConfig(seed=7))
        merged = base.merge_with(override)
        logger.info(f"Merged oracle config: {merged.oracle_config}")
        assert merged.oracle_config.seed == 7
        # unset fields of the override do not clobber the base
        assert merged.oracle_config.cases == 50
        assert base.oracle_config.seed == 3
        logger.info("✓ Config merging test passed")

    def test_from_env_empty(self, clean_env: pytest.MonkeyPatch) -> None:
        config = ToolkitConfig.from_env()
        assert config.group_config.closure_cap == 1_000_000
        assert config.logging_config.level == "WARNING"

    def test_from_env_with_variables(self, clean_env: pytest.MonkeyPatch) -> None:
        logger.info("Testing from_env with environment variables")
        clean_env.setenv("HOUGHTON_CLOSURE_CAP", "5000")
        clean_env.setenv("HOUGHTON_CONE_DEPTH", "3")
        clean_env.setenv("HOUGHTON_SEED", "11")
        clean_env.setenv("HOUGHTON_LOG_LEVEL", "debug")
        clean_env.setenv("HOUGHTON_LOG_PATH", "/tmp/reports.jsonl")
        config = ToolkitConfig.from_env()
        assert config.group_config.closure_cap == 5000
        assert config.brown_config.cone_depth == 3
        assert config.oracle_config.seed == 11
        assert config.logging_config.level == "DEBUG"
        assert config.logging_config.output_path == Path("/tmp/reports.jsonl")
        logger.info("✓ From_env with variables test passed")

    def test_from_env_invalid_values(self, clean_env: pytest.MonkeyPatch) -> None:
        """Malformed numbers fall back to defaults."""
        clean_env.setenv("HOUGHTON_WITNESS_WINDOW", "not_a_number")
        clean_env.setenv("HOUGHTON_BOX_DEPTH", "three")
        config = ToolkitConfig.from_env()
        assert config.gamma_config.witness_window == 10
        assert config.oracle_config.box_depth == 3
        assert os.environ["HOUGHTON_BOX_DEPTH"] == "three"

    def test_from_env_rejected_values(self, clean_env: pytest.MonkeyPatch) -> None:
        """Well-formed values outside a setting's range raise ConfigurationError."""
        clean_env.setenv("HOUGHTON_CLOSURE_CAP", "0")
        with pytest.raises(ConfigurationError) as info:
            ToolkitConfig.from_env()
        assert info.value.error_code == ErrorCodes.INVALID_CONFIG
        assert info.value.config_key == "closure_cap"
        clean_env.delenv("HOUGHTON_CLOSURE_CAP")
        clean_env.setenv("HOUGHTON_LOG_LEVEL", "loud")
        with pytest.raises(ConfigurationError) as info:
            ToolkitConfig.from_env()
        assert info.value.config_key == "level"

    def test_serialization_round_trip(self) -> None:
        config = ToolkitConfig(brown_config=BrownConfig(cone_depth=2))
        restored = ToolkitConfig.model_validate(config.model_dump())
        assert restored == config
