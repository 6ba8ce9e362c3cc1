"""
Configuration models for the Houghton toolkit using Pydantic v2.
"""

from __future__ import annotations
from pathlib import Path
from typing import Optional, Any
from pydantic import BaseModel, Field, field_validator
from pydantic import ValidationError as PydanticValidationError
import os

from ..exceptions import ConfigurationError


class GroupConfig(BaseModel):
    """
    Finite subgroup computation settings.

    Closures list every element, so the cap (checked against the group
    order before enumeration) guards against generating an enormous
    symmetric group.
    """

    closure_cap: int = Field(1_000_000, ge=1, description="Maximum number of elements a closure may produce")


class GammaConfig(BaseModel):
    """Γ-graph witness checking settings."""

    witness_window: int = Field(10, ge=1, le=10_000, description="Iterates checked past each edge threshold")


class BrownConfig(BaseModel):
    """Brown poset exploration settings."""

    cone_depth: int = Field(4, ge=0, le=8, description="Total translation degree explored by cone enumeration")


class OracleConfig(BaseModel):
    """
    Brute-force oracle settings.

    Boxes with at most ``enumeration_limit`` points are searched by full
    factorial enumeration; larger boxes are searched orbit by orbit, or
    compared by sympy cycle structure for conjugacy.
    """

    enumeration_limit: int = Field(8, ge=1, le=10, description="Largest box (in points) searched exhaustively")
    box_depth: int = Field(3, ge=1, le=12, description="Default truncation depth N of oracle boxes")
    cases: int = Field(200, ge=1, description="Randomized cases per verification run")
    seed: int = Field(0, ge=0, description="Base seed for randomized cases")


class LoggingConfig(BaseModel):
    """
    Report logging configuration.

    Controls how oracle reports are buffered and persisted.
    """

    level: str = Field("WARNING", description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)")
    format: str = Field("jsonl", description="Report format (jsonl, json)")
    buffer_size: int = Field(100, ge=10, le=10000, description="Number of reports to buffer before flushing")
    auto_flush: bool = Field(True, description="Automatically flush buffer when full")
    output_path: Optional[Path] = Field(None, description="Path to report file (None for stdout)")

    @field_validator("level")
    def validate_log_level(cls, v: str) -> str:
        """Ensure valid logging level."""
        valid_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        v_upper = v.upper()
        if v_upper not in valid_levels:
            raise ValueError(f"Invalid log level '{v}'. Must be one of: {', '.join(sorted(valid_levels))}")
        return v_upper

    @field_validator("format")
    def validate_format(cls, v: str) -> str:
        """Ensure valid report format."""
        valid_formats = {"jsonl", "json"}
        if v.lower() not in valid_formats:
            raise ValueError(f"Invalid format '{v}'. Must be one of: {', '.join(sorted(valid_formats))}")
        return v.lower()

    @field_validator("output_path", mode="before")
    def validate_output_path(cls, v: Any) -> Optional[Path]:
        """Convert string paths to Path objects."""
        if v is None:
            return None
        if isinstance(v, str):
            return Path(v)
        if isinstance(v, Path):
            return v
        raise ValueError(f"Invalid path type: {type(v)}")


class ToolkitConfig(BaseModel):
    """
    Top-level configuration container with merge capabilities.

    Provides cascading configuration hierarchy:
    defaults → environment → command line
    """

    group_config: GroupConfig = Field(default_factory=GroupConfig, description="Finite subgroup settings")
    gamma_config: GammaConfig = Field(default_factory=GammaConfig, description="Γ-graph settings")
    brown_config: BrownConfig = Field(default_factory=BrownConfig, description="Brown poset settings")
    oracle_config: OracleConfig = Field(default_factory=OracleConfig, description="Oracle settings")
    logging_config: LoggingConfig = Field(default_factory=LoggingConfig, description="Report logging settings")

    def merge_with(self, other: ToolkitConfig) -> ToolkitConfig:
        """
        Merge this configuration with another, with other taking precedence.

        Args:
            other: Configuration to merge with (higher precedence)

        Returns:
            New ToolkitConfig instance with merged settings

        Example:
            >>> base = ToolkitConfig()
            >>> override = ToolkitConfig(oracle_config=OracleConfig(seed=7))
            >>> merged = base.merge_with(override)
            >>> assert merged.oracle_config.seed == 7
        """
        merged: dict[str, BaseModel] = {}
        for name in type(self).model_fields:
            mine: BaseModel = getattr(self, name)
            theirs: BaseModel = getattr(other, name)
            merged[name] = type(mine)(**{**mine.model_dump(), **theirs.model_dump(exclude_unset=True)})
        return ToolkitConfig(**merged)

    @classmethod
    def from_env(cls) -> ToolkitConfig:
        """
        Create configuration from environment variables.

        Environment variables should be prefixed with 'HOUGHTON_':
        - HOUGHTON_CLOSURE_CAP=5000
        - HOUGHTON_CONE_DEPTH=3
        - HOUGHTON_LOG_LEVEL=DEBUG

        Returns:
            ToolkitConfig instance with environment variable overrides

        Raises:
            ConfigurationError: when a setting rejects a variable's value
        """
        env_config: dict[str, BaseModel] = {}

        group_env = _int_env({"closure_cap": "HOUGHTON_CLOSURE_CAP"})
        if group_env:
            env_config["group_config"] = _env_section(GroupConfig, group_env)

        gamma_env = _int_env({"witness_window": "HOUGHTON_WITNESS_WINDOW"})
        if gamma_env:
            env_config["gamma_config"] = _env_section(GammaConfig, gamma_env)

        brown_env = _int_env({"cone_depth": "HOUGHTON_CONE_DEPTH"})
        if brown_env:
            env_config["brown_config"] = _env_section(BrownConfig, brown_env)

        oracle_env = _int_env(
            {
                "enumeration_limit": "HOUGHTON_ENUMERATION_LIMIT",
                "box_depth": "HOUGHTON_BOX_DEPTH",
                "seed": "HOUGHTON_SEED",
            }
        )
        if oracle_env:
            env_config["oracle_config"] = _env_section(OracleConfig, oracle_env)

        logging_env: dict[str, Any] = {}
        if "HOUGHTON_LOG_LEVEL" in os.environ:
            logging_env["level"] = os.environ["HOUGHTON_LOG_LEVEL"]
        if "HOUGHTON_LOG_FORMAT" in os.environ:
            logging_env["format"] = os.environ["HOUGHTON_LOG_FORMAT"]
        if "HOUGHTON_LOG_PATH" in os.environ:
            logging_env["output_path"] = Path(os.environ["HOUGHTON_LOG_PATH"])

        if logging_env:
            env_config["logging_config"] = _env_section(LoggingConfig, logging_env)

        return cls(**env_config)


def _env_section(model: type[BaseModel], values: dict[str, Any]) -> BaseModel:
    try:
        return model(**values)
    except PydanticValidationError as e:
        first = e.errors()[0]
        key = str(first["loc"][0]) if first["loc"] else None
        raise ConfigurationError(
            f"Invalid {model.__name__} setting {key}: {first['msg']}",
            config_key=key,
            details={"value": str(values.get(key)) if key else None},
        ) from e


def _int_env(names: dict[str, str]) -> dict[str, int]:
    values: dict[str, int] = {}
    for field_name, env_name in names.items():
        if env_name in os.environ:
            try:
                values[field_name] = int(os.environ[env_name])
            except ValueError:
                pass  # Use default
    return values
