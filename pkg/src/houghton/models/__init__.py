"""
Houghton toolkit configuration and result models.
"""

from __future__ import annotations

from .config import (
    GroupConfig,
    GammaConfig,
    BrownConfig,
    OracleConfig,
    LoggingConfig,
    ToolkitConfig,
)
from .results import (
    CommandStatus,
    CommandResult,
    OracleReport,
    OracleSummary,
)

__all__ = [
    # Configuration models
    "GroupConfig",
    "GammaConfig",
    "BrownConfig",
    "OracleConfig",
    "LoggingConfig",
    "ToolkitConfig",
    # Result models
    "CommandStatus",
    "CommandResult",
    "OracleReport",
    "OracleSummary",
]
