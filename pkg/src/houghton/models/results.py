"""
Result models for standardized command and oracle outcomes.

Provides CommandResult for the command-line surface and OracleReport /
OracleSummary for tracking brute-force verification runs.
"""

from __future__ import annotations
from pydantic import BaseModel, Field
from typing import Optional, Dict, Any
from enum import Enum


class CommandStatus(str, Enum):
    """Enumeration of possible command outcomes."""

    SUCCESS = "success"
    DOMAIN_ERROR = "domain_error"
    USAGE_ERROR = "usage_error"


_EXIT_CODES = {
    CommandStatus.SUCCESS: 0,
    CommandStatus.DOMAIN_ERROR: 1,
    CommandStatus.USAGE_ERROR: 2,
}


class CommandResult(BaseModel):
    """
    Standardized result of one command invocation.

    The payload goes to standard output only on success; failures carry a
    machine-readable error object destined for standard error.

    Example:
        >>> result = CommandResult.success_result({"order": 2})
        >>> assert result.exit_code == 0
    """

    status: CommandStatus = Field(description="Detailed execution status")
    payload: Optional[Any] = Field(None, description="JSON payload for standard output")
    error: Optional[str] = Field(None, description="Machine error code if the command failed")
    detail: Optional[Any] = Field(None, description="Human-readable or structured failure detail")

    @classmethod
    def success_result(cls, payload: Any) -> CommandResult:
        """
        Create a successful command result.

        Args:
            payload: JSON-compatible value to print

        Returns:
            CommandResult with exit code 0
        """
        return cls(status=CommandStatus.SUCCESS, payload=payload)

    @classmethod
    def failure_result(cls, error: str, detail: Any = None) -> CommandResult:
        """
        Create a domain-error command result.

        Args:
            error: Machine error code (see ErrorCodes)
            detail: Additional failure context

        Returns:
            CommandResult with exit code 1
        """
        return cls(status=CommandStatus.DOMAIN_ERROR, error=error, detail=detail)

    @classmethod
    def usage_result(cls, detail: str) -> CommandResult:
        """Malformed command line; exit code 2."""
        return cls(status=CommandStatus.USAGE_ERROR, error="usage", detail=detail)

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.status]

    def error_payload(self) -> Dict[str, Any]:
        """The ``{"error": code, "detail": ...}`` object written on failure."""
        return {"error": self.error, "detail": self.detail}

    def summary(self) -> str:
        if self.status is CommandStatus.SUCCESS:
            return "✓ command succeeded"
        return f"✗ command failed ({self.error}): {self.detail}"


class OracleReport(BaseModel):
    """
    One brute-force comparison.

    Serialized as a JSON line ``{"case": seed, "brute": k, "predicted": k, "match": true}``
    plus the kind of check that produced it.
    """

    case: int = Field(description="Seed of the randomized case")
    kind: str = Field("centralizer_order", description="Which oracle comparison produced this report")
    brute: Any = Field(description="Oracle value")
    predicted: Any = Field(description="Value predicted by the structure theory")
    match: bool = Field(description="Whether oracle and prediction agree exactly")

    @classmethod
    def compare(cls, case: int, brute: Any, predicted: Any, kind: str = "centralizer_order") -> OracleReport:
        return cls(case=case, kind=kind, brute=brute, predicted=predicted, match=brute == predicted)


class OracleSummary(BaseModel):
    """
    Aggregate counts across an oracle run.
    """

    total_cases: int = Field(0, description="Reports recorded")
    matches: int = Field(0, description="Reports whose values agreed")
    failures: list[int] = Field(default_factory=list, description="Seeds of mismatching cases")

    def record_report(self, report: OracleReport) -> None:
        """
        Record a report in the summary.

        Args:
            report: OracleReport to add
        """
        self.total_cases += 1
        if report.match:
            self.matches += 1
        else:
            self.failures.append(report.case)

    @property
    def all_match(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.all_match:
            return f"✓ {self.matches}/{self.total_cases} oracle cases matched"
        return f"✗ {len(self.failures)}/{self.total_cases} oracle cases mismatched: seeds {self.failures}"
