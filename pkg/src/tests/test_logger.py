"""
Test suite for the buffered oracle report logger and result models.
"""

from __future__ import annotations
import io
import json
import logging
from pathlib import Path

import pytest

from houghton.core.logger import LogBuffer, ReportLogger, format_json_line, read_reports
from houghton.exceptions import ReportError
from houghton.models import CommandResult, CommandStatus, LoggingConfig, OracleReport, OracleSummary

# Configure logging for tests
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def _reports(count: int) -> list[OracleReport]:
    return [OracleReport.compare(case, 48, 48) for case in range(count)]


class TestLogBuffer:
    """Test the bounded record buffer."""

    def test_signals_when_full(self) -> None:
        buffer = LogBuffer(max_size=2)
        report_a, report_b = _reports(2)
        assert buffer.add_record(report_a) is False
        assert buffer.add_record(report_b) is True
        assert buffer.size == 2
        assert buffer.flush_all() == [report_a, report_b]
        assert buffer.size == 0

    def test_manual_flush_never_signals(self) -> None:
        buffer = LogBuffer(max_size=1, auto_flush=False)
        assert buffer.add_record(_reports(1)[0]) is False
        assert buffer.size == 1


class TestReportLogger:
    """Test JSONL and JSON report output."""

    def test_writes_jsonl(self, tmp_path: Path) -> None:
        logger.info("Testing JSONL report output")
        out = tmp_path / "reports" / "oracle.jsonl"
        with ReportLogger(output_path=out, config=LoggingConfig(buffer_size=10)) as reports:
            for report in _reports(5):
                reports.record(report)
        lines = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
        assert len(lines) == 5
        assert lines[0] == {"case": 0, "kind": "centralizer_order", "brute": 48, "predicted": 48, "match": True}
        logger.info("✓ JSONL output test passed")

    def test_flushes_when_buffer_fills(self) -> None:
        stream = io.StringIO()
        reports = ReportLogger(config=LoggingConfig(buffer_size=10), stream=stream)
        for report in _reports(10):
            reports.record(report)
        # the tenth record fills the buffer
        assert len(stream.getvalue().splitlines()) == 10
        reports.record(OracleReport.compare(10, 1, 2))
        assert len(stream.getvalue().splitlines()) == 10
        reports.close()
        last = json.loads(stream.getvalue().splitlines()[-1])
        assert last["match"] is False

    def test_holds_records_without_auto_flush(self) -> None:
        stream = io.StringIO()
        reports = ReportLogger(config=LoggingConfig(buffer_size=10, auto_flush=False), stream=stream)
        for report in _reports(12):
            reports.record(report)
        assert stream.getvalue() == ""
        reports.close()
        assert len(stream.getvalue().splitlines()) == 12

    def test_writes_json_array(self, tmp_path: Path) -> None:
        out = tmp_path / "oracle.json"
        with ReportLogger(output_path=out, config=LoggingConfig(format="json", buffer_size=10)) as reports:
            for report in _reports(12):
                reports.record(report)
        data = json.loads(out.read_text(encoding="utf-8"))
        assert [d["case"] for d in data] == list(range(12))
        assert read_reports(out) == data

    def test_read_reports_jsonl(self, tmp_path: Path) -> None:
        out = tmp_path / "oracle.jsonl"
        with ReportLogger(output_path=out) as reports:
            for report in _reports(3):
                reports.record(report)
        assert [r["case"] for r in read_reports(out)] == [0, 1, 2]

    def test_closed_logger_rejects_records(self) -> None:
        reports = ReportLogger(stream=io.StringIO())
        reports.close()
        with pytest.raises(ReportError):
            reports.record(_reports(1)[0])

    def test_missing_report_file(self, tmp_path: Path) -> None:
        with pytest.raises(ReportError):
            read_reports(tmp_path / "absent.jsonl")

    def test_identical_runs_identical_bytes(self) -> None:
        first, second = io.StringIO(), io.StringIO()
        for stream in (first, second):
            with ReportLogger(stream=stream) as reports:
                for report in _reports(4):
                    reports.record(report)
        assert first.getvalue() == second.getvalue()
        assert format_json_line({"a": [1, 2]}) == '{"a":[1,2]}'


class TestResultModels:
    """Test CommandResult and OracleSummary."""

    def test_command_results(self) -> None:
        logger.info("Testing command results")
        ok = CommandResult.success_result({"order": 2})
        assert ok.status is CommandStatus.SUCCESS
        assert ok.exit_code == 0
        failed = CommandResult.failure_result("arity_mismatch", "2 vs 3")
        assert failed.exit_code == 1
        assert failed.error_payload() == {"error": "arity_mismatch", "detail": "2 vs 3"}
        assert CommandResult.usage_result("missing input").exit_code == 2
        assert "arity_mismatch" in failed.summary()
        logger.info("✓ Command result test passed")

    def test_oracle_summary(self) -> None:
        summary = OracleSummary()
        summary.record_report(OracleReport.compare(0, 6, 6))
        assert summary.all_match
        summary.record_report(OracleReport.compare(1, 6, 7))
        assert not summary.all_match
        assert summary.total_cases == 2
        assert summary.matches == 1
        assert summary.failures == [1]
        assert "1/2" in summary.summary()
