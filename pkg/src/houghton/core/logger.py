"""
Report Logger: buffered writer for oracle reports.

- Accepts pydantic report records (OracleReport or any BaseModel)
- Buffers writes; flushes when the buffer fills if auto_flush is set
- Supports JSONL (stream) and JSON (array) output
- Writes to a file, or to a text stream such as standard output

Usage example::

    with ReportLogger(output_path=Path("reports/oracle.jsonl")) as reports:
        for report in verify_centralizer_orders(cases=200, seed=0):
            reports.record(report)
"""

from __future__ import annotations

import json
import logging
import sys
from collections import deque
from pathlib import Path
from typing import Any, List, Optional, TextIO

from pydantic import BaseModel

from ..exceptions import ReportError
from ..models.config import LoggingConfig

logger = logging.getLogger(__name__)


class LogBuffer:
    """Bounded record buffer that signals when it should be flushed."""

    def __init__(self, max_size: int = 100, auto_flush: bool = True):
        self.max_size = max_size
        self.auto_flush = auto_flush
        self._buffer: deque[BaseModel] = deque()

    def add_record(self, record: BaseModel) -> bool:
        """Add record to buffer, return True if buffer should flush."""
        self._buffer.append(record)
        return self.auto_flush and len(self._buffer) >= self.max_size

    def flush_all(self) -> List[BaseModel]:
        """Flush and return all buffered records."""
        records = list(self._buffer)
        self._buffer.clear()
        return records

    @property
    def size(self) -> int:
        return len(self._buffer)


class ReportLogger:
    """Deterministic report sink.

    Records are serialized in the order they are recorded; JSON lines use
    compact separators so identical runs produce byte-identical output.
    """

    def __init__(
        self,
        output_path: Optional[Path] = None,
        config: Optional[LoggingConfig] = None,
        stream: Optional[TextIO] = None,
    ):
        self.config = config or LoggingConfig()
        self.output_path = Path(output_path) if output_path else self.config.output_path
        self.buffer = LogBuffer(max_size=self.config.buffer_size, auto_flush=self.config.auto_flush)
        self._stream = stream
        self._output_file: Optional[TextIO] = None
        self._json_records: List[dict[str, Any]] = []
        self._closed = False

    def __enter__(self) -> ReportLogger:
        self._open()
        return self

    def __exit__(self, *exc_info: Any) -> None:
        self.close()

    def record(self, report: BaseModel) -> None:
        """Buffer one record, flushing if the buffer is full."""
        if self._closed:
            raise ReportError("Report logger is closed", log_format=self.config.format)
        if self.buffer.add_record(report):
            self.flush()

    def flush(self) -> None:
        """Write the buffered batch."""
        records = self.buffer.flush_all()
        if not records:
            return
        sink = self._sink()
        try:
            if self.config.format == "jsonl":
                for rec in records:
                    sink.write(format_json_line(rec.model_dump(mode="json")) + "\n")
                sink.flush()
            elif self.config.format == "json":
                # a JSON array can only be written once every record is known
                self._json_records.extend(rec.model_dump(mode="json") for rec in records)
            else:
                raise ReportError(f"Unsupported report format: {self.config.format}", log_format=self.config.format)
        except ReportError:
            raise
        except Exception as e:
            raise ReportError(f"Failed to flush reports: {e}", log_format=self.config.format) from e
        logger.debug("flushed %d reports", len(records))

    def close(self) -> None:
        """Flush remaining records and release the output file."""
        if self._closed:
            return
        self.flush()
        if self.config.format == "json":
            sink = self._sink()
            try:
                json.dump(self._json_records, sink, indent=2)
                sink.write("\n")
                sink.flush()
            except Exception as e:
                raise ReportError(f"Failed to write report array: {e}", log_format="json") from e
        if self._output_file:
            try:
                self._output_file.close()
            finally:
                self._output_file = None
        self._closed = True

    def _open(self) -> None:
        if self._output_file or self._stream or not self.output_path:
            return
        try:
            self.output_path.parent.mkdir(parents=True, exist_ok=True)
            self._output_file = open(self.output_path, "w", encoding="utf-8")
        except Exception as e:
            raise ReportError(f"Failed to open report file {self.output_path}: {e}") from e

    def _sink(self) -> TextIO:
        self._open()
        if self._output_file:
            return self._output_file
        if self._stream is None:
            self._stream = sys.stdout
        return self._stream


def format_json_line(obj: Any) -> str:
    """Compact, key-order-preserving single-line JSON."""
    return json.dumps(obj, separators=(",", ":"))


def read_reports(path: Path) -> List[dict[str, Any]]:
    """Load records written by a ReportLogger in either format."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ReportError(f"No report file at {path}") from e
    stripped = text.strip()
    if not stripped:
        return []
    if stripped.startswith("["):
        return json.loads(stripped)
    return [json.loads(line) for line in stripped.splitlines() if line.strip()]
