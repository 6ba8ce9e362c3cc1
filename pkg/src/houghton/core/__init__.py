"""
Core value types: points, elements of H_n, conjugacy and report logging.
"""

from __future__ import annotations

from .points import RayPoint, point_key, sorted_points, prefix_points
from .element import (
    INFINITE,
    EventualMap,
    Element,
    CycleType,
    compose,
    compose_all,
    compose_maps,
    invert,
    phi,
    power,
    conjugate,
    commutes,
    cycles,
    cycle_type,
    order,
    require_finite_order,
)
from .conjugacy import conjugator, are_conjugate
from .logger import ReportLogger, LogBuffer, format_json_line, read_reports

__all__ = [
    "RayPoint",
    "point_key",
    "sorted_points",
    "prefix_points",
    "INFINITE",
    "EventualMap",
    "Element",
    "CycleType",
    "compose",
    "compose_all",
    "compose_maps",
    "invert",
    "phi",
    "power",
    "conjugate",
    "commutes",
    "cycles",
    "cycle_type",
    "order",
    "require_finite_order",
    "conjugator",
    "are_conjugate",
    "ReportLogger",
    "LogBuffer",
    "format_json_line",
    "read_reports",
]
