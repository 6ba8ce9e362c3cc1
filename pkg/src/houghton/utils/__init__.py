"""
Utility functions for the Houghton toolkit.

Provides validation of points, arities and JSON encodings, and DOT
rendering of graphs.
"""
from __future__ import annotations

from .validation import (
    validate_arity,
    validate_point,
    validate_int_vector,
    parse_point,
    parse_int_vector,
    parse_pairs,
    require_keys,
    require_list,
    require_same_arity,
)
from .dot import to_dot

__all__ = [
    "validate_arity",
    "validate_point",
    "validate_int_vector",
    "parse_point",
    "parse_int_vector",
    "parse_pairs",
    "require_keys",
    "require_list",
    "require_same_arity",
    "to_dot",
]
