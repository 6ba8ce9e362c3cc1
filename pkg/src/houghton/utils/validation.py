"""
Validation utilities for points, arities and JSON encodings.

Provides predicate validators (returning bool) and parsers (raising
ValidationError) for the raw JSON shapes accepted by the toolkit.
"""
from __future__ import annotations
from typing import Any, Iterable

from ..exceptions import ValidationError, ArityMismatchError, ErrorCodes


def validate_arity(n: Any, minimum: int = 1) -> bool:
    """
    Check that ``n`` is a usable number of rays.

    Args:
        n: Candidate arity
        minimum: Smallest accepted arity

    Returns:
        True if n is an int (not a bool) with n >= minimum

    Example:
        >>> validate_arity(2)
        True
        >>> validate_arity(True)
        False
    """
    return isinstance(n, int) and not isinstance(n, bool) and n >= minimum


def validate_point(raw: Any, n: int) -> bool:
    """
    Check that ``raw`` encodes a point (index, ray) of N x {1..n}.

    Example:
        >>> validate_point([0, 2], 2)
        True
        >>> validate_point([0, 3], 2)
        False
        >>> validate_point([-1, 1], 2)
        False
    """
    if not isinstance(raw, (list, tuple)) or len(raw) != 2:
        return False
    index, ray = raw
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (index, ray)):
        return False
    return index >= 0 and 1 <= ray <= n


def validate_int_vector(raw: Any, n: int) -> bool:
    """Check that ``raw`` is a length-n sequence of ints."""
    if not isinstance(raw, (list, tuple)) or len(raw) != n:
        return False
    return all(isinstance(v, int) and not isinstance(v, bool) for v in raw)


def parse_point(raw: Any, n: int, field_name: str = "point") -> tuple[int, int]:
    """
    Parse a point, raising ValidationError with context when malformed.

    Returns:
        (index, ray) tuple
    """
    if not validate_point(raw, n):
        raise ValidationError(
            f"Invalid point {raw!r} for arity {n}: expected [index >= 0, ray in 1..{n}]",
            field_name=field_name,
            invalid_value=raw,
        )
    return int(raw[0]), int(raw[1])


def parse_int_vector(raw: Any, n: int, field_name: str) -> tuple[int, ...]:
    """Parse a length-n integer vector."""
    if not validate_int_vector(raw, n):
        raise ValidationError(
            f"Field '{field_name}' must be a list of {n} integers, got {raw!r}",
            field_name=field_name,
            invalid_value=raw,
        )
    return tuple(int(v) for v in raw)


def parse_pairs(raw: Any, n: int, field_name: str = "exc") -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """
    Parse an exceptional table given as a list of [domain, image] pairs
    or as a mapping.
    """
    if isinstance(raw, dict):
        items: Iterable[Any] = raw.items()
    elif isinstance(raw, (list, tuple)):
        items = raw
    else:
        raise ValidationError(
            f"Field '{field_name}' must be a list of [point, point] pairs",
            field_name=field_name,
            invalid_value=raw,
        )
    pairs = []
    for item in items:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ValidationError(
                f"Entry {item!r} of '{field_name}' is not a [point, point] pair",
                field_name=field_name,
                invalid_value=item,
            )
        pairs.append((parse_point(item[0], n, field_name), parse_point(item[1], n, field_name)))
    return pairs


def require_keys(raw: Any, keys: Iterable[str], what: str) -> dict[str, Any]:
    """Ensure ``raw`` is a JSON object carrying ``keys``."""
    if not isinstance(raw, dict):
        raise ValidationError(
            f"{what} must be a JSON object, got {type(raw).__name__}",
            invalid_value=raw,
            error_code=ErrorCodes.INVALID_JSON,
        )
    missing = [k for k in keys if k not in raw]
    if missing:
        raise ValidationError(
            f"{what} is missing keys: {', '.join(missing)}",
            field_name=missing[0],
            error_code=ErrorCodes.INVALID_JSON,
        )
    return raw


def require_list(raw: Any, field_name: str) -> list[Any]:
    """Ensure ``raw`` is a JSON array."""
    if not isinstance(raw, list):
        raise ValidationError(
            f"{field_name} must be a JSON array, got {type(raw).__name__}",
            field_name=field_name,
            invalid_value=raw,
            error_code=ErrorCodes.INVALID_JSON,
        )
    return raw


def require_same_arity(*arities: int) -> int:
    """
    Return the common arity, raising ArityMismatchError otherwise.

    Example:
        >>> require_same_arity(3, 3)
        3
    """
    first = arities[0]
    for other in arities[1:]:
        if other != first:
            raise ArityMismatchError(
                f"Arity mismatch: {first} vs {other}",
                left=first,
                right=other,
            )
    return first
