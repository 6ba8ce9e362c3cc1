"""
Eventually-translation maps of S = N x {1..n} and the elements of H_n.

A map is stored in canonical prefix-table form: a translation vector m,
per-ray thresholds z and an exceptional table whose domain is exactly the
ray prefixes {(i, x) : i < z_x}. Beyond its threshold ray x is moved by
(i, x) -> (i + m_x, x). Thresholds are minimal, so two maps are equal
exactly when their canonical fields are equal.

Composition applies the left argument first: ``compose(a, b)`` is
``p -> b(a(p))``. The conjugate written h q h^-1 in left-action notation is
therefore ``compose(compose(invert(h), q), h)``; see :func:`conjugate`.
"""
from __future__ import annotations

import logging
import math
from functools import cached_property, reduce
from typing import Any, ClassVar, Iterable, Mapping, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..exceptions import InfiniteOrderError, ValidationError
from ..utils.validation import (
    parse_int_vector,
    parse_pairs,
    require_keys,
    require_list,
    require_same_arity,
    validate_arity,
)
from .points import RayPoint, point_key, prefix_points

logger = logging.getLogger(__name__)

INFINITE = math.inf
"""Order of every element with non-zero translation vector."""

Pairs = tuple[tuple[RayPoint, RayPoint], ...]
MapT = TypeVar("MapT", bound="EventualMap")


def _canonicalize(
    n: int,
    m: tuple[int, ...],
    z: tuple[int, ...],
    pairs: Iterable[tuple[tuple[int, int], tuple[int, int]]],
    *,
    bijective: bool,
) -> tuple[tuple[int, ...], Pairs]:
    """Pad, validate and minimize a prefix table; returns canonical (z, exc)."""
    table: dict[RayPoint, RayPoint] = {}
    clashing: list[RayPoint] = []
    for raw_p, raw_q in pairs:
        p, q = RayPoint(*raw_p), RayPoint(*raw_q)
        if p in table and table[p] != q:
            clashing.append(p)
        table[p] = q
    if clashing:
        raise ValidationError(
            "Exceptional table assigns two images to one point",
            field_name="exc",
            details={"clashing": [p.to_json() for p in clashing]},
        )

    bounds = [max(z[x], -m[x], 0) for x in range(n)]
    for p in table:
        bounds[p.ray - 1] = max(bounds[p.ray - 1], p.index + 1)

    unmapped: list[RayPoint] = []
    for x in range(1, n + 1):
        for i in range(bounds[x - 1]):
            p = RayPoint(i, x)
            if p not in table:
                if i + m[x - 1] < 0:
                    unmapped.append(p)
                else:
                    table[p] = RayPoint(i + m[x - 1], x)
    if unmapped:
        raise ValidationError(
            "Points below -m_x need explicit images",
            field_name="exc",
            details={"unmapped": [p.to_json() for p in unmapped]},
        )

    seen: set[RayPoint] = set()
    doubly: list[RayPoint] = []
    for p in sorted(table, key=point_key):
        q = table[p]
        # translated tails cover (j, y) for j >= z_y + m_y
        if q in seen or q.index >= bounds[q.ray - 1] + m[q.ray - 1]:
            doubly.append(q)
        seen.add(q)
    uncovered: list[RayPoint] = []
    if bijective:
        uncovered = [
            RayPoint(j, x)
            for x in range(1, n + 1)
            for j in range(bounds[x - 1] + m[x - 1])
            if RayPoint(j, x) not in seen
        ]
    if doubly or uncovered or (bijective and sum(m) != 0):
        kind = "bijection" if bijective else "injection"
        raise ValidationError(
            f"Table does not define a {kind} of S",
            field_name="exc",
            details={
                "uncovered": [p.to_json() for p in uncovered],
                "doubly_covered": [p.to_json() for p in doubly],
                "translation_sum": sum(m),
            },
        )
    return _minimize(n, m, bounds, table)


def _minimize(n: int, m: tuple[int, ...], bounds: list[int], table: dict[RayPoint, RayPoint]) -> tuple[tuple[int, ...], Pairs]:
    bounds = list(bounds)
    for x in range(1, n + 1):
        b = bounds[x - 1]
        while b > 0 and table[RayPoint(b - 1, x)] == RayPoint(b - 1 + m[x - 1], x):
            del table[RayPoint(b - 1, x)]
            b -= 1
        bounds[x - 1] = b
    exc = tuple(sorted(table.items(), key=lambda kv: point_key(kv[0])))
    return tuple(bounds), exc


class EventualMap(BaseModel):
    """
    Injective self-map of S that is a translation on every ray far out.

    Subclasses decide whether surjectivity is required. Instances are
    immutable; any accepted encoding is canonicalized on construction.
    """

    model_config = ConfigDict(frozen=True)

    require_bijective: ClassVar[bool] = False
    min_arity: ClassVar[int] = 1

    n: int = Field(description="Number of rays")
    m: tuple[int, ...] = Field(description="Translation amount on each ray")
    z: tuple[int, ...] = Field(description="Minimal per-ray thresholds")
    exc: tuple[tuple[RayPoint, RayPoint], ...] = Field(description="Exceptional table on the ray prefixes")

    @model_validator(mode="before")
    @classmethod
    def canonicalize_input(cls, data: Any) -> Any:
        """Accept any valid (possibly non-canonical) encoding and canonicalize it."""
        if not isinstance(data, dict):
            return data
        raw = require_keys(data, ("n", "m"), cls.__name__)
        n = raw["n"]
        if not validate_arity(n, cls.min_arity):
            raise ValidationError(
                f"Arity must be an integer >= {cls.min_arity}, got {n!r}",
                field_name="n",
                invalid_value=n,
            )
        m = parse_int_vector(raw["m"], n, "m")
        z = parse_int_vector(raw.get("z", [0] * n), n, "z")
        if any(v < 0 for v in z):
            raise ValidationError("Thresholds must be non-negative", field_name="z", invalid_value=list(z))
        pairs = parse_pairs(raw.get("exc", []), n)
        z_canon, exc = _canonicalize(n, m, z, pairs, bijective=cls.require_bijective)
        return {"n": n, "m": m, "z": z_canon, "exc": exc}

    @field_validator("m")
    @classmethod
    def validate_translation_sum(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if cls.require_bijective and sum(v) != 0:
            raise ValueError("translation entries of a group element must sum to zero")
        return v

    @classmethod
    def _trusted(cls: type[MapT], n: int, m: tuple[int, ...], bounds: list[int], table: dict[RayPoint, RayPoint]) -> MapT:
        """Build from a table already known to be valid; only minimizes."""
        z, exc = _minimize(n, m, bounds, table)
        return cls.model_construct(n=n, m=tuple(m), z=z, exc=exc)

    @classmethod
    def from_table(
        cls: type[MapT],
        n: int,
        m: Iterable[int],
        z: Iterable[int],
        table: Mapping[tuple[int, int], tuple[int, int]],
    ) -> MapT:
        """Validated construction from an explicit (possibly padded) table."""
        return cls.model_validate({"n": n, "m": list(m), "z": list(z), "exc": list(table.items())})

    @cached_property
    def table(self) -> dict[RayPoint, RayPoint]:
        return dict(self.exc)

    @cached_property
    def key(self) -> tuple[Any, ...]:
        return (type(self).__name__, self.n, self.m, self.z, self.exc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EventualMap):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def apply(self, p: tuple[int, int]) -> RayPoint:
        """Image of the point p = (index, ray)."""
        i, x = p
        if i < self.z[x - 1]:
            return self.table[p]
        return RayPoint(i + self.m[x - 1], x)

    def phi(self) -> tuple[int, ...]:
        return self.m

    def to_json(self) -> dict[str, Any]:
        """Canonical JSON encoding ``{"n", "m", "z", "exc"}``."""
        return {
            "n": self.n,
            "m": list(self.m),
            "z": list(self.z),
            "exc": [[p.to_json(), q.to_json()] for p, q in self.exc],
        }

    @classmethod
    def from_json(cls: type[MapT], raw: Any) -> MapT:
        return cls.model_validate(raw)


class Element(EventualMap):
    """
    Element of Houghton's group H_n: a bijection of S that is eventually a
    translation on every ray, with translation entries summing to zero.

    Example:
        >>> g = Element.shift(2, up=1, down=2)
        >>> g.apply((5, 1))
        RayPoint(index=6, ray=1)
        >>> g.apply((0, 2))
        RayPoint(index=0, ray=1)
    """

    require_bijective: ClassVar[bool] = True
    min_arity: ClassVar[int] = 2

    @classmethod
    def identity(cls, n: int) -> Element:
        return cls(n=n, m=[0] * n)

    @classmethod
    def shift(cls, n: int, up: int, down: int) -> Element:
        """
        The standard generator moving ray ``down`` toward the origin and on
        to ray ``up``: (0, down) -> (0, up), translation +1 on ``up`` and -1
        on ``down``.
        """
        if up == down:
            raise ValidationError("shift needs two distinct rays", field_name="up", invalid_value=up)
        m = [0] * n
        m[up - 1] = 1
        m[down - 1] = -1
        return cls(n=n, m=m, exc=[[[0, down], [0, up]]])

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[tuple[int, int], tuple[int, int]]) -> Element:
        """Finite-support permutation given by its values on (at least) the moved points."""
        return cls(n=n, m=[0] * n, exc=list(mapping.items()))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[tuple[int, int]]]) -> Element:
        """
        Finite-support permutation from disjoint cycles ``(s_1, ..., s_k)``
        sending s_i -> s_{i+1} and s_k -> s_1.
        """
        mapping: dict[tuple[int, int], tuple[int, int]] = {}
        for cycle in cycles:
            points = [tuple(p) for p in cycle]
            for a, b in zip(points, points[1:] + points[:1]):
                if a in mapping:
                    raise ValidationError("cycles must be disjoint", field_name="cycles", invalid_value=list(a))
                mapping[a] = b
        return cls.from_mapping(n, mapping)

    @property
    def is_identity(self) -> bool:
        return not self.exc and not any(self.m)

    @property
    def has_finite_order(self) -> bool:
        return not any(self.m)

    def moved_points(self) -> list[RayPoint]:
        """
        Points of the exceptional prefixes that are moved; for a finite-order
        element this is its whole (finite) support.
        """
        return [p for p, q in self.exc if p != q]


Order = Union[int, float]


def _require_same_arity(a: EventualMap, b: EventualMap) -> int:
    return require_same_arity(a.n, b.n)


def _compose_table(a: EventualMap, b: EventualMap) -> tuple[tuple[int, ...], list[int], dict[RayPoint, RayPoint]]:
    n = _require_same_arity(a, b)
    m = tuple(a.m[x] + b.m[x] for x in range(n))
    bounds = [max(a.z[x], b.z[x] - a.m[x], 0) for x in range(n)]
    table = {p: b.apply(a.apply(p)) for p in prefix_points(bounds)}
    return m, bounds, table


def compose(a: Element, b: Element) -> Element:
    """
    Group law: the result applies ``a`` first, then ``b``.

    Raises:
        ArityMismatchError: if the arities differ
    """
    m, bounds, table = _compose_table(a, b)
    return Element._trusted(a.n, m, bounds, table)


def compose_maps(a: EventualMap, b: EventualMap, result_type: type[MapT]) -> MapT:
    """Left-to-right composition of arbitrary eventual maps into ``result_type``."""
    m, bounds, table = _compose_table(a, b)
    return result_type._trusted(a.n, m, bounds, table)


def compose_all(n: int, elements: Iterable[Element]) -> Element:
    """Compose left to right; the empty product is the identity."""
    return reduce(compose, elements, Element.identity(n))


def invert(e: Element) -> Element:
    """
    Inverse element: phi(invert(e)) = -phi(e).
    """
    n = e.n
    m = tuple(-v for v in e.m)
    bounds = [e.z[x] + e.m[x] for x in range(n)]
    table = {q: p for p, q in e.exc}
    return Element._trusted(n, m, bounds, table)


def phi(e: EventualMap) -> tuple[int, ...]:
    """The translation vector (m_1, ..., m_n)."""
    return e.m


def power(e: Element, k: int) -> Element:
    """e^k for any integer k (k-fold composition, inverse for k < 0)."""
    base = e if k >= 0 else invert(e)
    k = abs(k)
    result = Element.identity(e.n)
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(q: Element, h: Element) -> Element:
    """h q h^-1 in left-action notation: the map p -> h(q(h^-1(p)))."""
    return compose(compose(invert(h), q), h)


def commutes(a: Element, b: Element) -> bool:
    return compose(a, b) == compose(b, a)


def cycles(e: Element) -> list[tuple[RayPoint, ...]]:
    """
    Disjoint cycles of a finite-order element, each starting at its least
    point, listed in order of least point.

    Raises:
        InfiniteOrderError: if phi(e) != 0
    """
    require_finite_order(e, "cycles")
    remaining = sorted(e.moved_points(), key=point_key)
    visited: set[RayPoint] = set()
    result: list[tuple[RayPoint, ...]] = []
    for start in remaining:
        if start in visited:
            continue
        cycle = [start]
        visited.add(start)
        current = e.apply(start)
        while current != start:
            cycle.append(current)
            visited.add(current)
            current = e.apply(current)
        result.append(tuple(cycle))
    return result


class CycleType(BaseModel):
    """
    Multiset of non-trivial cycle lengths, stored sorted ascending.

    Example:
        >>> CycleType(lengths=(2, 2)).counts()
        {2: 2}
    """

    model_config = ConfigDict(frozen=True)

    lengths: tuple[int, ...] = Field(default=(), description="Cycle lengths (fixed points omitted)")

    @field_validator("lengths")
    @classmethod
    def validate_lengths(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(length < 2 for length in v):
            raise ValueError("cycle lengths must be at least 2")
        return tuple(sorted(v))

    def counts(self) -> dict[int, int]:
        result: dict[int, int] = {}
        for length in self.lengths:
            result[length] = result.get(length, 0) + 1
        return result

    def to_json(self) -> list[int]:
        return list(self.lengths)

    @classmethod
    def from_json(cls, raw: Any) -> CycleType:
        return cls(lengths=tuple(require_list(raw, "cycle_type")))


def cycle_type(e: Element) -> CycleType:
    """
    Raises:
        InfiniteOrderError: if phi(e) != 0
    """
    return CycleType(lengths=tuple(len(c) for c in cycles(e)))


def order(e: Element) -> Order:
    """INFINITE when phi(e) != 0, otherwise the lcm of the cycle lengths."""
    if not e.has_finite_order:
        return INFINITE
    return math.lcm(1, *(len(c) for c in cycles(e)))


def require_finite_order(e: Element, operation: str) -> None:
    if not e.has_finite_order:
        raise InfiniteOrderError(
            f"{operation} requires a finite-order element, phi = {list(e.m)}",
            translations=e.m,
        )
