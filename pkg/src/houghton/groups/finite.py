"""
Finite subgroups of H_n stored as explicit element lists.

Every finite subgroup Q permutes the finite set S_Q of points it moves, so
the group is also kept as a table of permutation tuples on S_Q (listed in
point order) and as a sympy permutation group for orbits and stabilizers.
"""
from __future__ import annotations

import logging
from functools import cached_property
from typing import Any, Iterable, NamedTuple, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field
from sympy.combinatorics import PermutationGroup

from ..core.element import Element
from ..core.points import RayPoint, sorted_points
from ..exceptions import ErrorCodes, InfiniteOrderError, NotASubgroupError, ValidationError
from ..models.config import GroupConfig
from ..utils.validation import require_keys, require_same_arity, validate_arity
from .permutations import (
    Perm,
    inverse,
    mul,
    orbit_partition,
    permutation_group,
    reduce_generators,
    saturate,
    stabilizer_elements,
)

logger = logging.getLogger(__name__)


class PermutationTable(NamedTuple):
    """A finite subgroup as permutations of its moved set."""

    support: tuple[RayPoint, ...]
    position: dict[RayPoint, int]
    perms: tuple[Perm, ...]
    index: dict[Perm, int]


class FiniteSubgroup(BaseModel):
    """
    Finite subgroup of H_n: the full element list (identity first) plus the
    generators it was built from.

    Build instances with :func:`closure`; derived subgroups (isotropy,
    normalizers) keep their parent's element order.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(description="Number of rays")
    elements: tuple[Element, ...] = Field(description="All elements, identity first")
    generators: tuple[Element, ...] = Field(default=(), description="Generating elements")

    @classmethod
    def trivial(cls, n: int) -> FiniteSubgroup:
        return cls(n=n, elements=(Element.identity(n),), generators=())

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def support(self) -> tuple[RayPoint, ...]:
        """S_Q, the points moved by some element, in point order."""
        return tuple(sorted_points({p for e in self.elements for p in e.moved_points()}))

    @cached_property
    def perm_table(self) -> PermutationTable:
        support = self.support
        position = {p: i for i, p in enumerate(support)}
        perms = tuple(tuple(position[e.apply(p)] for p in support) for e in self.elements)
        return PermutationTable(support, position, perms, {perm: k for k, perm in enumerate(perms)})

    @cached_property
    def perm_group(self) -> PermutationGroup:
        """The sympy group on S_Q; only defined when S_Q is non-empty."""
        return permutation_group([self.perm_of(g) for g in self.generators], len(self.support))

    def perm_of(self, e: Element) -> Optional[Perm]:
        """Permutation tuple of ``e`` on S_Q, or None when e is not in the group."""
        if e.n != self.n or not e.has_finite_order:
            return None
        table = self.perm_table
        if any(p not in table.position for p in e.moved_points()):
            return None
        perm = tuple(table.position[e.apply(p)] for p in table.support)
        return perm if perm in table.index else None

    def __contains__(self, e: object) -> bool:
        return isinstance(e, Element) and self.perm_of(e) is not None

    def fixes(self, p: tuple[int, int]) -> bool:
        return RayPoint(*p) not in self.perm_table.position

    def to_json(self) -> dict[str, Any]:
        """Subgroup encoding ``{"n", "generators"}``."""
        return {"n": self.n, "generators": [g.to_json() for g in self.generators]}

    @classmethod
    def from_json(cls, raw: Any, cap: Optional[int] = None) -> FiniteSubgroup:
        raw = require_keys(raw, ("n", "generators"), "Subgroup")
        n = raw["n"]
        if not validate_arity(n, Element.min_arity):
            raise ValidationError(f"Arity must be an integer >= 2, got {n!r}", field_name="n", invalid_value=n)
        if not isinstance(raw["generators"], list):
            raise ValidationError(
                "Subgroup generators must be a list of elements",
                field_name="generators",
                error_code=ErrorCodes.INVALID_JSON,
            )
        return closure([Element.from_json(g) for g in raw["generators"]], n=n, cap=cap)


def _element_from_perm(n: int, support: Sequence[RayPoint], perm: Perm) -> Element:
    return Element.from_mapping(n, {support[i]: support[j] for i, j in enumerate(perm) if i != j})


def closure(gens: Iterable[Element], n: Optional[int] = None, cap: Optional[int] = None) -> FiniteSubgroup:
    """
    The finite subgroup generated by finite-order elements.

    Args:
        gens: Generators; each must have phi = 0
        n: Arity, required only when ``gens`` is empty
        cap: Element cap (defaults to GroupConfig.closure_cap)

    Raises:
        InfiniteOrderError: code ``infinite_order_generator`` for a generator with phi != 0
        CapExceededError: when the group outgrows the cap
        ArityMismatchError: for generators of different arity

    Example:
        >>> tau = Element.from_cycles(2, [[(0, 1), (1, 1)]])
        >>> closure([tau]).order
        2
    """
    gens = tuple(gens)
    if not gens:
        if n is None:
            raise ValidationError("closure of no generators needs an arity", field_name="n")
        return FiniteSubgroup.trivial(n)
    arity = require_same_arity(*(g.n for g in gens), *([n] if n is not None else []))
    for g in gens:
        if not g.has_finite_order:
            raise InfiniteOrderError(
                f"Generator has infinite order, phi = {list(g.m)}",
                translations=g.m,
                error_code=ErrorCodes.INFINITE_ORDER_GENERATOR,
            )
    cap = cap if cap is not None else GroupConfig().closure_cap

    support = tuple(sorted_points({p for g in gens for p in g.moved_points()}))
    position = {p: i for i, p in enumerate(support)}
    gen_perms = [tuple(position[g.apply(p)] for p in support) for g in gens]
    perms = saturate(gen_perms, len(support), cap)
    logger.debug("closure of %d generators on %d points has %d elements", len(gens), len(support), len(perms))

    elements = tuple(_element_from_perm(arity, support, perm) for perm in perms)
    return FiniteSubgroup(n=arity, elements=elements, generators=gens)


def subgroup_from_indices(group: FiniteSubgroup, indices: Sequence[int]) -> FiniteSubgroup:
    """Subgroup made of ``group.elements[k]`` for k in ``indices`` (a subgroup, identity included)."""
    table = group.perm_table
    members = [table.perms[k] for k in indices]
    picked = reduce_generators(members, len(table.support))
    return FiniteSubgroup(
        n=group.n,
        elements=tuple(group.elements[k] for k in indices),
        generators=tuple(group.elements[indices[j]] for j in picked),
    )


def member_perms(group: FiniteSubgroup, sub: FiniteSubgroup) -> frozenset[Perm]:
    """
    Raises:
        NotASubgroupError: if some element of ``sub`` lies outside ``group``
    """
    require_same_arity(group.n, sub.n)
    perms = set()
    for e in sub.elements:
        perm = group.perm_of(e)
        if perm is None:
            raise NotASubgroupError(
                "Subgroup element lies outside the ambient group",
                details={"element": e.to_json()},
            )
        perms.add(perm)
    return frozenset(perms)


def conjugate_perms(members: frozenset[Perm], x: Perm) -> frozenset[Perm]:
    """x H x^-1 in left-action notation."""
    x_inv = inverse(x)
    return frozenset(mul(mul(x_inv, h), x) for h in members)


def is_subgroup(sub: FiniteSubgroup, group: FiniteSubgroup) -> bool:
    return sub.n == group.n and all(e in group for e in sub.elements)


def isotropy(group: FiniteSubgroup, p: tuple[int, int]) -> FiniteSubgroup:
    """
    {q in Q : q(p) = p}.

    Example:
        >>> tau = Element.from_cycles(2, [[(0, 1), (1, 1)]])
        >>> isotropy(closure([tau]), (5, 1)).order
        2
    """
    point = RayPoint(*p)
    table = group.perm_table
    if point not in table.position:
        return group
    stab = stabilizer_elements(group.perm_group, table.position[point])
    return subgroup_from_indices(group, [k for k, perm in enumerate(table.perms) if perm in stab])


def orbits(group: FiniteSubgroup) -> list[tuple[RayPoint, ...]]:
    """Orbits on S_Q, each sorted, listed by least point."""
    table = group.perm_table
    if not table.support:
        return []
    return [tuple(table.support[j] for j in orbit) for orbit in orbit_partition(group.perm_group)]


def conjugating_element(group: FiniteSubgroup, h: FiniteSubgroup, k: FiniteSubgroup) -> Optional[Element]:
    """
    First q in Q (element order) with q H q^-1 = K, or None.

    Raises:
        NotASubgroupError: if H or K is not contained in Q
    """
    hs, ks = member_perms(group, h), member_perms(group, k)
    if len(hs) != len(ks):
        return None
    for idx, x in enumerate(group.perm_table.perms):
        if conjugate_perms(hs, x) == ks:
            return group.elements[idx]
    return None


def normalizer(group: FiniteSubgroup, sub: FiniteSubgroup) -> FiniteSubgroup:
    """N_Q(H)."""
    hs = member_perms(group, sub)
    perms = group.perm_table.perms
    return subgroup_from_indices(group, [k for k, x in enumerate(perms) if conjugate_perms(hs, x) == hs])
