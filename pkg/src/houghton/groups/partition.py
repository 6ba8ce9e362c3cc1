"""
Partition of S_Q by Q-conjugacy class of point isotropy, and the Weyl
groups W_Q(Q_a) = N_Q(Q_a)/Q_a acting on the cosets Q/Q_a.
"""
from __future__ import annotations

import logging
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..core.element import Element
from ..core.points import RayPoint, sorted_points
from ..exceptions import InternalInvariantError, ValidationError
from ..utils.validation import require_keys, require_list
from .finite import (
    FiniteSubgroup,
    conjugate_perms,
    member_perms,
    orbits,
    subgroup_from_indices,
)
from .permutations import Perm, mul, reduce_generators, stabilizer_elements

logger = logging.getLogger(__name__)


class IsotropyClass(BaseModel):
    """
    One block S_a: the union of the orbits whose point isotropy groups are
    Q-conjugate to the representative Q_a.
    """

    model_config = ConfigDict(frozen=True)

    points: tuple[RayPoint, ...] = Field(description="S_a in point order")
    isotropy: FiniteSubgroup = Field(description="Representative Q_a, isotropy of the least point")
    index: int = Field(ge=1, description="[Q : Q_a]")
    r: int = Field(ge=1, description="Number of orbits, |S_a| / [Q : Q_a]")
    orbit_representatives: tuple[RayPoint, ...] = Field(description="One point per orbit with isotropy exactly Q_a")

    def summary(self) -> ClassSummary:
        return ClassSummary(points=self.points, isotropy_order=self.isotropy.order, index=self.index, r=self.r)


class IsotropyPartition(BaseModel):
    """S = S^Q + S_1 + ... + S_t; S^Q is the complement of ``fixed_complement``."""

    model_config = ConfigDict(frozen=True)

    n: int
    group_order: int
    fixed_complement: tuple[RayPoint, ...] = Field(description="S_Q, listed explicitly")
    classes: tuple[IsotropyClass, ...] = ()

    @property
    def t(self) -> int:
        return len(self.classes)

    def class_of(self, p: tuple[int, int]) -> Optional[int]:
        point = RayPoint(*p)
        for a, cls in enumerate(self.classes):
            if point in cls.points:
                return a
        return None

    def summary(self) -> PartitionSummary:
        return PartitionSummary(
            fixed_complement=self.fixed_complement,
            classes=tuple(cls.summary() for cls in self.classes),
        )

    def to_json(self) -> dict[str, Any]:
        return self.summary().to_json()


class ClassSummary(BaseModel):
    """An isotropy class as emitted: its points, |Q_a|, [Q : Q_a] and r."""

    model_config = ConfigDict(frozen=True)

    points: tuple[RayPoint, ...]
    isotropy_order: int = Field(ge=1)
    index: int = Field(ge=1)
    r: int = Field(ge=1)

    def to_json(self) -> dict[str, Any]:
        return {
            "points": [p.to_json() for p in self.points],
            "isotropy_order": self.isotropy_order,
            "index": self.index,
            "r": self.r,
        }


class PartitionSummary(BaseModel):
    """The JSON form of an isotropy partition."""

    model_config = ConfigDict(frozen=True)

    fixed_complement: tuple[RayPoint, ...]
    classes: tuple[ClassSummary, ...] = ()

    def to_json(self) -> dict[str, Any]:
        return {
            "fixed_complement": [p.to_json() for p in self.fixed_complement],
            "classes": [cls.to_json() for cls in self.classes],
        }

    @classmethod
    def from_json(cls, raw: Any) -> PartitionSummary:
        raw = require_keys(raw, ("fixed_complement", "classes"), "Isotropy partition")
        classes = [
            require_keys(c, ("points", "isotropy_order", "index", "r"), "Isotropy class")
            for c in require_list(raw["classes"], "classes")
        ]
        return cls(
            fixed_complement=tuple(require_list(raw["fixed_complement"], "fixed_complement")),
            classes=tuple(ClassSummary.model_validate(c) for c in classes),
        )


def _find_conjugator(group: FiniteSubgroup, hs: frozenset[Perm], ks: frozenset[Perm]) -> Optional[int]:
    if len(hs) != len(ks):
        return None
    for k, x in enumerate(group.perm_table.perms):
        if conjugate_perms(hs, x) == ks:
            return k
    return None


def partition(group: FiniteSubgroup) -> IsotropyPartition:
    """
    Group the orbits of Q on S_Q by Q-conjugacy of isotropy.

    Classes are listed by least point and each class's Q_a is the isotropy
    of its least point.

    Example:
        >>> tau = Element.from_cycles(2, [[(0, 1), (1, 1)]])
        >>> [cls.r for cls in partition(closure([tau])).classes]
        [1]
    """
    table = group.perm_table
    stabilizers = [stabilizer_elements(group.perm_group, i) for i in range(len(table.support))]

    drafts: list[tuple[frozenset[Perm], list[tuple[RayPoint, ...]]]] = []
    for orbit in orbits(group):
        stab = stabilizers[table.position[orbit[0]]]
        for qa, members in drafts:
            if _find_conjugator(group, stab, qa) is not None:
                members.append(orbit)
                break
        else:
            drafts.append((stab, [orbit]))
            logger.debug("new isotropy class at %s with |Q_a| = %d", orbit[0], len(stab))

    classes = []
    for qa, members in drafts:
        points = tuple(sorted_points(p for orbit in members for p in orbit))
        index = group.order // len(qa)
        if len(points) % index or len(points) // index != len(members):
            raise InternalInvariantError(
                "Isotropy class size is not r copies of Q/Q_a",
                details={"points": len(points), "index": index, "orbits": len(members)},
            )
        representatives = tuple(
            next(p for p in orbit if stabilizers[table.position[p]] == qa) for orbit in members
        )
        classes.append(
            IsotropyClass(
                points=points,
                isotropy=subgroup_from_indices(group, [k for k, perm in enumerate(table.perms) if perm in qa]),
                index=index,
                r=len(members),
                orbit_representatives=representatives,
            )
        )
    return IsotropyPartition(
        n=group.n,
        group_order=group.order,
        fixed_complement=table.support,
        classes=tuple(classes),
    )


def class_witness(group: FiniteSubgroup, cls: IsotropyClass, p: tuple[int, int]) -> Element:
    """
    An element q with q Q_a q^-1 = isotropy(Q, p) for a point p of S_a,
    namely one carrying the orbit representative of p's orbit to p.
    """
    point = RayPoint(*p)
    if point not in cls.points:
        raise ValidationError(f"Point {point.to_json()} is not in this class", field_name="p", invalid_value=list(p))
    table = group.perm_table
    target = table.position[point]
    for rep in cls.orbit_representatives:
        source = table.position[rep]
        for k, perm in enumerate(table.perms):
            if perm[source] == target:
                return group.elements[k]
    raise InternalInvariantError("Point of a class is not in the orbit of any representative")


class WeylGroup(BaseModel):
    """
    N_Q(H)/H as permutations of the cosets Q/H, cosets numbered by first
    appearance in the element list of Q.
    """

    model_config = ConfigDict(frozen=True)

    order: int = Field(ge=1)
    degree: int = Field(ge=1, description="[Q : H]")
    normalizer_order: int = Field(ge=1)
    generators: tuple[tuple[int, ...], ...] = ()
    representatives: tuple[Element, ...] = Field(default=(), description="Normalizer elements inducing the generators")


def weyl(group: FiniteSubgroup, sub: FiniteSubgroup) -> WeylGroup:
    """
    Raises:
        NotASubgroupError: if ``sub`` is not contained in ``group``
    """
    table = group.perm_table
    hs = member_perms(group, sub)

    coset_id: dict[frozenset[Perm], int] = {}
    coset_of: list[int] = []
    reps: list[Perm] = []
    for q in table.perms:
        coset = frozenset(mul(h, q) for h in hs)
        if coset not in coset_id:
            coset_id[coset] = len(reps)
            reps.append(q)
        coset_of.append(coset_id[coset])

    normal = [k for k, x in enumerate(table.perms) if conjugate_perms(hs, x) == hs]
    # n acts by qH -> qnH
    actions: dict[tuple[int, ...], int] = {}
    for k in normal:
        x = table.perms[k]
        action = tuple(coset_of[table.index[mul(x, rep)]] for rep in reps)
        actions.setdefault(action, k)
    if len(actions) * len(hs) != len(normal):
        raise InternalInvariantError(
            "Weyl group order does not match |N_Q(H)| / |H|",
            details={"weyl": len(actions), "sub": len(hs), "normalizer": len(normal)},
        )

    distinct = list(actions)
    picked = reduce_generators(distinct, len(reps))
    return WeylGroup(
        order=len(actions),
        degree=len(reps),
        normalizer_order=len(normal),
        generators=tuple(distinct[j] for j in picked),
        representatives=tuple(group.elements[actions[distinct[j]]] for j in picked),
    )
