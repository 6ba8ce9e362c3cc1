"""
Permutations of {0..d-1} as image tuples, backed by sympy's permutation
groups.

``mul(a, b)`` applies a first, matching the element composition
convention (and sympy's ``Permutation.__mul__``).
"""
from __future__ import annotations

import logging
from typing import Iterable, Optional, Sequence

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.permutations import _af_invert, _af_rmul

from ..exceptions import CapExceededError

logger = logging.getLogger(__name__)

Perm = tuple[int, ...]


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def mul(a: Perm, b: Perm) -> Perm:
    return tuple(_af_rmul(b, a))


def inverse(a: Perm) -> Perm:
    return tuple(_af_invert(a))


def permutation_group(generators: Sequence[Perm], degree: int) -> PermutationGroup:
    """sympy group on range(degree) generated by image tuples (degree >= 1)."""
    perms = [Permutation(list(g), size=degree) for g in generators]
    return PermutationGroup(perms or [Permutation(list(range(degree)))])


def group_elements(group: PermutationGroup) -> list[Perm]:
    """All elements in lexicographic order of images, so the identity comes first."""
    return sorted(tuple(p) for p in group.generate(af=True))


def saturate(generators: Sequence[Perm], degree: int, cap: Optional[int] = None) -> list[Perm]:
    """
    All elements of the group generated by ``generators``, identity first.

    The order is computed by Schreier-Sims before any enumeration.

    Raises:
        CapExceededError: when the group has more than ``cap`` elements
    """
    if degree == 0:
        return [()]
    group = permutation_group(generators, degree)
    size = int(group.order())
    if cap is not None and size > cap:
        raise CapExceededError(f"Closure exceeded {cap} elements", cap=cap)
    logger.debug("group of degree %d has order %d", degree, size)
    return group_elements(group)


def orbit_partition(group: PermutationGroup) -> list[list[int]]:
    """Orbits of ``group`` as sorted index lists, listed by least index."""
    return sorted(sorted(orbit) for orbit in group.orbits())


def stabilizer_elements(group: PermutationGroup, i: int) -> frozenset[Perm]:
    return frozenset(tuple(p) for p in group.stabilizer(i).generate(af=True))


def reduce_generators(perms: Iterable[Perm], degree: int) -> list[int]:
    """
    Greedy generating set: positions (into ``perms``) of elements not
    already generated by the earlier picks.
    """
    chosen: list[Permutation] = []
    picked: list[int] = []
    for k, perm in enumerate(perms):
        if perm == identity(degree):
            continue
        candidate = Permutation(list(perm), size=degree)
        if chosen and PermutationGroup(chosen).contains(candidate):
            continue
        chosen.append(candidate)
        picked.append(k)
    return picked
