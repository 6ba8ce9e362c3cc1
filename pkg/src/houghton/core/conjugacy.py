"""
Constructive conjugacy of finite-order elements.

Two finite-order elements of H_n are conjugate exactly when they have the
same cycle type. The conjugator is built by matching cycles of equal
length (in order of least moved point) and aligning each pair of cycles
at its least point, so output is deterministic.
"""
from __future__ import annotations

import logging
from typing import Optional

from ..exceptions import InternalInvariantError
from ..utils.validation import require_same_arity
from .element import Element, conjugate, cycle_type, cycles, require_finite_order
from .points import RayPoint, sorted_points

logger = logging.getLogger(__name__)


def conjugator(q1: Element, q2: Element) -> Optional[Element]:
    """
    Find h with h q1 h^-1 = q2 (left-action notation), or None when the
    cycle types differ.

    The returned h has finite support contained in the union of the moved
    sets of q1 and q2.

    Raises:
        InfiniteOrderError: if either argument has infinite order
        ArityMismatchError: if the arities differ

    Example:
        >>> tau = Element.from_cycles(2, [[(0, 1), (1, 1)]])
        >>> conjugator(tau, tau).is_identity
        True
    """
    n = require_same_arity(q1.n, q2.n)
    require_finite_order(q1, "conjugator")
    require_finite_order(q2, "conjugator")
    if cycle_type(q1) != cycle_type(q2):
        logger.debug("cycle types differ: %s vs %s", cycle_type(q1).lengths, cycle_type(q2).lengths)
        return None

    # cycles() lists cycles by least point, each starting at its least point
    by_length_1: dict[int, list[tuple[RayPoint, ...]]] = {}
    by_length_2: dict[int, list[tuple[RayPoint, ...]]] = {}
    for c in cycles(q1):
        by_length_1.setdefault(len(c), []).append(c)
    for c in cycles(q2):
        by_length_2.setdefault(len(c), []).append(c)

    mapping: dict[RayPoint, RayPoint] = {}
    for length, source_cycles in by_length_1.items():
        for source, target in zip(source_cycles, by_length_2[length]):
            mapping.update(zip(source, target))

    # extend the partial bijection moved(q1) -> moved(q2) to a permutation
    free_sources = sorted_points(set(mapping.values()) - set(mapping))
    free_targets = sorted_points(set(mapping) - set(mapping.values()))
    mapping.update(zip(free_sources, free_targets))

    h = Element.from_mapping(n, mapping)
    if conjugate(q1, h) != q2:
        raise InternalInvariantError("constructed conjugator does not conjugate q1 to q2")
    return h


def are_conjugate(q1: Element, q2: Element) -> bool:
    """Cycle-type test for conjugacy of finite-order elements."""
    require_same_arity(q1.n, q2.n)
    return cycle_type(q1) == cycle_type(q2)
