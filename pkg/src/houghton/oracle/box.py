"""
Brute-force ground truth on finite truncations of S.

A box is {0..N-1} x {1..n}. Everything here works on raw permutation
tuples of the box points and never calls the structure algorithms it is
meant to check: small boxes are enumerated outright, larger ones are
searched orbit by orbit or compared through sympy permutations.
"""
from __future__ import annotations

import itertools
import logging
import math
from typing import Iterable, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field
from sympy.combinatorics import Permutation

from ..centralizers.describe import CentralizerDescription
from ..core.element import Element, require_finite_order
from ..core.points import RayPoint
from ..exceptions import SupportEscapesBoxError
from ..groups.finite import FiniteSubgroup
from ..models.config import OracleConfig
from ..utils.validation import require_same_arity

logger = logging.getLogger(__name__)

BoxPerm = tuple[int, ...]


class Box(BaseModel):
    """The truncation {0..depth-1} x {1..n}."""

    model_config = ConfigDict(frozen=True)

    depth: int = Field(ge=1, description="Indices 0..depth-1 on every ray")
    n: int = Field(ge=1, description="Number of rays")

    def points(self) -> list[RayPoint]:
        return [RayPoint(i, x) for x in range(1, self.n + 1) for i in range(self.depth)]

    @property
    def size(self) -> int:
        return self.depth * self.n

    def __contains__(self, p: object) -> bool:
        if not isinstance(p, tuple) or len(p) != 2:
            return False
        i, x = p
        return 0 <= i < self.depth and 1 <= x <= self.n

    def require_contains(self, points: Iterable[tuple[int, int]], what: str = "support") -> None:
        outside = [list(p) for p in points if p not in self]
        if outside:
            raise SupportEscapesBoxError(
                f"{what} leaves the {self.depth}x{self.n} box",
                depth=self.depth,
                details={"depth": self.depth, "outside": outside},
            )


def box_permutation(e: Element, box: Box) -> BoxPerm:
    """
    Image tuple of a finite-order element on the box points.

    Raises:
        SupportEscapesBoxError: if e moves a point outside the box
    """
    require_same_arity(e.n, box.n)
    require_finite_order(e, "box_permutation")
    box.require_contains(e.moved_points())
    points = box.points()
    position = {p: k for k, p in enumerate(points)}
    return tuple(position[e.apply(p)] for p in points)


def _commutes(a: BoxPerm, b: BoxPerm) -> bool:
    return all(a[b[i]] == b[a[i]] for i in range(len(a)))


def _limit(config: Optional[OracleConfig]) -> int:
    return (config or OracleConfig()).enumeration_limit


def _intertwiners(source: Sequence[BoxPerm], target: Sequence[BoxPerm], size: int, first_only: bool = False) -> int:
    """
    Count the permutations c of range(size) with c(s(p)) = t(c(p)) for
    every paired (s, t). A choice of c on one point forces it on the whole
    orbit of that point, so the search branches once per orbit.
    """
    image = [-1] * size
    used = [False] * size

    def assign(start: int, value: int) -> Optional[list[int]]:
        image[start], used[value] = value, True
        done, queue = [start], [start]
        while queue:
            p = queue.pop()
            for s, t in zip(source, target):
                q, want = s[p], t[image[p]]
                if image[q] == -1 and not used[want]:
                    image[q], used[want] = want, True
                    done.append(q)
                    queue.append(q)
                elif image[q] != want:
                    undo(done)
                    return None
        return done

    def undo(done: list[int]) -> None:
        for p in done:
            used[image[p]] = False
            image[p] = -1

    def extend(start: int) -> int:
        while start < size and image[start] != -1:
            start += 1
        if start == size:
            return 1
        total = 0
        for value in range(size):
            if used[value]:
                continue
            done = assign(start, value)
            if done is None:
                continue
            total += extend(start + 1)
            undo(done)
            if total and first_only:
                break
        return total

    return extend(0)


def brute_centralizer_order(group: FiniteSubgroup, box: Box, config: Optional[OracleConfig] = None) -> int:
    """
    Order of the centralizer of Q in the symmetric group on the box.

    Small boxes are enumerated outright; larger ones are searched orbit by
    orbit.

    Raises:
        SupportEscapesBoxError: if S_Q leaves the box
    """
    box.require_contains(group.support)
    gens = [box_permutation(g, box) for g in group.generators]
    size = box.size
    if not gens:
        return math.factorial(size)
    if size <= _limit(config):
        return sum(1 for c in itertools.permutations(range(size)) if all(_commutes(c, g) for g in gens))
    return _intertwiners(gens, gens, size)


def predicted_truncated_order(desc: CentralizerDescription, group: FiniteSubgroup, box: Box) -> int:
    """
    (#Q-fixed points in the box)! times the orders of the wreath factors.

    Raises:
        SupportEscapesBoxError: if S_Q leaves the box
    """
    box.require_contains(group.support)
    fixed = box.size - len(group.support)
    return math.factorial(fixed) * math.prod(factor.order for factor in desc.wreath)


def brute_conjugate(q1: Element, q2: Element, box: Box, config: Optional[OracleConfig] = None) -> bool:
    """
    Whether some permutation h of the box has h q1 h^-1 = q2.

    Small boxes are searched exhaustively; larger ones compare sympy cycle
    structures, which decide conjugacy in a symmetric group.
    """
    a, b = box_permutation(q1, box), box_permutation(q2, box)
    if box.size <= _limit(config):
        # h q1 h^-1 = q2  <=>  h(q1(p)) = q2(h(p))
        return _intertwiners([a], [b], box.size, first_only=True) > 0
    return bool(Permutation(list(a)).cycle_structure == Permutation(list(b)).cycle_structure)


def brute_centralizing_elements(q: Element, box: Box, config: Optional[OracleConfig] = None) -> list[Element]:
    """
    All permutations supported in the box that commute with q (q of any
    order), as elements.

    Raises:
        SupportEscapesBoxError: if the box is above the enumeration limit
    """
    require_same_arity(q.n, box.n)
    if box.size > _limit(config):
        raise SupportEscapesBoxError(
            f"Box of {box.size} points is above the enumeration limit",
            depth=box.depth,
        )
    points = box.points()
    position = {p: k for k, p in enumerate(points)}
    # only points in or mapped into the box constrain a box-supported c
    relevant = set(points) | {p for p in _preimage_candidates(q, box) if q.apply(p) in position}
    q_of = {p: q.apply(p) for p in relevant}

    found = []
    for images in itertools.permutations(range(box.size)):
        c = {points[k]: points[images[k]] for k in range(box.size)}
        if all(c.get(q_of[p], q_of[p]) == q.apply(c.get(p, p)) for p in relevant):
            found.append(Element.from_mapping(q.n, {p: c[p] for p in points if c[p] != p}))
    logger.debug("found %d box-supported centralizing permutations", len(found))
    return found


def _preimage_candidates(q: Element, box: Box) -> Sequence[RayPoint]:
    # q^-1(box) lies within |m_x| + max threshold of the box on every ray
    reach = box.depth + max(q.z, default=0) + max((abs(v) for v in q.m), default=0)
    return [RayPoint(i, x) for x in range(1, q.n + 1) for i in range(reach)]


def predicted_finite_centralizer_count(desc: CentralizerDescription, box: Box) -> int:
    """
    Number of box-supported elements centralizing an infinite-order q:
    (#q-fixed points in the box)! times the wreath factor orders.

    Raises:
        SupportEscapesBoxError: if a finite cycle leaves the box
    """
    for factor in desc.wreath:
        box.require_contains(factor.points, "finite cycle")
    fixed = sum(1 for p in box.points() if desc.embedding.is_fixed(p))
    return math.factorial(fixed) * math.prod(factor.order for factor in desc.wreath)
