"""
Free abelian part of the centralizer of an infinite-order element.

An element c commuting with q permutes the lanes (infinite q-orbits) of
each Γ-component [x], sending the point at coordinate k of lane l to the
point at coordinate k + delta_l of lane sigma(l). Its translation on one
ray of [x] fixes this lane action on the whole component, so the
centralizing elements supported on the lanes of [x] form a copy of Z,
generated by the element with least positive translation on a reference
ray.
"""
from __future__ import annotations

import logging
from collections import deque
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..core.element import Element, commutes, compose, compose_all, invert, power
from ..core.points import prefix_points
from ..exceptions import InternalInvariantError, NotCentralizingError
from ..utils.validation import require_same_arity
from .gamma import GammaGraph, LaneIndex, gamma

logger = logging.getLogger(__name__)

LaneAction = dict[int, tuple[int, int]]


class FreeGenerator(BaseModel):
    """Generator of the Z factor belonging to one Γ-component."""

    model_config = ConfigDict(frozen=True)

    component: tuple[int, ...]
    reference_ray: int = Field(description="Least ray of the component with positive translation")
    translation: int = Field(ge=1, description="Translation of the generator on the reference ray")
    root_index: int = Field(ge=1, description="q_[x] is the generator to this power")
    element: Element

    def to_json(self) -> dict[str, Any]:
        return {
            "component": list(self.component),
            "reference_ray": self.reference_ray,
            "translation": self.translation,
            "root_index": self.root_index,
            "element": self.element.to_json(),
        }


class CentralizingDecomposition(BaseModel):
    """c = residual * prod(generator_i ^ exponent_i), the residual fixing every lane point."""

    model_config = ConfigDict(frozen=True)

    exponents: tuple[int, ...]
    residual: Element
    generators: tuple[Element, ...]

    def reconstruct(self) -> Element:
        n = self.residual.n
        product = compose_all(n, (power(g, d) for g, d in zip(self.generators, self.exponents)))
        return compose(self.residual, product)

    def to_json(self) -> dict[str, Any]:
        return {"exponents": list(self.exponents), "residual": self.residual.to_json()}


def _far_coordinate(index: LaneIndex, lane_number: int, ray: int, margin: int) -> int:
    lane = index.lanes[lane_number]
    if index.q.m[ray - 1] > 0:
        return lane.steps + margin
    return -margin


def _image_on_ray(index: LaneIndex, lane_number: int, ray: int, shift: int) -> tuple[int, int]:
    """(sigma, delta) for a lane, read off a tail point of ``ray`` moved by ``shift``."""
    coordinate = _far_coordinate(index, lane_number, ray, abs(shift))
    point = index.point_at(lane_number, coordinate)
    target = index.locate(point.shifted(shift))
    if target is None:
        raise InternalInvariantError("Tail point left its lanes", details={"point": point.to_json()})
    return target[0], target[1] - coordinate


def _ray_shift(index: LaneIndex, lane_number: int, image: tuple[int, int], ray: int) -> Optional[int]:
    """Translation forced on ``ray`` by a lane's (sigma, delta), or None when sigma leaves the ray."""
    sigma, delta = image
    margin = abs(delta) + index.lanes[lane_number].steps + index.lanes[sigma].steps
    coordinate = _far_coordinate(index, lane_number, ray, margin)
    source = index.point_at(lane_number, coordinate)
    target = index.point_at(sigma, coordinate + delta)
    if target.ray != ray:
        return None
    return target.index - source.index


def lane_action(graph: GammaGraph, component: tuple[int, ...], shift: int) -> Optional[tuple[LaneAction, dict[int, int]]]:
    """
    The lane action of a centralizing element translating the reference
    ray of ``component`` by ``shift``, with the translation it forces on
    every ray of the component; None when no such element exists.
    """
    q = graph.element
    index = graph.locator
    reference = min(y for y in component if q.m[y - 1] > 0)
    members = [k for k, lane in enumerate(index.lanes) if lane.forward_ray in component]
    shifts = {reference: shift}
    action: LaneAction = {}
    queue = deque([reference])
    while queue:
        ray = queue.popleft()
        positive = q.m[ray - 1] > 0
        for k in members:
            lane = index.lanes[k]
            if (lane.forward_ray if positive else lane.backward_ray) != ray:
                continue
            image = _image_on_ray(index, k, ray, shifts[ray])
            if k in action:
                if action[k] != image:
                    return None
                continue
            action[k] = image
            other = lane.backward_ray if positive else lane.forward_ray
            forced = _ray_shift(index, k, image, other)
            if forced is None:
                return None
            if other in shifts:
                if shifts[other] != forced:
                    return None
            else:
                shifts[other] = forced
                queue.append(other)
    return action, shifts


def element_from_lane_action(graph: GammaGraph, component: tuple[int, ...], action: LaneAction, shifts: dict[int, int]) -> Element:
    """Element acting by ``action`` on the lanes of the component and trivially elsewhere."""
    q = graph.element
    index = graph.locator
    n = q.n
    m = [shifts.get(x, 0) if x in component else 0 for x in range(1, n + 1)]
    z = [q.z[x - 1] + max(0, -m[x - 1]) for x in range(1, n + 1)]
    table = {}
    for p in prefix_points(z):
        located = index.locate(p)
        if located is None or located[0] not in action:
            table[p] = p
        else:
            k, coordinate = located
            sigma, delta = action[k]
            table[p] = index.point_at(sigma, coordinate + delta)
    return Element.from_table(n, m, z, table)


def primitive_generators(q: Element, graph: Optional[GammaGraph] = None) -> list[FreeGenerator]:
    """
    One generator per Γ-component, in component order.

    Raises:
        FiniteOrderError: if phi(q) = 0
    """
    graph = graph or gamma(q)
    result = []
    for component in graph.components:
        reference = min(y for y in component if q.m[y - 1] > 0)
        full = q.m[reference - 1]
        for t in range(1, full + 1):
            # t = full is realized by q_[x] itself
            if full % t:
                continue
            found = lane_action(graph, component, t)
            if found is not None:
                break
        else:
            raise InternalInvariantError("Component generator has no lane action", details={"component": list(component)})
        action, shifts = found
        element = element_from_lane_action(graph, component, action, shifts)
        logger.debug("component %s: generator translates ray %d by %d", component, reference, t)
        result.append(
            FreeGenerator(
                component=component,
                reference_ray=reference,
                translation=t,
                root_index=full // t,
                element=element,
            )
        )
    return result


def decompose_centralizing(c: Element, q: Element, graph: Optional[GammaGraph] = None) -> CentralizingDecomposition:
    """
    Exponents of c over the free generators plus the residual supported off
    the infinite q-orbits.

    Raises:
        NotCentralizingError: if c does not commute with q
        FiniteOrderError: if phi(q) = 0

    Example:
        >>> g = Element.shift(2, up=1, down=2)
        >>> decompose_centralizing(power(g, 3), g).exponents
        (3,)
    """
    require_same_arity(c.n, q.n)
    if not commutes(c, q):
        raise NotCentralizingError("Element does not commute with q", details={"element": c.to_json()})
    graph = graph or gamma(q)
    generators = primitive_generators(q, graph)
    exponents = []
    for gen in generators:
        shift = c.m[gen.reference_ray - 1]
        if shift % gen.translation:
            raise InternalInvariantError(
                "Centralizing translation is not a multiple of the generator's",
                details={"component": list(gen.component), "shift": shift},
            )
        exponents.append(shift // gen.translation)
    product = compose_all(q.n, (power(gen.element, d) for gen, d in zip(generators, exponents)))
    return CentralizingDecomposition(
        exponents=tuple(exponents),
        residual=compose(c, invert(product)),
        generators=tuple(gen.element for gen in generators),
    )
