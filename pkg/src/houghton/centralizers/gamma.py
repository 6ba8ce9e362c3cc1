"""
The Γ-graph of an infinite-order element q.

Every infinite q-orbit ("lane") arrives from the tail of a ray where q
translates negatively, crosses the exceptional prefixes finitely often and
leaves along the tail of a ray where q translates positively. A lane is
recorded by its entry point (the last point of the backward tail), the
prefix points it visits and its exit point (the first point of the
forward tail). Γ joins the backward and forward rays of every lane.

Lane coordinates: the point q^k(entry) has coordinate k, so the entry
sits at 0 and the exit at ``steps``.
"""
from __future__ import annotations

import logging
from functools import cached_property
from typing import Any, Iterable, Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from ..core.element import Element, invert
from ..core.points import RayPoint, point_key, prefix_points
from ..exceptions import FiniteOrderError, InternalInvariantError, UnknownComponentError
from ..models.config import GammaConfig
from ..utils.dot import to_dot
from ..utils.validation import require_keys, require_list

logger = logging.getLogger(__name__)


class Lane(BaseModel):
    """One infinite q-orbit."""

    model_config = ConfigDict(frozen=True)

    entry: RayPoint = Field(description="Last point of the backward tail")
    exit: RayPoint = Field(description="First point of the forward tail")
    steps: int = Field(ge=1, description="q-steps from entry to exit")
    visited: tuple[RayPoint, ...] = Field(default=(), description="Prefix points strictly between")

    @property
    def backward_ray(self) -> int:
        return self.entry.ray

    @property
    def forward_ray(self) -> int:
        return self.exit.ray

    def to_json(self) -> dict[str, Any]:
        return {
            "entry": self.entry.to_json(),
            "exit": self.exit.to_json(),
            "steps": self.steps,
            "visited": [p.to_json() for p in self.visited],
        }

    @classmethod
    def from_json(cls, raw: Any) -> Lane:
        raw = require_keys(raw, ("entry", "exit", "steps", "visited"), "Lane")
        return cls(
            entry=raw["entry"],
            exit=raw["exit"],
            steps=raw["steps"],
            visited=tuple(require_list(raw["visited"], "visited")),
        )


class GammaEdge(BaseModel):
    """Edge x -- y with a witness s: q^-m(s) stays on ray x and q^m(s) on ray y for all m >= threshold."""

    model_config = ConfigDict(frozen=True)

    backward_ray: int
    forward_ray: int
    witness: RayPoint
    threshold: int = Field(ge=0)

    def to_json(self) -> dict[str, Any]:
        return {
            "rays": [self.backward_ray, self.forward_ray],
            "witness": self.witness.to_json(),
            "threshold": self.threshold,
        }

    @classmethod
    def from_json(cls, raw: Any) -> GammaEdge:
        raw = require_keys(raw, ("rays", "witness", "threshold"), "Γ edge")
        backward, forward = require_list(raw["rays"], "rays")
        return cls(backward_ray=backward, forward_ray=forward, witness=raw["witness"], threshold=raw["threshold"])


class GammaGraph(BaseModel):
    """Γ(q) with its lanes, edges and path components."""

    model_config = ConfigDict(frozen=True)

    element: Element
    vertices: tuple[int, ...]
    edges: tuple[GammaEdge, ...]
    components: tuple[tuple[int, ...], ...]
    lanes: tuple[Lane, ...]

    @property
    def rays_j(self) -> tuple[int, ...]:
        """Rays where q is eventually the identity."""
        return tuple(x for x in range(1, self.element.n + 1) if self.element.m[x - 1] == 0)

    def component_of(self, rays: Iterable[int]) -> tuple[int, ...]:
        """
        The component [x] containing the given rays.

        Raises:
            UnknownComponentError: if the rays are not vertices of one component
        """
        wanted = set(rays)
        for comp in self.components:
            if wanted and wanted <= set(comp):
                return comp
        raise UnknownComponentError(
            f"Rays {sorted(wanted)} do not lie in one component of Γ",
            component=tuple(sorted(wanted)),
        )

    def lanes_of(self, component: tuple[int, ...]) -> list[Lane]:
        return [lane for lane in self.lanes if lane.forward_ray in component]

    @cached_property
    def locator(self) -> LaneIndex:
        return LaneIndex(self.element, self.lanes)

    def to_graph(self) -> nx.Graph:
        graph = nx.Graph()
        for x in self.vertices:
            graph.add_node(x, label=f"{x} (m={self.element.m[x - 1]})")
        for edge in self.edges:
            w = edge.witness
            graph.add_edge(edge.backward_ray, edge.forward_ray, label=f"s=({w.index},{w.ray}) N={edge.threshold}")
        return graph

    def to_dot(self) -> str:
        return to_dot(self.to_graph(), "gamma")

    def to_json(self) -> dict[str, Any]:
        return {
            "element": self.element.to_json(),
            "vertices": list(self.vertices),
            "edges": [e.to_json() for e in self.edges],
            "components": [list(c) for c in self.components],
            "lanes": [lane.to_json() for lane in self.lanes],
        }

    @classmethod
    def from_json(cls, raw: Any) -> GammaGraph:
        raw = require_keys(raw, ("element", "vertices", "edges", "components", "lanes"), "Γ-graph")
        return cls(
            element=Element.from_json(raw["element"]),
            vertices=tuple(require_list(raw["vertices"], "vertices")),
            edges=tuple(GammaEdge.from_json(e) for e in require_list(raw["edges"], "edges")),
            components=tuple(
                tuple(require_list(c, "components")) for c in require_list(raw["components"], "components")
            ),
            lanes=tuple(Lane.from_json(lane) for lane in require_list(raw["lanes"], "lanes")),
        )


class LaneIndex:
    """Translate between points of infinite orbits and (lane, coordinate)."""

    def __init__(self, q: Element, lanes: Iterable[Lane]):
        self.q = q
        self.lanes = tuple(lanes)
        self._by_entry = {lane.entry: k for k, lane in enumerate(self.lanes)}
        self._by_exit = {lane.exit: k for k, lane in enumerate(self.lanes)}
        self._visited = {p: (k, j + 1) for k, lane in enumerate(self.lanes) for j, p in enumerate(lane.visited)}

    def locate(self, p: RayPoint) -> Optional[tuple[int, int]]:
        """(lane number, coordinate) of p, or None when p has a finite orbit."""
        if p in self._visited:
            return self._visited[p]
        i, x = p
        z, m = self.q.z[x - 1], self.q.m[x - 1]
        if i < z or m == 0:
            return None
        if m > 0:
            r = (i - z) % m
            k = self._by_exit[RayPoint(z + r, x)]
            return k, self.lanes[k].steps + (i - z - r) // m
        r = (i - z) % -m
        k = self._by_entry[RayPoint(z + r, x)]
        return k, -((i - z - r) // -m)

    def point_at(self, lane_number: int, coordinate: int) -> RayPoint:
        lane = self.lanes[lane_number]
        if coordinate <= 0:
            return lane.entry.shifted(-coordinate * -self.q.m[lane.backward_ray - 1])
        if coordinate < lane.steps:
            return lane.visited[coordinate - 1]
        return lane.exit.shifted((coordinate - lane.steps) * self.q.m[lane.forward_ray - 1])


def _require_infinite_order(q: Element) -> None:
    if q.has_finite_order:
        raise FiniteOrderError("Γ-graph needs an element of infinite order")


def trace_lanes(q: Element) -> list[Lane]:
    """
    Follow every entry point forward through the prefixes to its exit.

    Raises:
        FiniteOrderError: if phi(q) = 0
        InternalInvariantError: if a trace outlives the prefix size
    """
    _require_infinite_order(q)
    bound = len(q.exc)
    lanes = []
    for x in range(1, q.n + 1):
        m = q.m[x - 1]
        if m >= 0:
            continue
        z = q.z[x - 1]
        for i in range(z, z - m):
            entry = RayPoint(i, x)
            visited = []
            p = q.apply(entry)
            while p.index < q.z[p.ray - 1]:
                visited.append(p)
                if len(visited) > bound:
                    raise InternalInvariantError(
                        "Orbit trace exceeded the exceptional prefix size",
                        details={"entry": entry.to_json(), "bound": bound},
                    )
                p = q.apply(p)
            if q.m[p.ray - 1] <= 0:
                raise InternalInvariantError(
                    "Orbit trace left the prefixes on a ray without positive translation",
                    details={"entry": entry.to_json(), "exit": p.to_json()},
                )
            lanes.append(Lane(entry=entry, exit=p, steps=len(visited) + 1, visited=tuple(visited)))
            logger.debug("lane %s -> %s in %d steps", entry, p, len(visited) + 1)
    return lanes


def orbit_point(q: Element, p: RayPoint, k: int, q_inv: Optional[Element] = None) -> RayPoint:
    """q^k(p) for any integer k."""
    step = q if k >= 0 else (q_inv or invert(q))
    for _ in range(abs(k)):
        p = step.apply(p)
    return p


def verify_witness(q: Element, edge: GammaEdge, window: int) -> bool:
    """Check the edge condition for threshold <= m <= threshold + window."""
    q_inv = invert(q)
    forward = orbit_point(q, edge.witness, edge.threshold)
    backward = orbit_point(q, edge.witness, -edge.threshold, q_inv)
    for _ in range(window + 1):
        if forward.ray != edge.forward_ray or backward.ray != edge.backward_ray:
            return False
        forward = q.apply(forward)
        backward = q_inv.apply(backward)
    return True


def _edge_for(lane: Lane) -> GammaEdge:
    # q(entry) is always a prefix point of the backward ray
    return GammaEdge(
        backward_ray=lane.backward_ray,
        forward_ray=lane.forward_ray,
        witness=lane.visited[0],
        threshold=lane.steps - 1,
    )


def gamma(q: Element, config: Optional[GammaConfig] = None) -> GammaGraph:
    """
    Build Γ(q): vertices are the rays with m_x != 0, one edge per
    (backward ray, forward ray) pair met by a lane.

    Raises:
        FiniteOrderError: if phi(q) = 0

    Example:
        >>> g = Element.shift(2, up=1, down=2)
        >>> gamma(g).components
        ((1, 2),)
    """
    config = config or GammaConfig()
    lanes = trace_lanes(q)
    vertices = tuple(x for x in range(1, q.n + 1) if q.m[x - 1] != 0)

    edges: dict[tuple[int, int], GammaEdge] = {}
    for lane in lanes:
        key = (lane.backward_ray, lane.forward_ray)
        if key not in edges:
            edge = _edge_for(lane)
            if not verify_witness(q, edge, config.witness_window):
                raise InternalInvariantError("Γ edge witness failed verification", details=edge.to_json())
            edges[key] = edge

    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(edges)
    components = tuple(sorted(tuple(sorted(c)) for c in nx.connected_components(graph)))

    isolated = [x for x in vertices if graph.degree(x) == 0]
    fixed_rays = q.n - len(vertices)
    if isolated or not 1 <= len(components) <= (q.n - fixed_rays) // 2:
        raise InternalInvariantError(
            "Γ-graph violates its component bounds",
            details={"components": [list(c) for c in components], "isolated": isolated},
        )
    logger.debug("Γ has %d vertices, %d edges, %d components", len(vertices), len(edges), len(components))
    return GammaGraph(
        element=q,
        vertices=vertices,
        edges=tuple(edges[key] for key in sorted(edges)),
        components=components,
        lanes=tuple(sorted(lanes, key=lambda lane: point_key(lane.entry))),
    )


def component_generator(q: Element, rays: Iterable[int], graph: Optional[GammaGraph] = None) -> Element:
    """
    q_[x]: acts as q on the lanes of the component [x] containing ``rays``
    and as the identity everywhere else.

    Raises:
        FiniteOrderError: if phi(q) = 0
        UnknownComponentError: if ``rays`` do not name a component
    """
    graph = graph or gamma(q)
    comp = graph.component_of(rays)
    on_lanes = {p for lane in graph.lanes_of(comp) for p in lane.visited}
    m = [q.m[x - 1] if x in comp else 0 for x in range(1, q.n + 1)]
    table = {p: (q.apply(p) if p in on_lanes else p) for p in prefix_points(q.z)}
    return Element.from_table(q.n, m, q.z, table)
