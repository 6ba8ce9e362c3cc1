"""
Identification of a fixed set S^Q with N x {1..k}.

S^Q contains the whole tail of every ray in J and finitely many other
points. Ray j of N x {1..k} (the j-th ray of J in increasing order) lists
the fixed prefix points of that ray followed by its tail; fixed points on
rays outside J go in front of the first ray. This bijection is eventually
a shift on every ray, so it carries H_k onto H_n|S^Q. With J empty the
fixed set is finite and the factor is a finite symmetric group.
"""
from __future__ import annotations

import logging
from functools import cached_property
from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..core.element import Element
from ..core.points import RayPoint, prefix_points, sorted_points
from ..exceptions import ValidationError
from ..utils.validation import require_same_arity

logger = logging.getLogger(__name__)


class FixedSetEmbedding(BaseModel):
    """
    The bijection S^Q -> N x {1..k}, k = |J|.

    Attributes:
        thresholds: T_x; every point (i, x) with x in J and i >= T_x is fixed,
            and no point (i, x) with x outside J and i >= T_x is
        fixed_prefix: the fixed points below the thresholds
    """

    model_config = ConfigDict(frozen=True)

    n: int
    rays_j: tuple[int, ...] = Field(description="Rays whose tail is fixed")
    thresholds: tuple[int, ...]
    fixed_prefix: tuple[RayPoint, ...]

    @classmethod
    def from_generators(cls, n: int, generators: Iterable[Element]) -> FixedSetEmbedding:
        """Embedding for the common fixed set of ``generators``."""
        gens = list(generators)
        if gens:
            require_same_arity(n, *(g.n for g in gens))
        rays_j = tuple(x for x in range(1, n + 1) if all(g.m[x - 1] == 0 for g in gens))
        thresholds = tuple(max((g.z[x] for g in gens), default=0) for x in range(n))
        fixed = tuple(p for p in prefix_points(thresholds) if all(g.apply(p) == p for g in gens))
        return cls(n=n, rays_j=rays_j, thresholds=thresholds, fixed_prefix=fixed)

    @property
    def houghton_rank(self) -> Optional[int]:
        return len(self.rays_j) if self.rays_j else None

    @property
    def finite_size(self) -> Optional[int]:
        return None if self.rays_j else len(self.fixed_prefix)

    @cached_property
    def _fixed_set(self) -> frozenset[RayPoint]:
        return frozenset(self.fixed_prefix)

    @cached_property
    def sequences(self) -> tuple[tuple[RayPoint, ...], ...]:
        """The finite heads of the k target rays."""
        extras = sorted_points(p for p in self.fixed_prefix if p.ray not in self.rays_j)
        heads = []
        for j, x in enumerate(self.rays_j):
            own = [p for p in self.fixed_prefix if p.ray == x]
            heads.append(tuple((extras if j == 0 else []) + sorted(own)))
        return tuple(heads)

    @cached_property
    def _positions(self) -> dict[RayPoint, RayPoint]:
        return {p: RayPoint(k, j) for j, head in enumerate(self.sequences, start=1) for k, p in enumerate(head)}

    def is_fixed(self, p: tuple[int, int]) -> bool:
        i, x = p
        if x in self.rays_j and i >= self.thresholds[x - 1]:
            return True
        return RayPoint(i, x) in self._fixed_set

    def forward(self, p: tuple[int, int]) -> RayPoint:
        """Image of a fixed point in N x {1..k}."""
        point = RayPoint(*p)
        if point in self._positions:
            return self._positions[point]
        if not self.is_fixed(point):
            raise ValidationError(f"Point {point.to_json()} is not fixed", field_name="p", invalid_value=list(point))
        j = self.rays_j.index(point.ray) + 1
        return RayPoint(point.index - self.thresholds[point.ray - 1] + len(self.sequences[j - 1]), j)

    def backward(self, p: tuple[int, int]) -> RayPoint:
        k, j = p
        head = self.sequences[j - 1]
        if k < len(head):
            return head[k]
        x = self.rays_j[j - 1]
        return RayPoint(k - len(head) + self.thresholds[x - 1], x)

    def transport(self, h: Element) -> Element:
        """The element of H_n acting as h on S^Q and trivially on S_Q."""
        k = len(self.rays_j)
        require_same_arity(k, h.n)
        m = [0] * self.n
        bounds = list(self.thresholds)
        for j, x in enumerate(self.rays_j, start=1):
            t, base, shift = self.thresholds[x - 1], len(self.sequences[j - 1]), h.m[j - 1]
            m[x - 1] = shift
            bounds[x - 1] = max(t, t - shift, h.z[j - 1] + t - base, 0)
        table = {
            p: (self.backward(h.apply(self.forward(p))) if self.is_fixed(p) else p)
            for p in prefix_points(bounds)
        }
        return Element.from_table(self.n, m, bounds, table)

    def standard_generators(self) -> list[Element]:
        """
        Generators of the restricted factor as elements of H_n.

        H_k for k >= 3 is generated by the shifts g_{1,j}; H_2 also needs a
        transposition; H_1 is not finitely generated and contributes none.
        A finite fixed set contributes its adjacent transpositions.
        """
        k = len(self.rays_j)
        if k == 0:
            points = sorted_points(self.fixed_prefix)
            return [Element.from_cycles(self.n, [[a, b]]) for a, b in zip(points, points[1:])]
        if k == 1:
            return []
        gens = [Element.shift(k, up=1, down=j) for j in range(2, k + 1)]
        if k == 2:
            gens.append(Element.from_cycles(2, [[(0, 1), (1, 1)]]))
        return [self.transport(h) for h in gens]
