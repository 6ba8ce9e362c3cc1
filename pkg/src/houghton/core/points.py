"""
Points of S = N x {1..n}.
"""
from __future__ import annotations
from typing import Iterable, NamedTuple


class RayPoint(NamedTuple):
    """The point (index, ray) of S; rays are numbered from 1."""

    index: int
    ray: int

    def shifted(self, amount: int) -> RayPoint:
        return RayPoint(self.index + amount, self.ray)

    def to_json(self) -> list[int]:
        return [self.index, self.ray]


def point_key(p: RayPoint) -> tuple[int, int]:
    """Lexicographic order used everywhere: ray first, then index."""
    return (p[1], p[0])


def sorted_points(points: Iterable[RayPoint]) -> list[RayPoint]:
    return sorted(points, key=point_key)


def prefix_points(z: Iterable[int]) -> list[RayPoint]:
    """All points (i, x) with i < z_x, in point_key order."""
    return [RayPoint(i, x) for x, bound in enumerate(z, start=1) for i in range(bound)]
