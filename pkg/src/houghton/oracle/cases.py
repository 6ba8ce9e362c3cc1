"""
Seeded random cases for the oracle runs.

Every generator takes an explicit ``random.Random`` so a case is fully
determined by its seed.
"""
from __future__ import annotations

import logging
import random
from typing import Optional

from ..brown.monoid import InjectiveMonoidMap, mcompose, translation
from ..core.element import Element, compose, compose_all, conjugate
from ..core.points import RayPoint
from ..exceptions import InternalInvariantError
from ..groups.finite import FiniteSubgroup, closure
from .box import Box

logger = logging.getLogger(__name__)

MAX_SUBSET = 5
MAX_ATTEMPTS = 200


def random_permutation(rng: random.Random, n: int, points: list[RayPoint]) -> Element:
    """A uniformly random permutation of ``points``, fixing everything else."""
    images = list(points)
    rng.shuffle(images)
    return Element.from_mapping(n, dict(zip(points, images)))


def random_box_permutation(rng: random.Random, box: Box) -> Element:
    return random_permutation(rng, box.n, box.points())


def random_finite_subgroup(rng: random.Random, n: int, depth: int, max_generators: int = 3) -> FiniteSubgroup:
    """
    Closure of 1 to ``max_generators`` random permutations of one common
    subset of at most five box points, so the closure stays small.
    """
    points = Box(depth=depth, n=n).points()
    subset = rng.sample(points, rng.randint(2, min(MAX_SUBSET, len(points))))
    gens = [random_permutation(rng, n, subset) for _ in range(rng.randint(1, max_generators))]
    return closure(gens, n=n)


def random_finite_order_pair(rng: random.Random, box: Box) -> tuple[Element, Element]:
    """Two random box permutations; half the time the second is a conjugate of the first."""
    first = random_box_permutation(rng, box)
    if rng.random() < 0.5:
        return first, conjugate(first, random_box_permutation(rng, box))
    return first, random_box_permutation(rng, box)


def random_infinite_element(rng: random.Random, n: int, depth: int, max_shifts: int = 3) -> Element:
    """
    A product of random shifts with a random box permutation, with
    phi != 0 and every threshold below ``depth``.

    Raises:
        InternalInvariantError: if no such element turns up
    """
    box = Box(depth=depth, n=n)
    for attempt in range(MAX_ATTEMPTS):
        shifts = []
        for _ in range(rng.randint(1, max_shifts)):
            up, down = rng.sample(range(1, n + 1), 2)
            shifts.append(Element.shift(n, up=up, down=down))
        q = compose(compose_all(n, shifts), random_box_permutation(rng, box))
        if any(q.m) and max(q.z) <= depth:
            logger.debug("infinite element after %d attempts: phi = %s", attempt + 1, list(q.m))
            return q
    raise InternalInvariantError(
        "No infinite-order element within the box",
        details={"n": n, "depth": depth, "attempts": MAX_ATTEMPTS},
    )


def random_vertex(
    rng: random.Random,
    n: int,
    max_degree: int,
    base: Optional[Element] = None,
) -> InjectiveMonoidMap:
    """
    t base for a random word t of degree at most ``max_degree``. The base
    defaults to a random permutation of a 2-deep box; sharing a base makes
    comparable pairs likely.
    """
    if base is None:
        base = random_box_permutation(rng, Box(depth=2, n=n))
    exponents = [0] * n
    for _ in range(rng.randint(0, max_degree)):
        exponents[rng.randrange(n)] += 1
    return mcompose(translation(exponents), base)
