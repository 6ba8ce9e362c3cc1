"""
Brown's monoid M of injective eventually-translation maps of S.

Maps compose left to right. Words in the ray shifts t_y, (i, y) ->
(i + 1, y), commute with one another, so a word is stored as its exponent
vector. The poset order is alpha <= beta iff beta = t alpha for a word t,
and H_n acts on the right by alpha . h.
"""
from __future__ import annotations

import itertools
import logging
import math
from typing import Any, ClassVar, Iterable, Optional, Sequence, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..core.element import Element, EventualMap, compose_maps
from ..exceptions import InternalInvariantError, NotFixedError, ValidationError
from ..groups.finite import FiniteSubgroup
from ..models.config import BrownConfig
from ..utils.dot import to_dot
from ..utils.validation import require_keys, require_list, require_same_arity

logger = logging.getLogger(__name__)


class InjectiveMonoidMap(EventualMap):
    """
    Vertex of Brown's complex: an injective map whose image misses exactly
    ``deficit`` = sum(m) points.
    """

    require_bijective: ClassVar[bool] = False
    min_arity: ClassVar[int] = 1

    @model_validator(mode="after")
    def check_deficit(self) -> InjectiveMonoidMap:
        if sum(self.m) < 0:
            raise ValidationError("Injective maps have non-negative translation sum", field_name="m", invalid_value=list(self.m))
        return self

    @property
    def deficit(self) -> int:
        return sum(self.m)

    def to_json(self) -> dict[str, Any]:
        data = super().to_json()
        data["deficit"] = self.deficit
        return data


Vertex = InjectiveMonoidMap
MapLike = Union[InjectiveMonoidMap, Element]


def as_vertex(e: EventualMap) -> InjectiveMonoidMap:
    """View a group element (or any eventual map) as a monoid element."""
    if isinstance(e, InjectiveMonoidMap):
        return e
    return InjectiveMonoidMap.model_construct(n=e.n, m=e.m, z=e.z, exc=e.exc)


class TranslationWord(BaseModel):
    """
    Element t_1^{d_1} ... t_n^{d_n} of the translation monoid T.

    Example:
        >>> (TranslationWord(exponents=(1, 0)) + TranslationWord(exponents=(0, 2))).exponents
        (1, 2)
    """

    model_config = ConfigDict(frozen=True)

    exponents: tuple[int, ...] = Field(description="Power of each ray shift")

    @field_validator("exponents")
    @classmethod
    def validate_exponents(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if any(d < 0 for d in v):
            raise ValueError("translation words have non-negative exponents")
        return v

    @classmethod
    def zero(cls, n: int) -> TranslationWord:
        return cls(exponents=(0,) * n)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __add__(self, other: TranslationWord) -> TranslationWord:
        require_same_arity(self.n, other.n)
        return TranslationWord(exponents=tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def to_map(self) -> InjectiveMonoidMap:
        return translation(self.exponents)

    def to_json(self) -> list[int]:
        return list(self.exponents)

    @classmethod
    def from_json(cls, raw: Any) -> TranslationWord:
        return cls(exponents=tuple(require_list(raw, "exponents")))


def translation(exponents: Iterable[int]) -> InjectiveMonoidMap:
    """t^d: (i, y) -> (i + d_y, y)."""
    d = tuple(exponents)
    if any(v < 0 for v in d):
        raise ValidationError("translation exponents must be non-negative", field_name="exponents", invalid_value=list(d))
    return InjectiveMonoidMap.model_construct(n=len(d), m=d, z=(0,) * len(d), exc=())


def mcompose(a: MapLike, b: MapLike) -> InjectiveMonoidMap:
    """
    Left-to-right product: apply a, then b. Deficits add.

    Raises:
        ArityMismatchError: if the arities differ
    """
    return compose_maps(a, b, InjectiveMonoidMap)


def right_act(alpha: MapLike, h: Element) -> InjectiveMonoidMap:
    """alpha . h"""
    return mcompose(alpha, h)


def le_witness(a: MapLike, b: MapLike) -> Optional[TranslationWord]:
    """The word t with b = t a, or None when a is not below b."""
    require_same_arity(a.n, b.n)
    d = tuple(y - x for x, y in zip(a.m, b.m))
    if any(v < 0 for v in d):
        return None
    if mcompose(translation(d), a) != as_vertex(b):
        return None
    return TranslationWord(exponents=d)


def le(a: MapLike, b: MapLike) -> bool:
    """
    alpha <= beta iff beta = t alpha for some translation word t.

    Example:
        >>> t1, t2 = translation((1, 0)), translation((0, 1))
        >>> le(t1, mcompose(t1, t2)), le(t1, t2)
        (True, False)
    """
    return le_witness(a, b) is not None


def stabilizer_order(alpha: MapLike) -> int:
    """|Stab(alpha)| = (number of points missed by alpha)!"""
    return math.factorial(as_vertex(alpha).deficit)


def is_chain(vertices: Sequence[MapLike]) -> bool:
    ordered = sorted(vertices, key=lambda v: sum(v.m))
    return all(le(a, b) for a, b in zip(ordered, ordered[1:]))


def chain_stabilizer_order(chain: Sequence[MapLike]) -> int:
    """
    Order of the stabilizer of a chain, which is the stabilizer of its
    least vertex.

    Raises:
        ValidationError: if the vertices are not totally ordered
    """
    if not chain:
        raise ValidationError("A chain needs at least one vertex", field_name="chain")
    if not is_chain(chain):
        raise ValidationError("Vertices do not form a chain", field_name="chain")
    return stabilizer_order(min(chain, key=lambda v: sum(v.m)))


def is_fixed(alpha: MapLike, group: FiniteSubgroup) -> bool:
    vertex = as_vertex(alpha)
    return all(right_act(vertex, h) == vertex for h in group.generators)


def q_fixed_vertex(group: FiniteSubgroup) -> InjectiveMonoidMap:
    """
    The translation t^d with d_x = max over Q of the thresholds on ray x;
    its image avoids every moved point, so alpha . h = alpha on Q.

    Example:
        >>> q_fixed_vertex(FiniteSubgroup.trivial(2)).m
        (0, 0)
    """
    exponents = [max((e.z[x] for e in group.elements), default=0) for x in range(group.n)]
    vertex = translation(exponents)
    if not is_fixed(vertex, group):
        raise InternalInvariantError("Translation vertex is not fixed", details={"exponents": exponents})
    return vertex


def _agreement_bound(f: InjectiveMonoidMap, g: InjectiveMonoidMap, ray: int) -> int:
    """Least w with f and g equal at (i, ray) for every i >= w."""
    w = max(f.z[ray - 1], g.z[ray - 1])
    while w > 0 and f.apply((w - 1, ray)) == g.apply((w - 1, ray)):
        w -= 1
    return w


def upper_bound(m: MapLike, n: MapLike, group: FiniteSubgroup) -> InjectiveMonoidMap:
    """
    A Q-fixed vertex above both m and n: with words a, b balancing
    phi(a m) = phi(b n) and c moving every ray past the points where a m and
    b n differ, v = c a m = c b n.

    Raises:
        NotFixedError: if m or n is not fixed by Q
    """
    arity = require_same_arity(m.n, n.n, group.n)
    left, right = as_vertex(m), as_vertex(n)
    for name, vertex in (("m", left), ("n", right)):
        if not is_fixed(vertex, group):
            raise NotFixedError(f"Vertex {name} is not fixed by Q", details={name: vertex.to_json()})
    d = [x - y for x, y in zip(left.m, right.m)]
    a = translation(max(-v, 0) for v in d)
    b = translation(max(v, 0) for v in d)
    am, bn = mcompose(a, left), mcompose(b, right)
    c = translation(_agreement_bound(am, bn, x) for x in range(1, arity + 1))
    result = mcompose(c, am)
    if mcompose(c, bn) != result or not (le(left, result) and le(right, result)) or not is_fixed(result, group):
        raise InternalInvariantError("Upper bound construction failed", details={"result": result.to_json()})
    return result


def infinite_obstruction(q: Element) -> bool:
    """True iff phi(q) != 0, in which case q fixes no vertex."""
    return any(q.m)


def _exponent_vectors(n: int, depth: int) -> list[tuple[int, ...]]:
    return [d for d in itertools.product(range(depth + 1), repeat=n) if sum(d) <= depth]


def _add_vertex(graph: nx.DiGraph, word: tuple[int, ...], vertex: InjectiveMonoidMap) -> None:
    graph.add_node(word, label=f"t^{list(word)} deficit={vertex.deficit}", _vertex=vertex)


def cone(alpha: MapLike, depth: Optional[int] = None) -> nx.DiGraph:
    """
    Hasse diagram of {t alpha : deg t <= depth}; nodes are exponent
    vectors, edges the covers t alpha -> t_y t alpha.
    """
    depth = depth if depth is not None else BrownConfig().cone_depth
    base = as_vertex(alpha)
    graph = nx.DiGraph()
    for d in _exponent_vectors(base.n, depth):
        _add_vertex(graph, d, mcompose(translation(d), base))
    for d in graph.nodes:
        for y in range(base.n):
            up = d[:y] + (d[y] + 1,) + d[y + 1 :]
            if up in graph:
                graph.add_edge(d, up)
    logger.debug("cone of depth %d has %d vertices", depth, graph.number_of_nodes())
    return graph


def cone_to_dot(graph: nx.DiGraph) -> str:
    return to_dot(graph, "cone")


def cone_to_json(graph: nx.DiGraph) -> dict[str, Any]:
    return {
        "vertices": [{"word": list(d), "vertex": graph.nodes[d]["_vertex"].to_json()} for d in sorted(graph.nodes)],
        "covers": [[list(u), list(v)] for u, v in sorted(graph.edges)],
    }


def cone_from_json(raw: Any) -> nx.DiGraph:
    """Rebuild a Hasse diagram from the output of :func:`cone_to_json`."""
    raw = require_keys(raw, ("vertices", "covers"), "Cone")
    graph = nx.DiGraph()
    for item in require_list(raw["vertices"], "vertices"):
        item = require_keys(item, ("word", "vertex"), "Cone vertex")
        _add_vertex(graph, tuple(require_list(item["word"], "word")), InjectiveMonoidMap.from_json(item["vertex"]))
    for cover in require_list(raw["covers"], "covers"):
        u, v = require_list(cover, "covers")
        graph.add_edge(tuple(u), tuple(v))
    return graph
