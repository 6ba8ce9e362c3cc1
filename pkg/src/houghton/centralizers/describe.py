"""
Centralizer descriptions.

The centralizer of a finite subgroup Q splits as H_n|S^Q times one wreath
product W_Q(Q_a) wr Sym_r per isotropy class. For an infinite-order q (or
a finite-by-cyclic subgroup) the restricted factor is H_k on the rays
J where q is eventually trivial, or a finite symmetric group when J is
empty, and a free abelian factor Z^r with one generator per Γ-component
joins the product.
"""
from __future__ import annotations

import logging
import math
from typing import Any, Iterable, Literal, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field

from ..core.element import Element, commutes, conjugate
from ..core.points import RayPoint, prefix_points, sorted_points
from ..exceptions import (
    ErrorCodes,
    FiniteOrderError,
    InfiniteOrderError,
    InternalInvariantError,
    NotNormalizedError,
    ValidationError,
)
from ..groups.finite import FiniteSubgroup, closure
from ..groups.partition import partition, weyl
from ..utils.validation import require_keys, require_list, require_same_arity
from .embedding import FixedSetEmbedding
from .free import FreeGenerator, primitive_generators
from .gamma import GammaGraph, gamma

logger = logging.getLogger(__name__)


class WreathFactor(BaseModel):
    """W wr Sym_r for one block of points, with explicit generators."""

    model_config = ConfigDict(frozen=True)

    weyl_order: int = Field(ge=1)
    r: int = Field(ge=1)
    points: tuple[RayPoint, ...] = Field(description="The block this factor acts on")
    weyl_generators: tuple[tuple[int, ...], ...] = Field(default=(), description="Weyl generators on coset indices")
    generators: tuple[Element, ...] = ()

    @property
    def order(self) -> int:
        return self.weyl_order**self.r * math.factorial(self.r)


class FPLabel(BaseModel):
    """Finiteness type quoted for the centralizer: FP_{fp_up_to} and not FP_{fails_at}."""

    model_config = ConfigDict(frozen=True)

    fp_up_to: Union[int, Literal["inf"]]
    fails_at: Optional[int] = None

    @classmethod
    def for_finite(cls, n: int) -> FPLabel:
        return cls(fp_up_to=n - 1, fails_at=n)

    @classmethod
    def for_houghton_rank(cls, k: int) -> FPLabel:
        if k == 0:
            return cls(fp_up_to="inf", fails_at=None)
        return cls(fp_up_to=k - 1, fails_at=k)

    @property
    def sentence(self) -> str:
        if self.fails_at is None:
            return "FP_inf"
        if self.fails_at == 1:
            return "not FP_1"
        return f"FP_{self.fp_up_to} and not FP_{self.fails_at}"

    def to_json(self) -> dict[str, Any]:
        return {"fp_up_to": self.fp_up_to, "fails_at": self.fails_at}


class CentralizerDescription(BaseModel):
    """Direct-product decomposition of a centralizer with explicit generators."""

    model_config = ConfigDict(frozen=True)

    n: int
    embedding: FixedSetEmbedding
    houghton_generators: tuple[Element, ...] = ()
    free_generators: tuple[FreeGenerator, ...] = ()
    wreath: tuple[WreathFactor, ...] = ()
    fp: FPLabel

    @property
    def houghton_rank(self) -> Optional[int]:
        return self.embedding.houghton_rank

    @property
    def finite_sym_size(self) -> Optional[int]:
        return self.embedding.finite_size

    @property
    def rays_j(self) -> tuple[int, ...]:
        return self.embedding.rays_j

    @property
    def free_rank(self) -> int:
        return len(self.free_generators)

    def factor_generators(self) -> list[list[Element]]:
        """Generators grouped by direct factor: restricted factor, each Z, each wreath factor."""
        groups = [list(self.houghton_generators)]
        groups.extend([gen.element] for gen in self.free_generators)
        groups.extend(list(factor.generators) for factor in self.wreath)
        return groups

    def all_generators(self) -> list[Element]:
        return [g for group in self.factor_generators() for g in group]

    def summary(self) -> CentralizerSummary:
        return CentralizerSummary(
            houghton_rank=self.houghton_rank,
            finite_sym_size=self.finite_sym_size,
            rays_j=self.rays_j,
            free_generators=tuple(gen.element for gen in self.free_generators),
            wreath=tuple((factor.weyl_order, factor.r) for factor in self.wreath),
            fp=self.fp,
        )

    def to_json(self) -> dict[str, Any]:
        return self.summary().to_json()


class CentralizerSummary(BaseModel):
    """
    The JSON form of a centralizer description: factor sizes, the free
    generators and the finiteness label.
    """

    model_config = ConfigDict(frozen=True)

    houghton_rank: Optional[int] = None
    finite_sym_size: Optional[int] = None
    rays_j: tuple[int, ...] = ()
    free_generators: tuple[Element, ...] = ()
    wreath: tuple[tuple[int, int], ...] = Field(default=(), description="(weyl_order, r) per wreath factor")
    fp: FPLabel

    @property
    def free_rank(self) -> int:
        return len(self.free_generators)

    def to_json(self) -> dict[str, Any]:
        return {
            "houghton_rank": self.houghton_rank,
            "finite_sym_size": self.finite_sym_size,
            "rays_J": list(self.rays_j),
            "free_rank": self.free_rank,
            "free_generators": [g.to_json() for g in self.free_generators],
            "wreath": [{"weyl_order": w, "r": r} for w, r in self.wreath],
            "fp": self.fp.to_json(),
        }

    @classmethod
    def from_json(cls, raw: Any) -> CentralizerSummary:
        keys = ("houghton_rank", "finite_sym_size", "rays_J", "free_rank", "free_generators", "wreath", "fp")
        raw = require_keys(raw, keys, "Centralizer description")
        generators = require_list(raw["free_generators"], "free_generators")
        if raw["free_rank"] != len(generators):
            raise ValidationError(
                f"free_rank {raw['free_rank']!r} does not count {len(generators)} free generators",
                field_name="free_rank",
                invalid_value=raw["free_rank"],
                error_code=ErrorCodes.INVALID_JSON,
            )
        wreath = [require_keys(f, ("weyl_order", "r"), "Wreath factor") for f in require_list(raw["wreath"], "wreath")]
        fp = require_keys(raw["fp"], ("fp_up_to", "fails_at"), "Finiteness label")
        return cls(
            houghton_rank=raw["houghton_rank"],
            finite_sym_size=raw["finite_sym_size"],
            rays_j=tuple(require_list(raw["rays_J"], "rays_J")),
            free_generators=tuple(Element.from_json(g) for g in generators),
            wreath=tuple((f["weyl_order"], f["r"]) for f in wreath),
            fp=FPLabel(fp_up_to=fp["fp_up_to"], fails_at=fp["fails_at"]),
        )


def _orbit_of(group: FiniteSubgroup, p: RayPoint) -> list[tuple[Element, RayPoint]]:
    return [(q, q.apply(p)) for q in group.elements]


def subgroup_wreaths(group: FiniteSubgroup) -> list[WreathFactor]:
    """One wreath factor per isotropy class of a finite group."""
    n = group.n
    factors = []
    for cls in partition(group).classes:
        w = weyl(group, cls.isotropy)
        reps = cls.orbit_representatives
        gens = []
        for nrm in w.representatives:
            # q(p_0) -> q(n(p_0)) on the first orbit
            image_base = nrm.apply(reps[0])
            gens.append(Element.from_mapping(n, {p: q.apply(image_base) for q, p in _orbit_of(group, reps[0])}))
        for a, b in zip(reps, reps[1:]):
            mapping = {}
            for q in group.elements:
                mapping[q.apply(a)] = q.apply(b)
                mapping[q.apply(b)] = q.apply(a)
            gens.append(Element.from_mapping(n, mapping))
        factors.append(
            WreathFactor(
                weyl_order=w.order,
                r=cls.r,
                points=cls.points,
                weyl_generators=w.generators,
                generators=tuple(gens),
            )
        )
    return factors


def _finite_cycles(q: Element, graph: GammaGraph) -> list[tuple[RayPoint, ...]]:
    """Finite non-trivial q-cycles, each from its least point, by least point."""
    seen: set[RayPoint] = set()
    result = []
    for p in prefix_points(q.z):
        if p in seen or q.apply(p) == p or graph.locator.locate(p) is not None:
            continue
        cycle = [p]
        current = q.apply(p)
        while current != p:
            cycle.append(current)
            current = q.apply(current)
        seen.update(cycle)
        result.append(tuple(cycle))
    return result


def cycle_wreaths(q: Element, graph: GammaGraph) -> list[WreathFactor]:
    """
    Wreath factors of the finite q-cycles, one per cycle length d: the
    Weyl group is cyclic of order d and r counts the d-cycles.
    """
    by_length: dict[int, list[tuple[RayPoint, ...]]] = {}
    for cycle in _finite_cycles(q, graph):
        by_length.setdefault(len(cycle), []).append(cycle)
    factors = []
    for d in sorted(by_length):
        cycles = by_length[d]
        gens = [Element.from_cycles(q.n, [cycles[0]])]
        for a, b in zip(cycles, cycles[1:]):
            gens.append(Element.from_cycles(q.n, [[a[i], b[i]] for i in range(d)]))
        factors.append(
            WreathFactor(
                weyl_order=d,
                r=len(cycles),
                points=tuple(sorted_points(p for c in cycles for p in c)),
                weyl_generators=(tuple(list(range(1, d)) + [0]),),
                generators=tuple(gens),
            )
        )
    return factors


def _check_bounds(n: int, embedding: FixedSetEmbedding, free_rank: int) -> None:
    k = len(embedding.rays_j)
    if k > n - 2 or not 1 <= free_rank <= (n - k) // 2:
        raise InternalInvariantError(
            "Centralizer ranks out of bounds",
            details={"n": n, "k": k, "r": free_rank},
        )


def centralizer_finite(group: FiniteSubgroup) -> CentralizerDescription:
    """
    C(Q) = H_n|S^Q x C_1 x ... x C_t for a finite subgroup Q.

    Example:
        >>> tau = Element.from_cycles(2, [[(0, 1), (1, 1)]])
        >>> [f.weyl_order for f in centralizer_finite(closure([tau])).wreath]
        [2]
    """
    embedding = FixedSetEmbedding.from_generators(group.n, group.generators)
    wreath = subgroup_wreaths(group)
    logger.debug("centralizer of finite Q (order %d): %d wreath factors", group.order, len(wreath))
    return CentralizerDescription(
        n=group.n,
        embedding=embedding,
        houghton_generators=tuple(embedding.standard_generators()),
        wreath=tuple(wreath),
        fp=FPLabel.for_finite(group.n),
    )


def _infinite_description(
    n: int,
    embedding: FixedSetEmbedding,
    free: Sequence[FreeGenerator],
    wreath: Iterable[WreathFactor],
) -> CentralizerDescription:
    _check_bounds(n, embedding, len(free))
    return CentralizerDescription(
        n=n,
        embedding=embedding,
        houghton_generators=tuple(embedding.standard_generators()),
        free_generators=tuple(free),
        wreath=tuple(wreath),
        fp=FPLabel.for_houghton_rank(len(embedding.rays_j)),
    )


def centralizer_infinite(q: Element) -> CentralizerDescription:
    """
    C(q) = H_k x Z^r x C_1 x ... x C_t, with a finite symmetric group in
    place of H_k when q fixes no ray tail.

    Raises:
        FiniteOrderError: if phi(q) = 0
    """
    graph = gamma(q)
    embedding = FixedSetEmbedding.from_generators(q.n, [q])
    return _infinite_description(q.n, embedding, primitive_generators(q, graph), cycle_wreaths(q, graph))


def _restrict(g: Element, points: Iterable[RayPoint]) -> Element:
    return Element.from_mapping(g.n, {p: g.apply(p) for p in points if g.apply(p) != p})


def centralizer_vc(f_gens: Sequence[Element], w: Element) -> CentralizerDescription:
    """
    Centralizer of the finite-by-cyclic group generated by a finite
    subgroup F and an element w of infinite order normalizing it.

    Raises:
        HoughtonException: code ``infinite_f`` if F is infinite,
            ``finite_order_w`` if w has finite order
        NotNormalizedError: if w F w^-1 != F
    """
    f_gens = list(f_gens)
    require_same_arity(w.n, *(f.n for f in f_gens))
    if w.has_finite_order:
        raise FiniteOrderError("w must have infinite order", error_code=ErrorCodes.FINITE_ORDER_W)
    try:
        f_group = closure(f_gens, n=w.n)
    except InfiniteOrderError as e:
        raise InfiniteOrderError(
            "F must be finite",
            translations=e.translations,
            error_code=ErrorCodes.INFINITE_F,
        ) from e
    for f in f_gens:
        if conjugate(f, w) not in f_group:
            raise NotNormalizedError("w does not normalize F", details={"generator": f.to_json()})

    if f_group.order == 1:
        return centralizer_infinite(w)

    graph = gamma(w)
    gens = [*f_gens, w]
    embedding = FixedSetEmbedding.from_generators(w.n, gens)
    # points on finite, non-trivial Q-orbits
    finite_part = [
        p
        for p in prefix_points(embedding.thresholds)
        if not embedding.is_fixed(p) and graph.locator.locate(p) is None
    ]
    restricted = closure([_restrict(g, finite_part) for g in gens], n=w.n)
    logger.debug("virtually cyclic centralizer: finite part on %d points, |P| = %d", len(finite_part), restricted.order)
    return _infinite_description(w.n, embedding, primitive_generators(w, graph), subgroup_wreaths(restricted))


def centralizes(c: Element, target: Union[Element, FiniteSubgroup]) -> bool:
    """True iff c commutes with the element, or with every generator of the subgroup."""
    require_same_arity(c.n, target.n)
    if isinstance(target, FiniteSubgroup):
        return all(commutes(c, g) for g in target.generators)
    return commutes(c, target)


def quasi_ufp0_witnesses(count: int, n: int = 2) -> list[FiniteSubgroup]:
    """
    Subgroups <q_1>, ..., <q_count> of order 2 where q_i swaps (2j, 1) and
    (2j + 1, 1) for j < i; distinct cycle types make them pairwise
    non-conjugate.
    """
    if not isinstance(count, int) or count < 1:
        raise ValidationError("count must be a positive integer", field_name="count", invalid_value=count)
    witnesses = []
    for i in range(1, count + 1):
        q = Element.from_cycles(n, [[(2 * j, 1), (2 * j + 1, 1)] for j in range(i)])
        witnesses.append(closure([q]))
    return witnesses
