"""
Test suite for Brown's monoid, its poset order and fixed-vertex witnesses.
"""

from __future__ import annotations
import itertools
import random
import pytest
import logging

from houghton.brown import (
    InjectiveMonoidMap,
    TranslationWord,
    chain_stabilizer_order,
    cone,
    cone_to_dot,
    cone_to_json,
    infinite_obstruction,
    is_fixed,
    le,
    le_witness,
    mcompose,
    q_fixed_vertex,
    right_act,
    stabilizer_order,
    translation,
    upper_bound,
)
from houghton.core.element import Element
from houghton.core.points import prefix_points
from houghton.exceptions import ArityMismatchError, NotFixedError, ValidationError
from houghton.groups import FiniteSubgroup, closure
from houghton.oracle import Box
from houghton.oracle.cases import random_box_permutation, random_finite_subgroup, random_infinite_element, random_vertex

# Configure logging for tests
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

T1 = translation((1, 0))
T2 = translation((0, 1))


class TestMonoid:
    """Test monoid maps, translation words and composition."""

    def test_translation_powers(self) -> None:
        square = mcompose(T1, T1)
        assert square == translation((2, 0))
        assert square.deficit == 2
        assert mcompose(T1, T2) == mcompose(T2, T1)

    def test_deficit_adds_with_group_elements(self, g: Element) -> None:
        assert mcompose(T1, g).deficit == 1
        assert mcompose(g, T1).deficit == 1

    def test_injective_validation(self) -> None:
        logger.info("Testing injective map validation")
        alpha = InjectiveMonoidMap(n=2, m=[1, 0], exc=[[[0, 1], [0, 1]]])
        assert alpha.deficit == 1
        assert alpha.z == (1, 0)
        assert alpha.apply((0, 1)) == (0, 1)
        assert alpha.to_json()["deficit"] == 1
        with pytest.raises(ValidationError):
            InjectiveMonoidMap(n=2, m=[-1, 0], exc=[[[0, 1], [0, 2]]])
        with pytest.raises(ValidationError):
            InjectiveMonoidMap(n=2, m=[1, 0], exc=[[[0, 1], [2, 1]]])
        logger.info("✓ Injective validation test passed")

    def test_translation_word(self) -> None:
        word = TranslationWord(exponents=(1, 0)) + TranslationWord(exponents=(0, 2))
        assert word.exponents == (1, 2)
        assert word.degree == 3
        assert word.to_map() == translation((1, 2))
        assert TranslationWord.zero(3).to_json() == [0, 0, 0]
        with pytest.raises(ValidationError):
            translation((1, -1))

    def test_arity_mismatch(self) -> None:
        with pytest.raises(ArityMismatchError):
            mcompose(T1, translation((0, 0, 1)))


class TestOrder:
    """Test the poset relation alpha <= beta iff beta = t alpha."""

    def test_examples(self) -> None:
        logger.info("Testing le on translations")
        assert le_witness(T1, mcompose(T1, T2)) == TranslationWord(exponents=(0, 1))
        assert not le(T1, T2)
        assert le_witness(T1, T1) == TranslationWord.zero(2)
        logger.info("✓ Poset examples passed")

    def test_same_phi_different_maps(self, tau: Element) -> None:
        # tau fixes the image of t_1^2 but not that of t_1
        assert mcompose(translation((2, 0)), tau) == translation((2, 0))
        alpha = mcompose(T1, tau)
        assert alpha.m == T1.m
        assert not le(T1, alpha)
        assert not le(alpha, T1)

    def test_partial_order_on_random_pairs(self) -> None:
        logger.info("Testing reflexivity, antisymmetry and transitivity")
        rng = random.Random(7)
        for _ in range(350):
            base = Element.from_cycles(2, [[(0, 1), (1, 1)]]) if rng.random() < 0.5 else None
            a, b, c = (random_vertex(rng, 2, 4, base=base) for _ in range(3))
            assert le(a, a)
            if le(a, b) and le(b, a):
                assert a == b
            if le(a, b) and le(b, c):
                witness = le_witness(a, c)
                assert witness == le_witness(a, b) + le_witness(b, c)
        logger.info("✓ Partial order test passed")

    def test_right_action_compatible(self, g: Element) -> None:
        rng = random.Random(11)
        for _ in range(30):
            base = random_vertex(rng, 2, 2)
            above = mcompose(translation((rng.randint(0, 2), rng.randint(0, 2))), base)
            assert le(base, above)
            assert le(right_act(base, g), right_act(above, g))

    def test_chains(self) -> None:
        chain = [translation((0, 0)), T1, translation((2, 1))]
        assert chain_stabilizer_order(chain) == 1
        assert chain_stabilizer_order([T1, translation((2, 1))]) == 1
        with pytest.raises(ValidationError):
            chain_stabilizer_order([T1, T2])
        with pytest.raises(ValidationError):
            chain_stabilizer_order([])


class TestStabilizers:
    """Test vertex stabilizer orders."""

    @pytest.mark.parametrize(
        "exponents, expected",
        [((1, 0), 1), ((1, 1), 2), ((2, 0), 2), ((2, 1), 6), ((0, 0), 1)],
    )
    def test_factorial_of_deficit(self, exponents: tuple[int, int], expected: int) -> None:
        assert stabilizer_order(translation(exponents)) == expected

    @pytest.mark.parametrize("exponents", [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2)])
    def test_matches_brute_force(self, exponents: tuple[int, int], tau: Element) -> None:
        logger.info(f"Testing stabilizer order of t^{list(exponents)} tau by enumeration")
        alpha = mcompose(translation(exponents), tau)
        missed = [tau.apply(p) for p in prefix_points(exponents)]
        # one point of the image joins the search so non-stabilizing moves appear
        region = missed + [alpha.apply((5, 1))]
        count = 0
        for images in itertools.permutations(region):
            h = Element.from_mapping(2, dict(zip(region, images)))
            if right_act(alpha, h) == alpha:
                count += 1
        assert count == stabilizer_order(alpha)
        logger.info(f"✓ Stabilizer order {count} confirmed")


class TestFixedVertices:
    """Test Q-fixed vertices and directedness witnesses."""

    def test_examples(self, tau: Element, sigma: Element) -> None:
        logger.info("Testing q_fixed_vertex examples")
        assert q_fixed_vertex(closure([tau])) == translation((2, 0))
        assert q_fixed_vertex(FiniteSubgroup.trivial(2)) == translation((0, 0))
        assert q_fixed_vertex(closure([tau, sigma])) == translation((2, 1))
        logger.info("✓ Fixed vertex examples passed")

    def test_random_groups_fixed(self) -> None:
        for seed in range(50):
            rng = random.Random(seed)
            group = random_finite_subgroup(rng, rng.choice((2, 3)), 3)
            vertex = q_fixed_vertex(group)
            for h in group.elements:
                assert right_act(vertex, h) == vertex

    def test_upper_bound_examples(self, tau: Element) -> None:
        trivial = FiniteSubgroup.trivial(2)
        assert upper_bound(T1, T2, trivial) == translation((1, 1))
        alpha = mcompose(T1, tau)
        assert upper_bound(alpha, alpha, trivial) == alpha
        group = closure([tau])
        square = translation((2, 0))
        assert upper_bound(square, q_fixed_vertex(group), group) == square

    def test_upper_bound_dominates(self) -> None:
        logger.info("Testing upper bounds of random fixed vertices")
        for seed in range(20):
            rng = random.Random(seed)
            group = random_finite_subgroup(rng, 2, 3)
            base = q_fixed_vertex(group)
            m = mcompose(translation((rng.randint(0, 3), rng.randint(0, 3))), base)
            n = mcompose(translation((rng.randint(0, 3), rng.randint(0, 3))), base)
            v = upper_bound(m, n, group)
            assert le(m, v) and le(n, v)
            assert is_fixed(v, group)
        logger.info("✓ Upper bound test passed")

    def test_upper_bound_of_twisted_vertices(self) -> None:
        logger.info("Testing upper bounds of vertices s t v with s a group element")
        box = Box(depth=3, n=2)
        twisted = 0
        for seed in range(40):
            rng = random.Random(seed)
            group = random_finite_subgroup(rng, 2, 3)
            base = q_fixed_vertex(group)
            m, n = (
                mcompose(s, mcompose(translation((rng.randint(0, 2), rng.randint(0, 2))), base))
                for s in (random_box_permutation(rng, box), random_infinite_element(rng, 2, 3))
            )
            assert is_fixed(m, group) and is_fixed(n, group)
            twisted += bool(m.exc) + bool(n.exc)
            v = upper_bound(m, n, group)
            assert le(m, v) and le(n, v)
            assert is_fixed(v, group)
        assert twisted > 40
        logger.info("✓ Twisted upper bound test passed")

    def test_upper_bound_of_unfixed_vertex(self, tau: Element) -> None:
        with pytest.raises(NotFixedError):
            upper_bound(T1, translation((2, 0)), closure([tau]))

    def test_infinite_obstruction(self, g: Element, tau: Element) -> None:
        assert infinite_obstruction(g)
        assert not infinite_obstruction(tau)
        rng = random.Random(5)
        for _ in range(10):
            q = random_infinite_element(rng, 3, 3)
            assert infinite_obstruction(q)
            for d in [(0, 0, 0), (1, 2, 0), (3, 1, 1)]:
                alpha = translation(d)
                assert right_act(alpha, q) != alpha


class TestCone:
    """Test the Hasse diagram of a translation cone."""

    def test_cone_size(self) -> None:
        graph = cone(translation((0, 0)), depth=2)
        assert graph.number_of_nodes() == 6
        assert graph.number_of_edges() == 6
        assert graph.has_edge((0, 0), (1, 0))

    def test_cone_exports(self, tau: Element) -> None:
        graph = cone(mcompose(T1, tau), depth=1)
        text = cone_to_dot(graph)
        assert text.startswith('digraph "cone" {')
        assert '"(0, 0)" -> "(1, 0)";' in text
        data = cone_to_json(graph)
        assert [v["word"] for v in data["vertices"]] == [[0, 0], [0, 1], [1, 0]]
        assert data["vertices"][0]["vertex"]["deficit"] == 1
        assert data["covers"] == [[[0, 0], [0, 1]], [[0, 0], [1, 0]]]
