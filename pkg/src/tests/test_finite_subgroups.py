"""
Test suite for finite subgroups: closure, isotropy, partitions and Weyl groups.
"""

from __future__ import annotations
import random
import pytest
import logging

from houghton.core.element import Element, compose, conjugate
from houghton.exceptions import CapExceededError, ErrorCodes, InfiniteOrderError, NotASubgroupError, ValidationError
from houghton.groups import (
    FiniteSubgroup,
    PartitionSummary,
    class_witness,
    closure,
    conjugating_element,
    is_subgroup,
    isotropy,
    normalizer,
    orbits,
    partition,
    weyl,
)
from houghton.oracle.cases import random_finite_subgroup

# Configure logging for tests
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@pytest.fixture
def sym3(tau: Element, sigma: Element) -> FiniteSubgroup:
    """Symmetric group on (0, 1), (1, 1), (0, 2)."""
    return closure([tau, sigma])


@pytest.fixture
def cyclic6() -> FiniteSubgroup:
    """Cyclic group of order 6: a 2-cycle on ray 1 times a 3-cycle on ray 2."""
    return closure([Element.from_cycles(2, [[(0, 1), (1, 1)], [(0, 2), (1, 2), (2, 2)]])])


class TestClosure:
    """Test closure and the subgroup container."""

    def test_single_transposition(self, tau: Element) -> None:
        logger.info("Testing closure([tau])")
        group = closure([tau])
        assert group.order == 2
        assert group.elements[0].is_identity
        assert group.elements[1] == tau
        assert group.support == ((0, 1), (1, 1))
        logger.info("✓ Single generator closure test passed")

    def test_symmetric_group(self, sym3: FiniteSubgroup, tau: Element, sigma: Element) -> None:
        logger.info("Testing closure([tau, sigma])")
        assert sym3.order == 6
        assert sym3.support == ((0, 1), (1, 1), (0, 2))
        assert compose(tau, sigma) in sym3
        assert len(set(sym3.elements)) == 6
        assert all(e.has_finite_order for e in sym3.elements)
        logger.info("✓ Symmetric group closure test passed")

    def test_closed_under_products(self, sym3: FiniteSubgroup) -> None:
        for a in sym3.elements:
            for b in sym3.elements:
                assert compose(a, b) in sym3

    def test_membership(self, sym3: FiniteSubgroup, g: Element, q2: Element) -> None:
        assert g not in sym3
        assert q2 not in sym3
        assert Element.identity(2) in sym3
        assert "tau" not in sym3
        assert sym3.fixes((2, 1))
        assert not sym3.fixes((0, 2))

    def test_infinite_generator(self, g: Element, tau: Element) -> None:
        with pytest.raises(InfiniteOrderError) as info:
            closure([tau, g])
        assert info.value.error_code == ErrorCodes.INFINITE_ORDER_GENERATOR

    def test_cap(self, tau: Element, sigma: Element) -> None:
        with pytest.raises(CapExceededError) as info:
            closure([tau, sigma], cap=3)
        assert info.value.cap == 3

    def test_cap_checked_before_listing(self) -> None:
        logger.info("Testing the cap against Sym(12)")
        cycle = Element.from_cycles(2, [[(i, 1) for i in range(12)]])
        swap = Element.from_cycles(2, [[(0, 1), (1, 1)]])
        with pytest.raises(CapExceededError):
            closure([cycle, swap], cap=1000)
        logger.info("✓ Cap before listing test passed")

    def test_permutation_group(self, sym3: FiniteSubgroup, cyclic6: FiniteSubgroup) -> None:
        assert sym3.perm_group.order() == 6
        assert sym3.perm_group.is_transitive()
        assert cyclic6.perm_group.order() == 6
        assert not cyclic6.perm_group.is_transitive()

    def test_empty_generators(self) -> None:
        assert closure([], n=3).order == 1
        with pytest.raises(ValidationError):
            closure([])

    def test_json_round_trip(self, sym3: FiniteSubgroup) -> None:
        raw = sym3.to_json()
        assert raw["n"] == 2
        assert len(raw["generators"]) == 2
        restored = FiniteSubgroup.from_json(raw)
        assert set(restored.elements) == set(sym3.elements)

    @pytest.mark.parametrize(
        "raw",
        [{"n": 2}, {"n": 1, "generators": []}, {"n": 2, "generators": "tau"}, [2]],
    )
    def test_bad_json(self, raw: object) -> None:
        with pytest.raises(ValidationError):
            FiniteSubgroup.from_json(raw)


class TestIsotropy:
    """Test point isotropy, orbits and normalizers."""

    def test_unmoved_point(self, tau: Element) -> None:
        group = closure([tau])
        assert isotropy(group, (5, 1)).order == 2

    def test_moved_point(self, tau: Element) -> None:
        assert isotropy(closure([tau]), (0, 1)).order == 1

    def test_symmetric_group_point(self, sym3: FiniteSubgroup) -> None:
        logger.info("Testing isotropy of (0, 1) in Sym(3)")
        stab = isotropy(sym3, (0, 1))
        assert stab.order == 2
        assert Element.from_cycles(2, [[(1, 1), (0, 2)]]) in stab
        assert is_subgroup(stab, sym3)
        logger.info("✓ Isotropy test passed")

    def test_orbits(self, cyclic6: FiniteSubgroup) -> None:
        assert orbits(cyclic6) == [((0, 1), (1, 1)), ((0, 2), (1, 2), (2, 2))]

    def test_stabilizer_orders(self, cyclic6: FiniteSubgroup) -> None:
        assert [isotropy(cyclic6, p).order for p in cyclic6.support] == [3, 3, 2, 2, 2]
        assert orbits(FiniteSubgroup.trivial(2)) == []

    def test_normalizer(self, sym3: FiniteSubgroup) -> None:
        stab = isotropy(sym3, (0, 1))
        assert normalizer(sym3, stab).order == 2
        assert normalizer(sym3, sym3).order == 6

    def test_conjugating_element(self, sym3: FiniteSubgroup) -> None:
        a, b = isotropy(sym3, (0, 1)), isotropy(sym3, (0, 2))
        q = conjugating_element(sym3, a, b)
        assert q is not None
        assert {conjugate(e, q) for e in a.elements} == set(b.elements)
        assert conjugating_element(sym3, a, FiniteSubgroup.trivial(2)) is None

    def test_not_a_subgroup(self, tau: Element, q2: Element) -> None:
        with pytest.raises(NotASubgroupError):
            normalizer(closure([tau]), closure([q2]))


class TestPartition:
    """Test the isotropy partition of S_Q."""

    def test_transposition(self, tau: Element) -> None:
        logger.info("Testing partition(<tau>)")
        part = partition(closure([tau]))
        assert part.t == 1
        cls = part.classes[0]
        assert cls.points == ((0, 1), (1, 1))
        assert cls.isotropy.order == 1
        assert (cls.index, cls.r) == (2, 1)
        logger.info("✓ Transposition partition test passed")

    def test_trivial_group(self) -> None:
        part = partition(FiniteSubgroup.trivial(2))
        assert part.classes == ()
        assert part.to_json() == {"fixed_complement": [], "classes": []}

    def test_symmetric_group(self, sym3: FiniteSubgroup) -> None:
        part = partition(sym3)
        assert part.to_json() == {
            "fixed_complement": [[0, 1], [1, 1], [0, 2]],
            "classes": [{"points": [[0, 1], [1, 1], [0, 2]], "isotropy_order": 2, "index": 3, "r": 1}],
        }

    def test_summary_parser(self, sym3: FiniteSubgroup) -> None:
        payload = partition(sym3).to_json()
        summary = PartitionSummary.from_json(payload)
        assert summary.classes[0].isotropy_order == 2
        assert summary.fixed_complement == sym3.support
        assert summary.to_json() == payload
        with pytest.raises(ValidationError):
            PartitionSummary.from_json({"fixed_complement": [], "classes": {}})

    def test_two_orbits_one_class(self, q2: Element) -> None:
        cls = partition(closure([q2])).classes[0]
        assert (cls.index, cls.r) == (2, 2)
        assert cls.orbit_representatives == ((0, 1), (2, 1))

    def test_classes_ordered_by_least_point(self, cyclic6: FiniteSubgroup) -> None:
        part = partition(cyclic6)
        assert [(c.isotropy.order, c.index, c.r) for c in part.classes] == [(3, 2, 1), (2, 3, 1)]
        assert part.class_of((2, 2)) == 1
        assert part.class_of((7, 1)) is None

    def test_invariants_on_random_groups(self) -> None:
        logger.info("Testing partition invariants on random groups")
        for seed in range(15):
            rng = random.Random(seed)
            n = rng.choice((2, 3))
            group = random_finite_subgroup(rng, n, 3)
            part = partition(group)
            assert sum(len(c.points) for c in part.classes) == len(group.support)
            for orbit in orbits(group):
                assert len({part.class_of(p) for p in orbit}) == 1
            for cls in part.classes:
                assert len(cls.points) % cls.index == 0
                assert len(cls.points) // cls.index == cls.r
                assert sum(1 for orbit in orbits(group) if orbit[0] in cls.points) == cls.r
                for p in cls.points:
                    q = class_witness(group, cls, p)
                    image = {conjugate(e, q) for e in cls.isotropy.elements}
                    assert image == set(isotropy(group, p).elements)
                w = weyl(group, cls.isotropy)
                assert w.order * cls.isotropy.order == w.normalizer_order
                assert w.normalizer_order == normalizer(group, cls.isotropy).order
        logger.info("✓ Partition invariant test passed")

    def test_class_witness_rejects_outside_point(self, tau: Element) -> None:
        group = closure([tau])
        cls = partition(group).classes[0]
        with pytest.raises(ValidationError):
            class_witness(group, cls, (4, 2))


class TestWeyl:
    """Test Weyl groups on coset indices."""

    def test_regular_action(self, tau: Element) -> None:
        group = closure([tau])
        w = weyl(group, FiniteSubgroup.trivial(2))
        assert (w.order, w.degree) == (2, 2)
        assert w.generators == ((1, 0),)
        assert w.representatives == (tau,)

    def test_self_normalizing(self, sym3: FiniteSubgroup) -> None:
        logger.info("Testing the Weyl group of a transposition in Sym(3)")
        w = weyl(sym3, isotropy(sym3, (0, 1)))
        assert (w.order, w.degree, w.normalizer_order) == (1, 3, 2)
        assert w.generators == ()
        logger.info("✓ Self-normalizing Weyl group test passed")

    def test_whole_group(self, sym3: FiniteSubgroup) -> None:
        w = weyl(sym3, sym3)
        assert (w.order, w.degree) == (1, 1)

    def test_cyclic_quotients(self, cyclic6: FiniteSubgroup) -> None:
        orders = [weyl(cyclic6, c.isotropy).order for c in partition(cyclic6).classes]
        assert orders == [2, 3]

    def test_not_a_subgroup(self, tau: Element, sigma: Element) -> None:
        with pytest.raises(NotASubgroupError):
            weyl(closure([tau]), closure([sigma]))
