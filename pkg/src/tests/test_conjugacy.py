"""
Test suite for constructive conjugacy of finite-order elements.
"""

from __future__ import annotations
import random
import pytest
import logging

from houghton.core.conjugacy import are_conjugate, conjugator
from houghton.core.element import Element, conjugate, cycle_type
from houghton.exceptions import ArityMismatchError, InfiniteOrderError
from houghton.oracle.box import Box
from houghton.oracle.cases import random_finite_order_pair

# Configure logging for tests
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


class TestConjugator:
    """Test conjugator construction and its tie-breaking."""

    def test_transpositions(self, tau: Element, sigma: Element) -> None:
        logger.info("Testing conjugator(tau, sigma)")
        h = conjugator(tau, sigma)
        assert h is not None
        assert h == Element.from_cycles(2, [[(1, 1), (0, 2)]])
        assert conjugate(tau, h) == sigma
        logger.info(f"Conjugator: {h.to_json()}")
        logger.info("✓ Transposition conjugator test passed")

    def test_self_conjugator_is_identity(self, tau: Element) -> None:
        h = conjugator(tau, tau)
        assert h is not None and h.is_identity

    def test_different_cycle_types(self, tau: Element, q2: Element) -> None:
        assert conjugator(tau, q2) is None
        assert not are_conjugate(tau, q2)

    def test_support_stays_in_moved_sets(self) -> None:
        q1 = Element.from_cycles(3, [[(0, 1), (1, 1), (2, 1)], [(0, 2), (1, 2)]])
        q2 = Element.from_cycles(3, [[(4, 3), (0, 1)], [(1, 2), (2, 3), (5, 3)]])
        h = conjugator(q1, q2)
        assert h is not None
        assert conjugate(q1, h) == q2
        allowed = set(q1.moved_points()) | set(q2.moved_points())
        assert set(h.moved_points()) <= allowed

    def test_infinite_order_rejected(self, g: Element, tau: Element) -> None:
        with pytest.raises(InfiniteOrderError):
            conjugator(g, tau)
        with pytest.raises(InfiniteOrderError):
            conjugator(tau, g)

    def test_arity_mismatch(self, tau: Element, swap3: Element) -> None:
        with pytest.raises(ArityMismatchError):
            conjugator(tau, swap3)

    def test_random_pairs_agree_with_cycle_type(self) -> None:
        logger.info("Testing conjugator on random box pairs")
        box = Box(depth=4, n=2)
        for seed in range(25):
            q1, q2 = random_finite_order_pair(random.Random(seed), box)
            h = conjugator(q1, q2)
            if cycle_type(q1) == cycle_type(q2):
                assert h is not None
                assert conjugate(q1, h) == q2
            else:
                assert h is None
        logger.info("✓ Random pair test passed")
