"""
Shared elements for the Houghton test suite.
"""

from __future__ import annotations
import pytest

from houghton.core.element import Element


@pytest.fixture
def g() -> Element:
    """The shift of H_2: m = (1, -1), (0, 2) -> (0, 1)."""
    return Element.shift(2, up=1, down=2)


@pytest.fixture
def tau() -> Element:
    """Transposition of (0, 1) and (1, 1)."""
    return Element.from_cycles(2, [[(0, 1), (1, 1)]])


@pytest.fixture
def sigma() -> Element:
    """Transposition of (0, 1) and (0, 2)."""
    return Element.from_cycles(2, [[(0, 1), (0, 2)]])


@pytest.fixture
def q2() -> Element:
    """Two disjoint 2-cycles on ray 1."""
    return Element.from_cycles(2, [[(0, 1), (1, 1)], [(2, 1), (3, 1)]])


@pytest.fixture
def g3() -> Element:
    """The shift on rays 1 and 2 inside H_3, trivial on ray 3."""
    return Element(n=3, m=[1, -1, 0], exc=[[[0, 2], [0, 1]]])


@pytest.fixture
def swap3() -> Element:
    """Transposition of (0, 3) and (1, 3) in H_3."""
    return Element.from_cycles(3, [[(0, 3), (1, 3)]])


@pytest.fixture
def two_copies() -> Element:
    """Disjoint shifts on rays (1, 2) and (3, 4) in H_4."""
    return Element(n=4, m=[1, -1, 1, -1], exc=[[[0, 2], [0, 1]], [[0, 4], [0, 3]]])
