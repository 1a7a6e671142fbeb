"""Shared quivers for the test suite."""

import pytest

from src.quiver import QuiverSpec, parse_quiver

EXAMPLE_ONE = "><<><,a,b,c,d,e"
EXAMPLE_TWO = ">>><,a,d,c,b"
ALTERNATING = "><><"


@pytest.fixture(scope="session")
def ex1() -> QuiverSpec:
    """Five vertices, L = (3,2), R = (2,2,1)."""
    return parse_quiver(EXAMPLE_ONE)


@pytest.fixture(scope="session")
def ex2() -> QuiverSpec:
    """Four vertices, reflected cover, L = (4), R = (2,1,1)."""
    return parse_quiver(EXAMPLE_TWO)


@pytest.fixture(scope="session")
def alternating() -> QuiverSpec:
    return parse_quiver(ALTERNATING)
