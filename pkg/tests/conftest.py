import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from finsep import enumerate_topologies, parse_space, point_space


@pytest.fixture(scope="session")
def sierpinski():
    return parse_space("{a>b}")


@pytest.fixture(scope="session")
def antidiscrete2():
    return parse_space("{x<->y}")


@pytest.fixture(scope="session")
def discrete2():
    return parse_space("{a,b}")


@pytest.fixture(scope="session")
def point():
    return point_space()


@pytest.fixture(scope="session")
def small_census():
    """All labeled spaces by size, up to four points."""
    return {n: list(enumerate_topologies(n)) for n in range(5)}
