import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def triangle():
    from encdepth import Instance

    return Instance(((1, 0), (-1, 1), (-1, -1)), (0, 0))


@pytest.fixture
def six_points():
    from encdepth import Instance

    return Instance(((0, 5), (1, 5), (-5, -3), (-4, -4), (5, -3), (4, -4)), (0, 0))


@pytest.fixture
def simplex3():
    from encdepth import Instance

    return Instance(((3, 0, 0), (0, 3, 0), (0, 0, 3), (-2, -2, -2)), (0, 0, 0))
