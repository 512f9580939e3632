"""Shared fixtures: reference colourings and the schemes built once per session."""

import numpy as np
import pytest

from src.config import FOUR_POINT, FOUR_POINT_BROKEN, PENTAGON
from src.core import (
    build_cyclotomic_base,
    build_switched,
    build_wfdf,
    default_wfdf_spec,
    rainbow_from_colors,
    thin_cyclic_scheme,
)


@pytest.fixture
def four_point():
    return rainbow_from_colors(FOUR_POINT, ["X", "Y", "Z", "W"])


@pytest.fixture
def four_point_broken():
    return rainbow_from_colors(FOUR_POINT_BROKEN)


@pytest.fixture
def pentagon():
    return rainbow_from_colors(PENTAGON)


@pytest.fixture
def pentagon_adjacency():
    return (np.asarray(PENTAGON) == 1).astype(np.int64)


@pytest.fixture
def thin3():
    return thin_cyclic_scheme(3)


@pytest.fixture
def thin5():
    return thin_cyclic_scheme(5)


@pytest.fixture
def two_fibers():
    """Symmetric rank-5 rainbow with fibers {0,1,2} and {3,4}."""
    return rainbow_from_colors(
        [
            [0, 2, 2, 4, 4],
            [2, 0, 2, 4, 4],
            [2, 2, 0, 4, 4],
            [4, 4, 4, 1, 3],
            [4, 4, 4, 3, 1],
        ]
    )


@pytest.fixture(scope="session")
def base15():
    return build_cyclotomic_base(4, 3)


@pytest.fixture(scope="session")
def j15(base15):
    return build_switched(base15, 3, 4, 0)


@pytest.fixture(scope="session")
def wfdf2():
    return build_wfdf(default_wfdf_spec(2))
