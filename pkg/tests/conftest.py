import numpy as np
import pytest

from chordenergy import geometry as geo


@pytest.fixture(scope="session")
def circle512():
    return geo.make_circle(512)


@pytest.fixture(scope="session")
def circle256():
    return geo.make_circle(256)


@pytest.fixture(scope="session")
def double_segment512():
    return geo.make_double_segment(512)


@pytest.fixture(scope="session")
def random_curves():
    """A small pool of seeded random curves shared across tests."""
    return [geo.random_closed_curve(seed, n=512) for seed in range(10)]
