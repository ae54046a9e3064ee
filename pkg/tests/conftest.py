import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from msgeo.random_spaces import integer_space

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def spaces(draw, n_min=1, n_max=5):
    """Integer-valued metric spaces, drawn through a seeded generator."""
    n = draw(st.integers(n_min, n_max))
    seed = draw(st.integers(0, 2**32 - 1))
    return integer_space(n, np.random.default_rng(seed))


@st.composite
def subsets(draw, n):
    idx = draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=n, unique=True))
    return tuple(sorted(idx))


@pytest.fixture
def gen():
    return np.random.default_rng(0)
