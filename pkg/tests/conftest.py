import numpy as np
import pytest
from hypothesis import strategies as st

from opuc.core import finite


def random_alphas(rng, n, rmax=0.9):
    return rng.uniform(0, rmax, n) * np.exp(2j * np.pi * rng.uniform(size=n))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def disk_points(rmax=0.9):
    return st.builds(
        lambda r, t: complex(r * np.cos(t), r * np.sin(t)),
        st.floats(0, rmax),
        st.floats(0, 2 * np.pi),
    )


def finite_sequences(min_size=1, max_size=8, rmax=0.9):
    return st.lists(disk_points(rmax), min_size=min_size, max_size=max_size).map(finite)
