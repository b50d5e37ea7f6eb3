import hypothesis.strategies as st
import pytest
from hypothesis import settings

from kncross.core import PageMatrix

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@st.composite
def page_matrices(draw, min_n=4, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pages = draw(st.lists(st.sampled_from([1, -1]), min_size=n * (n - 3) // 2, max_size=n * (n - 3) // 2))
    return PageMatrix(n, tuple(pages))


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20261015)
