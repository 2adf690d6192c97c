import numpy as np
import pytest
from hypothesis import assume, settings
from hypothesis import strategies as st

from lcfrechet.curves import validate_curve

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def random_curve(rng, k, lo=0, hi=8, integer=True):
    """Curve with ``k`` vertices and no repeated consecutive points."""
    while True:
        if integer:
            pts = rng.integers(lo, hi + 1, size=(k, 2)).astype(float)
        else:
            pts = rng.uniform(lo, hi, size=(k, 2))
        if k == 1 or np.all(np.any(np.diff(pts, axis=0) != 0, axis=1)):
            return validate_curve(pts)


@st.composite
def curves(draw, min_vertices=1, max_vertices=5, hi=8):
    k = draw(st.integers(min_vertices, max_vertices))
    pts = draw(st.lists(st.tuples(st.integers(0, hi), st.integers(0, hi)),
                        min_size=k, max_size=k))
    # drop consecutive repeats so the vertex count is what was asked for
    dedup = [pts[0]]
    for p in pts[1:]:
        if p != dedup[-1]:
            dedup.append(p)
    assume(len(dedup) >= min_vertices)
    return validate_curve(dedup)


@st.composite
def grids(draw, max_side=4, values=st.integers(0, 3)):
    r = draw(st.integers(1, max_side))
    c = draw(st.integers(1, max_side))
    flat = draw(st.lists(values, min_size=r * c, max_size=r * c))
    return np.array(flat, dtype=float).reshape(r, c)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
