import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcfrechet.curves import (
    CurveError,
    point_at,
    subcurve,
    subcurve_breakpoints,
    validate_curve,
)

from conftest import curves


def test_point_at_vertex_and_midpoint():
    c = validate_curve([(0, 0), (2, 0)])
    assert point_at(c, 0).tolist() == [0, 0]
    assert point_at(c, 0.5).tolist() == [1, 0]


def test_point_at_second_edge():
    c = validate_curve([(0, 0), (2, 0), (2, 2)])
    assert point_at(c, 1.25).tolist() == [2, 0.5]


@pytest.mark.parametrize("s", [-0.1, 1.0001, math.nan])
def test_point_at_out_of_range(s):
    with pytest.raises(ValueError):
        point_at(validate_curve([(0, 0), (1, 0)]), s)


def test_subcurve_identity():
    c = validate_curve([(0, 0), (2, 0)])
    # the whole edge is the parameter range [0, 1]
    assert subcurve(c, 0, 1).vertices.tolist() == [[0, 0], [2, 0]]


def test_subcurve_interpolates_both_ends():
    c = validate_curve([(0, 0), (2, 0), (2, 2)])
    assert subcurve(c, 0.5, 1.5).vertices.tolist() == [[1, 0], [2, 0], [2, 1]]


def test_subcurve_degenerate_point():
    c = validate_curve([(0, 0), (2, 0)])
    s = subcurve(c, 0.5, 0.5)
    assert s.m == 0
    assert s.vertices.tolist() == [[1, 0]]


def test_subcurve_cut_at_vertex_keeps_vertex_once():
    c = validate_curve([(0, 0), (1, 0), (1, 1)])
    assert subcurve(c, 1, 2).vertices.tolist() == [[1, 0], [1, 1]]
    assert subcurve_breakpoints(c, 0.5, 2) == [0.5, 1, 2]


def test_subcurve_reversed_range():
    with pytest.raises(ValueError):
        subcurve(validate_curve([(0, 0), (1, 0)]), 0.8, 0.2)


def test_validate_collapses_duplicates():
    c = validate_curve([(0, 0), (0, 0), (1, 0)])
    assert c.vertices.tolist() == [[0, 0], [1, 0]]
    assert c.m == 1


def test_validate_single_point():
    c = validate_curve([(1, 2)])
    assert c.m == 0


@pytest.mark.parametrize("bad", [[], [(0, math.nan)], [(0, 0), (math.inf, 1)],
                                 [(0, 0, 0)]])
def test_validate_rejects(bad):
    with pytest.raises(CurveError):
        validate_curve(bad)


def test_vertices_are_read_only():
    c = validate_curve([(0, 0), (1, 0)])
    with pytest.raises(ValueError):
        c.vertices[0, 0] = 5


@given(curves(min_vertices=2))
def test_integer_parameters_hit_vertices_exactly(c):
    for i in range(c.m + 1):
        assert np.array_equal(point_at(c, i), c.vertices[i])


@given(curves(min_vertices=2), st.data())
def test_subcurve_round_trip(c, data):
    a = data.draw(st.floats(0, c.m))
    b = data.draw(st.floats(a, c.m))
    s = subcurve(c, a, b)
    assert np.allclose(s.vertices[0], point_at(c, a), atol=1e-12)
    assert np.allclose(s.vertices[-1], point_at(c, b), atol=1e-12)
    inner = subcurve(s, 0, s.m)
    assert np.allclose(inner.vertices[[0, -1]], s.vertices[[0, -1]], atol=1e-12)


@given(curves(min_vertices=2), st.data())
def test_point_at_lipschitz(c, data):
    h = 1e-6
    s = data.draw(st.floats(0, c.m - h))
    longest = np.hypot(*np.diff(c.vertices, axis=0).T).max()
    gap = np.hypot(*(point_at(c, s) - point_at(c, s + h)))
    assert gap <= longest * h * (1 + 1e-6) + 1e-15
