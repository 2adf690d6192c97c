import itertools
import math

import numpy as np
import pytest
from hypothesis import given

from lcfrechet.curves import validate_curve
from lcfrechet.events import (
    BoundaryPos,
    CriticalEvent,
    candidate_values,
    dedup_same_boundary,
    enumerate_events,
    group_values,
    type_b_value,
    type_c_value,
)
from lcfrechet.freespace import decide_connected
from lcfrechet.matching import frechet_distance, min_connecting_value

from conftest import curves


def test_type_b_perpendicular_foot():
    assert type_b_value((1, 1), (0, 0), (2, 0)) == (1.0, 0.5)


def test_type_b_clamped():
    assert type_b_value((3, 0), (0, 0), (2, 0)) == (1.0, 1.0)


def test_type_c_bisector():
    v, t = type_c_value((0, 1), (2, 1), (0, 0), (4, 0))
    assert t == 0.25
    assert v == pytest.approx(math.sqrt(2))


def test_type_c_misses_segment():
    assert type_c_value((0, 1), (2, 1), (5, 0), (9, 0)) is None
    # bisector parallel to the segment
    assert type_c_value((0, 0), (0, 2), (0, 1), (3, 1)) is None


def test_enumerate_contains_expected_b_event():
    P = validate_curve([(0, 0), (2, 0)])
    Q = validate_curve([(0, 1), (1, 1), (2, 1)])
    evs = enumerate_events(P, Q)
    hits = [e for e in evs if e.kind == "B" and e.end == BoundaryPos(0, 1, "bottom", 0.5)]
    assert len(hits) == 1 and hits[0].value == 1.0


def test_type_b_count_after_exclusion():
    P = validate_curve([(0, 0), (1, 2), (3, 1)])
    Q = validate_curve([(0, 1), (2, 3), (4, 0)])
    m, n = P.m, Q.m
    nb = sum(e.kind == "B" for e in enumerate_events(P, Q))
    # four boundaries sit on the excluded sides of the first and last cells
    assert nb == m * (n + 1) + n * (m + 1) - 4


def test_enumerate_precondition():
    with pytest.raises(ValueError):
        enumerate_events(validate_curve([(0, 0), (1, 0)]),
                         validate_curve([(0, 1), (1, 1)]))


def test_no_type_a_events():
    P = validate_curve([(0, 0), (2, 0), (4, 0)])
    Q = validate_curve([(0, 1), (4, 1)])
    assert {e.kind for e in enumerate_events(P, Q)} <= {"B", "C"}


def make_c(col_s, col_e, row=0, value=1.0, offset=0.5):
    return CriticalEvent("C", value, BoundaryPos(col_e, row, "left", offset),
                         BoundaryPos(col_s, row, "left", offset), "row")


def test_dedup_keeps_rightmost_start():
    a, b = make_c(2, 5), make_c(4, 5)
    assert dedup_same_boundary([a, b]) == [b]
    assert dedup_same_boundary([b, a]) == [b]


def test_dedup_single_event_unchanged():
    a = make_c(1, 3)
    assert dedup_same_boundary([a]) == [a]


def test_dedup_different_boundaries_kept():
    row = make_c(1, 3)
    col = CriticalEvent("C", 1.0, BoundaryPos(2, 4, "bottom", 0.5),
                        BoundaryPos(2, 1, "bottom", 0.5), "column")
    assert set(dedup_same_boundary([row, col])) == {row, col}


def test_group_values_chains_close_values():
    evs = [make_c(1, 2, value=v) for v in (1.0, 1.0 + 1e-12, 1.5, 2.0)]
    assert [len(g) for g in group_values(evs)] == [2, 1, 1]


def test_candidate_values_contain_frechet_distance():
    P = validate_curve([(0, 0), (3, 2), (5, 0)])
    Q = validate_curve([(0, 1), (2, 2), (4, 3), (6, 1)])
    assert frechet_distance(P, Q) in candidate_values(P, Q)


@given(curves(min_vertices=2), curves(min_vertices=3))
def test_event_invariants(P, Q):
    evs = enumerate_events(P, Q)
    for e in evs:
        if e.kind == "B":
            assert e.start == e.end
        else:
            s, t = e.start, e.end
            assert s.side == t.side and s.offset == t.offset
            if e.orientation == "row":
                assert s.row == t.row and s.col < t.col
            else:
                assert s.col == t.col and s.row < t.row
        assert e.recompute_value(P, Q) == pytest.approx(e.value, rel=1e-12, abs=1e-12)
    keys = [e.sort_key() for e in evs]
    assert keys == sorted(keys)


def test_order_is_total():
    rng = np.random.default_rng(0)
    P = validate_curve(rng.integers(0, 4, (5, 2)) + rng.uniform(0, 0.01, (5, 2)))
    Q = validate_curve(rng.integers(0, 4, (5, 2)))
    evs = enumerate_events(P, Q)
    keys = [e.sort_key() for e in evs]
    for a, b in itertools.combinations(keys, 2):
        # antisymmetry: distinct events never compare equal
        assert (a < b) != (b < a) or a == b
    # sorting twice from shuffled inputs is deterministic
    shuffled = list(evs)
    rng.shuffle(shuffled)
    assert sorted(shuffled, key=CriticalEvent.sort_key) == evs


@given(curves(min_vertices=2), curves(min_vertices=3))
def test_events_are_exact_thresholds(P, Q):
    eps, _ = min_connecting_value(P, Q)
    groups = group_values(enumerate_events(P, Q))
    values = [g[-1].value for g in groups]
    k = values.index(eps)
    assert decide_connected(P, Q, eps)
    if k > 0:
        assert not decide_connected(P, Q, values[k - 1])
