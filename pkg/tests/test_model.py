from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from angulata import (
    ZERO,
    ModelParams,
    ValidationError,
    RigidityViolation,
    arc,
    enumerate_objects,
    hom_to_suspension_dim,
    index_tuple,
    intertwines,
    is_admissible,
    lamination,
    round_down,
    round_up,
    suspend,
)

P33 = ModelParams(3, 3)
P31 = ModelParams(3, 1)
P12 = ModelParams(1, 2)
P13 = ModelParams(1, 3)


def test_params():
    assert P33.m == 10 and P33.vertex_count == 10 and list(P12.vertices) == [0, 1, 2, 3, 4]
    assert P33.odd and not ModelParams(2, 1).odd
    for bad in [(0, 1), (1, 0), (-1, 3)]:
        with pytest.raises(ValidationError):
            ModelParams(*bad)


@pytest.mark.parametrize(
    "entries, expected",
    [((0, 2, 4, 6), True), ((0, 2, 4, 9), False), ((1, 3, 5, 9), True)],
)
def test_is_admissible(entries, expected):
    assert is_admissible(entries, P33) is expected


@pytest.mark.parametrize("entries", [(0, 2, 4), (0, 2, 4, 10), (4, 2, 0, 6), (0, 2, 2, 6), (0, 2.0, 4, 6)])
def test_is_admissible_rejects_malformed(entries):
    with pytest.raises(ValidationError):
        is_admissible(entries, P33)


def test_index_tuple_sorts_and_validates():
    assert index_tuple([6, 0, 4, 2], P33) == (0, 2, 4, 6)
    with pytest.raises(ValidationError):
        index_tuple([0, 9, 4, 6], P33)


def test_enumerate_objects():
    assert len(enumerate_objects(P12)) == 5
    assert len(enumerate_objects(P33)) == 25
    assert enumerate_objects(P31) == ((0, 2, 4, 6), (1, 3, 5, 7))
    objs = enumerate_objects(P33)
    assert list(objs) == sorted(objs)


@pytest.mark.parametrize("d, n", [(1, 1), (1, 4), (2, 2), (2, 3), (3, 2), (4, 1)])
def test_enumerate_objects_brute_force(d, n):
    p = ModelParams(d, n)
    brute = [c for c in combinations(range(p.m), d + 1) if is_admissible(c, p)]
    assert list(enumerate_objects(p)) == brute


def test_intertwines_examples():
    assert intertwines((0, 2), (1, 3))
    assert not intertwines((0, 2), (2, 4))
    assert intertwines((0, 2, 4, 6), (1, 3, 5, 8))
    assert intertwines((F(1, 2), F(7, 2)), (F(5, 2), F(9, 2)))
    assert not intertwines((F(1, 2), F(7, 2)), (F(7, 10), F(16, 5)))
    a = tuple(F(k, 2) for k in (1, 5, 9, 13))
    b = tuple(F(k, 2) for k in (3, 7, 11, 15))
    assert intertwines(a, b)


def test_hom_dimension():
    assert hom_to_suspension_dim((0, 2), (1, 3)) == 1
    assert hom_to_suspension_dim((0, 2), (0, 3)) == 0
    for i in enumerate_objects(P33):
        assert hom_to_suspension_dim(i, i) == 0


def test_suspend_examples():
    assert suspend((2, 4, 6, 8), P33) == (1, 3, 5, 7)
    assert suspend((0, 2, 4, 6), P33) == (1, 3, 5, 9)
    assert suspend((1, 3), P12) == (0, 2)
    assert suspend((1, 3), P12, 5) == (1, 3)
    assert suspend(suspend((1, 3), P12, 2), P12, -2) == (1, 3)


params = st.sampled_from([P12, P13, ModelParams(1, 5), ModelParams(2, 2), P31, ModelParams(3, 2), P33])


@given(params, st.data())
def test_suspension_order_and_intertwining(p, data):
    objs = enumerate_objects(p)
    i = data.draw(st.sampled_from(objs))
    j = data.draw(st.sampled_from(objs))
    k = data.draw(st.integers(-3 * p.m, 3 * p.m))
    assert suspend(i, p, p.m) == i
    assert suspend(i, p, k) in objs
    assert intertwines(i, j) == intertwines(suspend(i, p, k), suspend(j, p, k))
    assert intertwines(i, j) == intertwines(j, i)


def test_arc_validation():
    assert arc(["1/2", "5/2"], P12) == (F(1, 2), F(5, 2))
    for bad in (["1", "5/2"], ["5/2", "1/2"], ["1/2"], ["1/2", "11/2"], ["x", "1/2"]):
        with pytest.raises(ValidationError):
            arc(bad, P12)


def test_rounding():
    p6 = P13
    a = tuple(F(k, 2) for k in (1, 5, 9, 13))
    assert round_down(a, P33) == (0, 2, 4, 6)
    assert round_up(a, P33) == (1, 3, 5, 7)
    assert round_down((F(1, 2), F(3, 2)), p6) is ZERO
    assert round_down((F(6, 5), F(9, 5)), p6) is ZERO
    assert round_up((F(9, 2), F(11, 2)), p6) is ZERO
    assert round_up((F(1, 2), F(5, 2)), P12) == (1, 3)
    assert not ZERO and repr(ZERO) == "ZERO"


def test_lamination_rejects_crossing_arcs():
    a = (F(1, 2), F(7, 2))
    b = (F(5, 2), F(9, 2))
    with pytest.raises(RigidityViolation):
        lamination([a, b])
    assert lamination([a, (F(3, 2), F(5, 2))]) == (a, (F(3, 2), F(5, 2)))
