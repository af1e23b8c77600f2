"""Seeded instance sources: determinism and structural guarantees."""

import pytest

from gridjct.alternation import check_edge_alternation
from gridjct.errors import PreconditionViolation
from gridjct.generate import gen_crossing_instance, gen_random_curve
from gridjct.grid import connects, is_curve, on_different_sides


def test_curve_determinism():
    a = gen_random_curve(12, 99)
    b = gen_random_curve(12, 99)
    assert a == b
    assert a != gen_random_curve(12, 100)


def test_curves_structurally_valid():
    for seed in range(150):
        curve = gen_random_curve(10, seed)
        curve.validate()
        assert curve.kind == "closed"
        assert is_curve(curve.to_edge_set())
        assert check_edge_alternation(curve)


def test_curve_margin():
    for seed in range(30):
        curve = gen_random_curve(8, seed, margin=1)
        assert all(1 <= p.x <= 7 and 1 <= p.y <= 7 for p in curve.point_set)


def test_curve_small_n():
    gen_random_curve(2, 0).validate()
    with pytest.raises(PreconditionViolation):
        gen_random_curve(1, 0)


def test_crossing_instances_valid():
    for seed in range(60):
        inst = gen_crossing_instance(9, seed)
        inst.validate()
        bset, rset = inst.blue.to_edge_set(), inst.red.to_edge_set()
        assert is_curve(bset)
        assert connects(rset, inst.sides.p1, inst.sides.p2)
        assert on_different_sides(bset, inst.sides.p1, inst.sides.p2)


def test_crossing_instance_determinism():
    assert gen_crossing_instance(8, 5) == gen_crossing_instance(8, 5)


def test_crossing_instance_avoid_midpoint():
    for seed in range(30):
        inst = gen_crossing_instance(8, seed, avoid_midpoint=True)
        assert inst.sides.mid not in inst.red.point_set
