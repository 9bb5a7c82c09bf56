import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from arrlab.geometry.linsys import Constraint, LinearSystem, constraint, feasible_point, is_feasible
from arrlab.sampling import random_linear_system
from oracles import grid_hit

KNOWN = LinearSystem(
    3,
    (constraint((1, 1, 1), "==", 0), constraint((1, -1, 0), ">", 1), constraint((0, 1, -1), ">", 1)),
)


def test_known_witness():
    assert feasible_point(KNOWN) == (2, 0, -2)
    assert KNOWN.satisfied_by(feasible_point(KNOWN))
    assert grid_hit(KNOWN) == (Fraction(3, 2), 0, Fraction(-3, 2))


def test_strictness_matters():
    weak = LinearSystem(1, (constraint((1,), "<=", 0), constraint((1,), ">=", 0)))
    assert feasible_point(weak) == (0,)
    strict = LinearSystem(1, (constraint((1,), "<", 0), constraint((1,), ">=", 0)))
    assert feasible_point(strict) is None


def test_parallel_closures_disjoint():
    s = LinearSystem(3, (constraint((1, 1, 1), "==", 0), constraint((1, -1, 0), "<=", 1), constraint((1, -1, 0), ">=", 2)))
    assert not is_feasible(s)
    assert grid_hit(s) is None


def test_inconsistent_equalities():
    s = LinearSystem(2, (constraint((1, 1), "==", 0), constraint((2, 2), "==", 1)))
    assert feasible_point(s) is None
    s = LinearSystem(2, (constraint((1, 1), "==", 0), constraint((2, 2), "==", 0)))
    assert s.satisfied_by(feasible_point(s))


def test_empty_and_unbounded():
    assert feasible_point(LinearSystem(2)) == (0, 0)
    s = LinearSystem(2, (constraint((1, 0), ">", 5),))
    pt = feasible_point(s)
    assert s.satisfied_by(pt)


def test_rejects_floats_and_bad_ops():
    with pytest.raises(TypeError):
        Constraint((0.5,), "<", 0)
    with pytest.raises(ValueError):
        Constraint((1,), "!=", 0)
    with pytest.raises(ValueError):
        LinearSystem(2, (constraint((1,), "<", 0),))


def test_weakened():
    s = LinearSystem(1, (constraint((1,), "<", 0), constraint((1,), ">", 0)))
    assert feasible_point(s) is None
    assert feasible_point(s.weakened()) == (0,)


def test_witness_is_exact():
    s = LinearSystem(2, (constraint((3, 0), ">", 1), constraint((3, 0), "<", 2), constraint((0, 7), "==", 2)))
    pt = feasible_point(s)
    assert all(isinstance(v, Fraction) for v in pt)
    assert s.satisfied_by(pt)


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=3)


@st.composite
def systems(draw):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(0, 6))
    cons = []
    for _ in range(m):
        coeffs = draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n))
        cons.append(constraint(coeffs, draw(st.sampled_from(["==", "<=", "<", ">=", ">"])), draw(rationals)))
    return LinearSystem(n, tuple(cons))


@settings(max_examples=300)
@given(systems())
def test_witnesses_and_grid_oracle(s):
    pt = feasible_point(s)
    if pt is not None:
        assert s.satisfied_by(pt)
    if grid_hit(s) is not None:
        assert pt is not None


@given(systems())
def test_weakening_keeps_feasibility(s):
    if is_feasible(s):
        assert is_feasible(s.weakened())


def test_random_systems_sampler():
    rng = random.Random(3)
    for _ in range(50):
        s = random_linear_system(rng)
        pt = feasible_point(s)
        assert pt is None or s.satisfied_by(pt)
