import math

import numpy as np
import pytest

from stlrss.stl import (
    Always,
    And,
    Atom,
    BOTTOM,
    Eventually,
    Interval,
    Next,
    NonStrictRelease,
    Not,
    Or,
    Release,
    TOP,
    TRUE,
    Trace,
    Until,
    atom_ge,
    eval_boolean,
    eval_robustness,
    eval_robustness_naive,
    parse_formula,
    signed_distance,
)

from gen import random_formula, random_trace


def tr(dt, **channels):
    return Trace(dt, channels)


# --- signed distance -------------------------------------------------------


def test_signed_distance_unit_coefficient():
    assert signed_distance({"x": 3.0}, atom_ge("x")) == 3.0


def test_signed_distance_halfplane():
    # x1 + x2 - 2 >= 0 evaluated at the origin: Euclidean distance to the
    # halfplane boundary is sqrt(2), and the origin is outside.
    atom = Atom((("x1", 1.0), ("x2", 1.0)), -2.0, "x1+x2-2")
    got = signed_distance({"x1": 0.0, "x2": 0.0}, atom)
    assert got == pytest.approx(-math.sqrt(2.0), abs=1e-12)
    # independent oracle: minimize ||x - x'|| over a fine grid of the halfplane
    pts = np.linspace(-4, 4, 801)
    xx, yy = np.meshgrid(pts, pts)
    inside = xx + yy - 2 >= 0
    d = np.sqrt(xx**2 + yy**2)[inside].min()
    assert got == pytest.approx(-d, abs=2e-2)


def test_signed_distance_boundary_zero():
    atom = Atom((("x1", 2.0), ("x2", 1.0)), -4.0, "2x1+x2-4")
    assert signed_distance({"x1": 1.0, "x2": 2.0}, atom) == 0.0


def test_signed_distance_dimension_mismatch():
    atom = Atom((("x1", 1.0), ("x2", 1.0)), 0.0, "a")
    with pytest.raises(ValueError, match="dimension mismatch"):
        signed_distance([1.0], atom)


# --- paper-anchored next-operator timing -----------------------------------


def test_next_true_at_dt_01():
    phi = parse_formula("X[0,0.1] true")
    assert eval_robustness(phi, tr(0.1, x=[0.0, 0.0]), 0) == TOP


def test_next_false_at_dt_02():
    phi = parse_formula("X[0,0.1] true")
    assert eval_robustness(phi, tr(0.2, x=[0.0, 0.0]), 0) == BOTTOM


def test_next_at_last_sample_is_bottom():
    phi = Next(TRUE)
    assert eval_robustness(phi, tr(0.1, x=[1.0]), 0) == BOTTOM


def test_next_boundary_is_exact_in_rational_arithmetic():
    # 3*0.1 lands exactly on the bound 0.3 even though the floats disagree.
    phi = Eventually(atom_ge("x"), Interval(0.3, 0.3, False, False))
    trace = tr(0.1, x=[-1.0, -1.0, -1.0, 7.0, -1.0])
    assert eval_robustness(phi, trace, 0) == 7.0


# --- hand-enumerated examples ----------------------------------------------


def test_always_min_over_samples():
    phi = parse_formula("G (x >= 0)")
    assert eval_robustness(phi, tr(1.0, x=[1.0, 3.0, 2.0]), 0) == 1.0


def test_boolean_examples():
    phi = parse_formula("G (x >= 0)")
    assert eval_boolean(phi, tr(1.0, x=[1.0, 3.0, 2.0]), 0) is True
    assert eval_boolean(phi, tr(1.0, x=[1.0, -1.0]), 0) is False
    assert eval_boolean(TRUE, tr(1.0, x=[0.0]), 0) is True


def test_until_hand_enumeration():
    # x=[1,2,3], y=[-1,-2,5], dt=1: U over [0,inf)
    # k=0: min(y0)= -1; k=1: min(y1, x0)=-2; k=2: min(y2, x0, x1)=1 -> max=1
    phi = Until(atom_ge("x"), atom_ge("y"))
    assert eval_robustness(phi, tr(1.0, x=[1.0, 2.0, 3.0], y=[-1.0, -2.0, 5.0]), 0) == 1.0


def test_until_window_excludes_early_witness():
    phi = Until(atom_ge("x"), atom_ge("y"), Interval(2.0, 2.0, False, False))
    trace = tr(1.0, x=[1.0, 2.0, 3.0], y=[9.0, 9.0, 5.0])
    # only i'=2 is in the window: min(y2, x0, x1) = min(5,1,2) = 1
    assert eval_robustness(phi, trace, 0) == 1.0


def test_nonstrict_release_hand_enumeration():
    # RW over [0,inf): min over i' of max(y(i'), max(x(0..i')))
    # x=[-1,4,-1], y=[2,-3,-5]:
    # i'=0: max(2,-1)=2; i'=1: max(-3,4)=4; i'=2: max(-5,4)=4 -> min=2
    phi = NonStrictRelease(atom_ge("x"), atom_ge("y"))
    assert eval_robustness(phi, tr(1.0, x=[-1.0, 4.0, -1.0], y=[2.0, -3.0, -5.0]), 0) == 2.0


def test_release_strict_vs_nonstrict_inner_bound():
    # Release's inner join excludes i' itself; RW includes it.
    x = [5.0, -1.0]
    y = [-2.0, -3.0]
    trace = tr(1.0, x=x, y=y)
    rel = eval_robustness(Release(atom_ge("x"), atom_ge("y")), trace, 0)
    rw = eval_robustness(NonStrictRelease(atom_ge("x"), atom_ge("y")), trace, 0)
    # R: i'=0 -> max(y0, empty join bottom) = -2 ; i'=1 -> max(y1, x0)=5 -> min=-2
    # RW: i'=0 -> max(y0, x0) = 5 ; i'=1 -> max(y1, x0, x1)=5 -> min=5
    assert rel == -2.0
    assert rw == 5.0


# --- empty-window conventions ----------------------------------------------


def test_empty_window_until_bottom():
    phi = Until(TRUE, atom_ge("x"), Interval(5.0, 6.0))
    assert eval_robustness(phi, tr(1.0, x=[1.0, 1.0]), 0) == BOTTOM


def test_empty_window_nonstrict_release_top():
    phi = NonStrictRelease(atom_ge("x"), atom_ge("x"), Interval(5.0, 6.0))
    assert eval_robustness(phi, tr(1.0, x=[-1.0, -1.0]), 0) == TOP


def test_interval_with_no_grid_point():
    phi = Eventually(atom_ge("x"), Interval(0.05, 0.09, False, False))
    assert eval_robustness(phi, tr(0.1, x=[1.0, 1.0, 1.0]), 0) == BOTTOM


def test_empty_meet_in_until_at_window_start():
    # i' = i contributes min(right(i), meet over empty set = top) = right(i)
    phi = Until(atom_ge("x", 100.0), atom_ge("y"))
    assert eval_robustness(phi, tr(1.0, x=[0.0], y=[3.0]), 0) == 3.0


# --- randomized equivalences ------------------------------------------------


def test_dp_equals_naive_randomized():
    rng = np.random.default_rng(2024)
    for _ in range(400):
        phi = random_formula(rng, max_depth=4)
        trace = random_trace(rng, max_samples=30)
        i = int(rng.integers(0, trace.n_samples))
        assert eval_robustness(phi, trace, i) == eval_robustness_naive(phi, trace, i)


def test_sign_matches_boolean_randomized():
    rng = np.random.default_rng(99)
    checked = 0
    for _ in range(400):
        phi = random_formula(rng, max_depth=4)
        trace = random_trace(rng, max_samples=30)
        i = int(rng.integers(0, trace.n_samples))
        rob = eval_robustness(phi, trace, i)
        if rob == 0.0:
            continue
        checked += 1
        assert (rob > 0) == eval_boolean(phi, trace, i)
    assert checked > 300


def test_duality_negation_randomized():
    rng = np.random.default_rng(7)
    for _ in range(300):
        phi = random_formula(rng, max_depth=4)
        trace = random_trace(rng, max_samples=30)
        i = int(rng.integers(0, trace.n_samples))
        assert eval_robustness(Not(phi), trace, i) == -eval_robustness(phi, trace, i)


def test_index_out_of_range():
    with pytest.raises(IndexError):
        eval_robustness(TRUE, tr(1.0, x=[1.0]), 1)


def test_missing_channel_named_in_error():
    phi = parse_formula("G (missing >= 0)")
    with pytest.raises(Exception, match="missing"):
        eval_robustness(phi, tr(1.0, x=[1.0]), 0)
