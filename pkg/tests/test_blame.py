import numpy as np

from stlrss.stl import (
    Always,
    And,
    Next,
    Not,
    Or,
    TRUE,
    Trace,
    atom_ge,
    blame,
    eval_robustness,
)

from gen import random_formula, random_trace


def tr(dt, **channels):
    return Trace(dt, channels)


def test_min_selects_more_negative_conjunct():
    phi = And(atom_ge("a"), atom_ge("b"))
    report = blame(phi, tr(1.0, a=[5.0], b=[-2.0]))
    assert report.blamed_atom == "b"
    assert report.robustness == -2.0
    assert report.critical_sample == 0
    assert report.per_atom_extremes == {"a": (5.0, 0), "b": (-2.0, 0)}


def test_blame_through_always_or():
    phi = Always(Or(atom_ge("a"), atom_ge("b")))
    report = blame(phi, tr(1.0, a=[1.0, -3.0], b=[2.0, -1.0]))
    assert report.blamed_atom == "b"
    assert report.critical_sample == 1
    assert report.robustness == -1.0


def test_tie_breaks_earliest_sample_then_name():
    phi = Always(And(atom_ge("b"), atom_ge("a")))
    report = blame(phi, tr(1.0, a=[-1.0, -1.0], b=[-1.0, 0.0]))
    assert report.critical_sample == 0
    assert report.blamed_atom == "a"


def test_structural_value_has_no_blame():
    report = blame(TRUE, tr(1.0, x=[1.0]))
    assert report.blamed_atom is None
    assert report.critical_sample is None
    report = blame(Next(atom_ge("x")), tr(1.0, x=[1.0]))  # no next sample: bottom
    assert report.robustness == float("-inf")
    assert report.blamed_atom is None


def test_negation_keeps_origin():
    phi = Not(atom_ge("a"))
    report = blame(phi, tr(1.0, a=[4.0]))
    assert report.blamed_atom == "a"
    assert report.robustness == -4.0


def test_blame_robustness_matches_eval_randomized():
    rng = np.random.default_rng(555)
    for _ in range(300):
        phi = random_formula(rng, max_depth=4)
        trace = random_trace(rng, max_samples=25)
        report = blame(phi, trace)
        assert report.robustness == eval_robustness(phi, trace, 0)


def test_blamed_atom_margin_appears_at_reported_sample():
    rng = np.random.default_rng(77)
    hits = 0
    for _ in range(200):
        phi = random_formula(rng, max_depth=3)
        trace = random_trace(rng, max_samples=20)
        report = blame(phi, trace)
        if report.blamed_atom is None:
            continue
        hits += 1
        value, _ = report.per_atom_extremes[report.blamed_atom]
        assert np.isfinite(report.robustness)
        assert report.critical_sample is not None
        assert 0 <= report.critical_sample < trace.n_samples
    assert hits > 100
