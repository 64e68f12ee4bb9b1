import math

import numpy as np
import pytest

from stlrss.stl import (
    Always,
    And,
    Atom,
    Eventually,
    FormulaSyntaxError,
    Interval,
    Next,
    NonStrictRelease,
    Not,
    Or,
    TRUE,
    Until,
    atom_ge,
    parse_formula,
    to_source,
)

from gen import random_formula


def test_always_unbounded():
    phi = parse_formula("G (x >= 0)")
    assert phi == Always(atom_ge("x", 0.0), Interval(0.0, math.inf))


def test_next_with_interval():
    phi = parse_formula("X[0,0.1] true")
    assert phi == Next(TRUE, Interval(0.0, 0.1, False, False))


def test_nonstrict_release_with_interval():
    phi = parse_formula("a >= 0 RW[0.5,inf) b >= 0")
    assert phi == NonStrictRelease(atom_ge("a"), atom_ge("b"), Interval(0.5, math.inf))


def test_atom_le_normalized_to_ge_form():
    phi = parse_formula("x <= 2")
    assert isinstance(phi, Atom)
    assert phi.coeffs == (("x", -1.0),)
    assert phi.const == 2.0


def test_negative_threshold():
    phi = parse_formula("x >= -2.5")
    assert isinstance(phi, Atom)
    assert phi.const == 2.5


def test_precedence_unary_tightest():
    phi = parse_formula("!x >= 0 \\/ y >= 0 /\\ z >= 0")
    assert phi == Or(Not(atom_ge("x")), And(atom_ge("y"), atom_ge("z")))


def test_temporal_binds_tighter_than_and():
    phi = parse_formula("a >= 0 U b >= 0 /\\ c >= 0")
    assert phi == And(Until(atom_ge("a"), atom_ge("b")), atom_ge("c"))


def test_implies_right_associative():
    phi = parse_formula("a >= 0 -> b >= 0 -> c >= 0")
    assert phi.right == parse_formula("b >= 0 -> c >= 0")


def test_chained_until_requires_parens():
    with pytest.raises(FormulaSyntaxError, match="non-associative"):
        parse_formula("a >= 0 U b >= 0 U c >= 0")
    parse_formula("(a >= 0 U b >= 0) U c >= 0")


def test_open_interval_and_paren_formula_disambiguation():
    phi = parse_formula("F (0.5, 2] x >= 0")
    assert phi == Eventually(atom_ge("x"), Interval(0.5, 2.0, True, False))
    assert parse_formula("F (x >= 0)") == Eventually(atom_ge("x"))


def test_syntax_error_carries_position():
    with pytest.raises(FormulaSyntaxError) as exc:
        parse_formula("G (x >= )")
    assert exc.value.line == 1
    assert exc.value.column == 9


def test_unknown_operator_rejected():
    with pytest.raises(FormulaSyntaxError, match="unknown operator"):
        parse_formula("x >= 0 & y >= 0")


def test_inverted_interval_rejected():
    with pytest.raises(FormulaSyntaxError):
        parse_formula("F[2,1] x >= 0")


def test_empty_interval_rejected():
    with pytest.raises(FormulaSyntaxError):
        parse_formula("F(1,1) x >= 0")
    parse_formula("F[1,1] x >= 0")


def test_missing_comparison_after_ident():
    with pytest.raises(FormulaSyntaxError, match="expected >= or <="):
        parse_formula("G x")


def test_roundtrip_examples():
    for text in [
        "true",
        "G (x >= 0)",
        "X[0,0.1] true",
        "a >= 0 RW[0.5,inf) b >= 0",
        "!(x <= 1) -> F[0,3) y >= -1",
        "(a >= 0 U[1,2] b >= 0) /\\ c <= 0.25",
    ]:
        phi = parse_formula(text)
        assert parse_formula(to_source(phi)) == phi


def test_roundtrip_random_formulas():
    rng = np.random.default_rng(31337)
    for _ in range(500):
        phi = random_formula(rng, max_depth=5)
        assert parse_formula(to_source(phi)) == phi
