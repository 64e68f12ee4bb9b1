"""STL formulas, traces, and offline robustness monitoring."""

from .blame import RobustnessReport, blame, provenance_signal
from .formula import (
    Always,
    And,
    Atom,
    BOTTOM,
    Eventually,
    FULL,
    Formula,
    Implies,
    Interval,
    Next,
    Not,
    NonStrictRelease,
    Or,
    Release,
    TOP,
    TRUE,
    TrueFormula,
    Until,
    atom_ge,
    atom_le,
    atoms_of,
    conj,
    disj,
    margin,
)
from .parser import FormulaSyntaxError, parse_formula, to_source
from .rewrite import desugar, rewrite_nonstrict_release
from .semantics import (
    eval_boolean,
    eval_robustness,
    eval_robustness_naive,
    robustness_signal,
    signed_distance,
)
from .trace import Trace, TraceError, read_trace_csv, write_trace_csv

__all__ = [
    "Always",
    "And",
    "Atom",
    "BOTTOM",
    "Eventually",
    "FULL",
    "Formula",
    "FormulaSyntaxError",
    "Implies",
    "Interval",
    "Next",
    "Not",
    "NonStrictRelease",
    "Or",
    "Release",
    "RobustnessReport",
    "TOP",
    "TRUE",
    "Trace",
    "TraceError",
    "TrueFormula",
    "Until",
    "atom_ge",
    "atom_le",
    "atoms_of",
    "blame",
    "conj",
    "desugar",
    "disj",
    "eval_boolean",
    "eval_robustness",
    "eval_robustness_naive",
    "margin",
    "parse_formula",
    "provenance_signal",
    "read_trace_csv",
    "rewrite_nonstrict_release",
    "robustness_signal",
    "signed_distance",
    "to_source",
    "write_trace_csv",
]
