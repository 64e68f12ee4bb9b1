"""Concrete grammar for STL formulas.

::

    formula := `true` | atom | `!` formula | formula (`/\\` | `\\/` | `->`) formula
             | (`X`|`F`|`G`) interval? formula | formula (`U`|`R`|`RW`) interval? formula
             | `(` formula `)`
    atom    := ident (`>=` | `<=`) number
    interval := (`[`|`(`) number `,` (number|`inf`) (`]`|`)`)

An omitted interval means ``[0, inf)``.  Unary operators bind tighter than
binary ones; ``U``/``R``/``RW`` bind tighter than ``/\\``, which binds
tighter than ``\\/``, which binds tighter than the right-associative
``->``.  The temporal binaries are non-associative: chaining them requires
parentheses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .formula import (
    FULL,
    Always,
    And,
    Atom,
    Eventually,
    Formula,
    Implies,
    Interval,
    Next,
    Not,
    NonStrictRelease,
    Or,
    Release,
    TRUE,
    TrueFormula,
    Until,
    atom_ge,
    atom_le,
    _num,
)


class FormulaSyntaxError(ValueError):
    """Raised on malformed formula text, with 1-based line/column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


_KEYWORDS = {"true", "inf", "X", "F", "G", "U", "R", "RW"}


@dataclass(frozen=True)
class _Token:
    kind: str  # IDENT NUMBER TRUE INF GE LE NOT AND OR IMPLIES LP RP LB RB COMMA X F G U R RW EOF
    text: str
    line: int
    col: int


def _lex(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)

    def err(msg: str):
        raise FormulaSyntaxError(msg, line, col)

    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            if word in _KEYWORDS:
                kind = {"true": "TRUE", "inf": "INF"}.get(word, word)
            else:
                kind = "IDENT"
            tokens.append(_Token(kind, word, line, start_col))
            col += j - i
            i = j
            continue
        if ch.isdigit() or ch == "." or (ch == "-" and i + 1 < n and (text[i + 1].isdigit() or text[i + 1] == ".")):
            j = i + 1 if ch == "-" else i
            while j < n and (text[j].isdigit() or text[j] == "."):
                j += 1
            if j < n and text[j] in "eE":
                k = j + 1
                if k < n and text[k] in "+-":
                    k += 1
                if k < n and text[k].isdigit():
                    j = k
                    while j < n and text[j].isdigit():
                        j += 1
            word = text[i:j]
            try:
                float(word)
            except ValueError:
                err(f"malformed number {word!r}")
            tokens.append(_Token("NUMBER", word, line, start_col))
            col += j - i
            i = j
            continue
        two = text[i : i + 2]
        if two == ">=":
            tokens.append(_Token("GE", two, line, start_col))
        elif two == "<=":
            tokens.append(_Token("LE", two, line, start_col))
        elif two == "/\\":
            tokens.append(_Token("AND", two, line, start_col))
        elif two == "\\/":
            tokens.append(_Token("OR", two, line, start_col))
        elif two == "->":
            tokens.append(_Token("IMPLIES", two, line, start_col))
        else:
            one = ch
            single = {"!": "NOT", "(": "LP", ")": "RP", "[": "LB", "]": "RB", ",": "COMMA"}
            if one in single:
                tokens.append(_Token(single[one], one, line, start_col))
                i += 1
                col += 1
                continue
            err(f"unknown operator or character {one!r}")
        i += 2
        col += 2
    tokens.append(_Token("EOF", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def take(self, kind: str | None = None) -> _Token:
        tok = self.tokens[self.pos]
        if kind is not None and tok.kind != kind:
            raise FormulaSyntaxError(
                f"expected {kind}, found {tok.text!r}" if tok.kind != "EOF" else f"expected {kind}, found end of input",
                tok.line,
                tok.col,
            )
        self.pos += 1
        return tok

    def parse(self) -> Formula:
        phi = self.implies()
        tok = self.peek()
        if tok.kind != "EOF":
            raise FormulaSyntaxError(f"unexpected {tok.text!r} after formula", tok.line, tok.col)
        return phi

    def implies(self) -> Formula:
        left = self.disjunction()
        if self.peek().kind == "IMPLIES":
            self.take()
            return Implies(left, self.implies())
        return left

    def disjunction(self) -> Formula:
        out = self.conjunction()
        while self.peek().kind == "OR":
            self.take()
            out = Or(out, self.conjunction())
        return out

    def conjunction(self) -> Formula:
        out = self.temporal_binary()
        while self.peek().kind == "AND":
            self.take()
            out = And(out, self.temporal_binary())
        return out

    def temporal_binary(self) -> Formula:
        left = self.unary()
        tok = self.peek()
        if tok.kind in ("U", "R", "RW"):
            self.take()
            interval = self.maybe_interval()
            right = self.unary()
            nxt = self.peek()
            if nxt.kind in ("U", "R", "RW"):
                raise FormulaSyntaxError(
                    f"{nxt.text} is non-associative; parenthesize chained temporal operators", nxt.line, nxt.col
                )
            node = {"U": Until, "R": Release, "RW": NonStrictRelease}[tok.kind]
            return node(left, right, interval)
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "NOT":
            self.take()
            return Not(self.unary())
        if tok.kind in ("X", "F", "G"):
            self.take()
            interval = self.maybe_interval()
            child = self.unary()
            node = {"X": Next, "F": Eventually, "G": Always}[tok.kind]
            return node(child, interval)
        return self.primary()

    def maybe_interval(self) -> Interval:
        tok = self.peek()
        if tok.kind == "LB":
            return self.interval()
        # `(` opens an interval only when followed by `number ,`
        if tok.kind == "LP" and self.peek(1).kind == "NUMBER" and self.peek(2).kind == "COMMA":
            return self.interval()
        return FULL

    def interval(self) -> Interval:
        opener = self.take()
        lo_open = opener.kind == "LP"
        if opener.kind not in ("LB", "LP"):
            raise FormulaSyntaxError(f"expected interval, found {opener.text!r}", opener.line, opener.col)
        lo_tok = self.take("NUMBER")
        self.take("COMMA")
        hi_tok = self.peek()
        if hi_tok.kind == "INF":
            self.take()
            hi = math.inf
        else:
            hi = float(self.take("NUMBER").text)
        closer = self.take()
        if closer.kind not in ("RB", "RP"):
            raise FormulaSyntaxError(f"unterminated interval, found {closer.text!r}", closer.line, closer.col)
        hi_open = closer.kind == "RP"
        try:
            return Interval(float(lo_tok.text), hi, lo_open, hi_open)
        except ValueError as exc:
            raise FormulaSyntaxError(str(exc), opener.line, opener.col) from None

    def primary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "TRUE":
            self.take()
            return TRUE
        if tok.kind == "LP":
            self.take()
            phi = self.implies()
            self.take("RP")
            return phi
        if tok.kind == "IDENT":
            name = self.take().text
            op = self.peek()
            if op.kind not in ("GE", "LE"):
                raise FormulaSyntaxError(f"expected >= or <= after channel {name!r}", op.line, op.col)
            self.take()
            num = self.take("NUMBER")
            threshold = float(num.text)
            return atom_ge(name, threshold) if op.kind == "GE" else atom_le(name, threshold)
        if tok.kind == "EOF":
            raise FormulaSyntaxError("unexpected end of input", tok.line, tok.col)
        raise FormulaSyntaxError(f"unexpected {tok.text!r}", tok.line, tok.col)


def parse_formula(text: str) -> Formula:
    """Parse STL source text into a formula AST."""
    return _Parser(_lex(text)).parse()


# Printing: precedence levels mirror the parser.
_LEVEL_IMPLIES, _LEVEL_OR, _LEVEL_AND, _LEVEL_TEMPORAL, _LEVEL_UNARY = range(5)


def _interval_suffix(interval: Interval) -> str:
    return "" if interval == FULL else str(interval)


def _atom_source(atom: Atom) -> str:
    if len(atom.coeffs) == 1:
        ch, c = atom.coeffs[0]
        if c == 1.0:
            t = -atom.const
            return f"{ch} >= {_num(t if t != 0.0 else 0.0)}"
        if c == -1.0:
            return f"{ch} <= {_num(atom.const if atom.const != 0.0 else 0.0)}"
    # General affine atoms fall outside the grammar; show the label.
    return atom.name


def to_source(phi: Formula) -> str:
    """Render a formula as parseable source (round-trips through
    :func:`parse_formula` up to whitespace for grammar-constructible
    formulas)."""

    def go(node: Formula, level: int) -> str:
        if isinstance(node, TrueFormula):
            return "true"
        if isinstance(node, Atom):
            return _atom_source(node)
        if isinstance(node, Not):
            return "!" + go(node.child, _LEVEL_UNARY)
        if isinstance(node, (Next, Eventually, Always)):
            op = {Next: "X", Eventually: "F", Always: "G"}[type(node)]
            return f"{op}{_interval_suffix(node.interval)} {go(node.child, _LEVEL_UNARY)}"
        if isinstance(node, (Until, Release, NonStrictRelease)):
            op = {Until: "U", Release: "R", NonStrictRelease: "RW"}[type(node)]
            body = (
                f"{go(node.left, _LEVEL_UNARY)} {op}{_interval_suffix(node.interval)} {go(node.right, _LEVEL_UNARY)}"
            )
            return f"({body})" if level > _LEVEL_TEMPORAL else body
        if isinstance(node, And):
            body = f"{go(node.left, _LEVEL_AND)} /\\ {go(node.right, _LEVEL_AND + 1)}"
            return f"({body})" if level > _LEVEL_AND else body
        if isinstance(node, Or):
            body = f"{go(node.left, _LEVEL_OR)} \\/ {go(node.right, _LEVEL_OR + 1)}"
            return f"({body})" if level > _LEVEL_OR else body
        if isinstance(node, Implies):
            body = f"{go(node.left, _LEVEL_OR)} -> {go(node.right, _LEVEL_IMPLIES)}"
            return f"({body})" if level > _LEVEL_IMPLIES else body
        raise TypeError(f"unknown formula node {type(node).__name__}")

    return go(phi, _LEVEL_IMPLIES)
