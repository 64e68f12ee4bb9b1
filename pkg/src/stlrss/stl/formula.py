"""Abstract syntax for STL formulas over named real-valued channels.

Robustness values live on the extended reals: ``math.inf`` is the lattice
top, ``-math.inf`` the bottom.  Join is ``max``, meet is ``min``; the join
of an empty set is bottom and the meet of an empty set is top.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction

TOP = math.inf
BOTTOM = -math.inf


def _exact(x: float) -> Fraction:
    """Exact rational value of a float, read through its decimal repr.

    ``repr`` gives the shortest round-tripping decimal, so a bound written
    as 0.3 compares as 3/10 rather than as its binary approximation.
    """
    return Fraction(Decimal(repr(float(x))))


@dataclass(frozen=True)
class Interval:
    """Non-empty sub-interval of the non-negative reals (seconds)."""

    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = True

    def __post_init__(self) -> None:
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise ValueError("interval bounds must not be NaN")
        if self.lo < 0 or math.isinf(self.lo):
            raise ValueError(f"interval lower bound must be finite and >= 0, got {self.lo}")
        if self.hi < self.lo:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")
        if math.isinf(self.hi):
            # [a, inf] and [a, inf) denote the same set; normalise the flag.
            object.__setattr__(self, "hi_open", True)
        if self.lo == self.hi and (self.lo_open or self.hi_open):
            raise ValueError(f"empty interval at {self.lo}")

    @property
    def unbounded(self) -> bool:
        return math.isinf(self.hi)

    def sample_offsets(self, dt: float) -> tuple[int, int | None]:
        """Relative sample offsets ``k`` with ``k*dt`` inside the interval.

        Returns ``(kmin, kmax)`` where ``kmax`` is ``None`` for an unbounded
        interval.  A bounded interval holding no grid point yields
        ``kmin > kmax``.  Membership is decided in exact rational
        arithmetic so that grid points landing exactly on a bound are
        classified correctly.
        """
        dtf = _exact(dt)
        if dtf <= 0:
            raise ValueError(f"dt must be positive, got {dt}")
        q = _exact(self.lo) / dtf
        kmin = math.ceil(q)
        if self.lo_open and kmin == q:
            kmin += 1
        if self.unbounded:
            return kmin, None
        qh = _exact(self.hi) / dtf
        kmax = math.floor(qh)
        if self.hi_open and kmax == qh:
            kmax -= 1
        return kmin, kmax

    def __str__(self) -> str:
        lo_b = "(" if self.lo_open else "["
        hi_b = ")" if self.hi_open else "]"
        hi = "inf" if self.unbounded else _num(self.hi)
        return f"{lo_b}{_num(self.lo)},{hi}{hi_b}"


#: Default window for temporal operators written without an interval.
FULL = Interval(0.0, math.inf)


def _num(x: float) -> str:
    r = repr(float(x))
    return r[:-2] if r.endswith(".0") else r


class Formula:
    """Base class for formula nodes.  Nodes are immutable and shareable."""

    def __invert__(self) -> "Formula":
        return Not(self)

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def __rshift__(self, other: "Formula") -> "Formula":
        return Implies(self, other)

    def children(self) -> tuple["Formula", ...]:
        return ()

    def __str__(self) -> str:
        from .parser import to_source

        return to_source(self)


@dataclass(frozen=True)
class TrueFormula(Formula):
    pass


TRUE = TrueFormula()


@dataclass(frozen=True)
class Atom(Formula):
    """Affine predicate ``sum(coeffs * channels) + const >= 0``.

    ``name`` is the label used in blame reports; atoms constructed from
    source text carry their canonical source form, margin atoms carry the
    bare channel name.
    """

    coeffs: tuple[tuple[str, float], ...]
    const: float
    name: str

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("atom needs at least one channel coefficient")
        if all(c == 0.0 for _, c in self.coeffs):
            raise ValueError(f"atom {self.name!r} has all-zero coefficients")

    @property
    def norm(self) -> float:
        return math.sqrt(math.fsum(c * c for _, c in self.coeffs))


def atom_ge(channel: str, threshold: float = 0.0, name: str | None = None) -> Atom:
    """Atom for ``channel >= threshold``."""
    if name is None:
        name = channel if threshold == 0.0 else f"{channel} >= {_num(threshold)}"
    return Atom(((channel, 1.0),), -float(threshold), name)


def atom_le(channel: str, threshold: float = 0.0, name: str | None = None) -> Atom:
    """Atom for ``channel <= threshold``."""
    if name is None:
        name = f"{channel} <= {_num(threshold)}"
    return Atom(((channel, -1.0),), float(threshold), name)


def margin(channel: str) -> Atom:
    """Atom whose robustness is the channel value itself (``channel >= 0``)."""
    return atom_ge(channel, 0.0)


@dataclass(frozen=True)
class Not(Formula):
    child: Formula

    def children(self):
        return (self.child,)


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Next(Formula):
    child: Formula
    interval: Interval = FULL

    def children(self):
        return (self.child,)


@dataclass(frozen=True)
class Eventually(Formula):
    child: Formula
    interval: Interval = FULL

    def children(self):
        return (self.child,)


@dataclass(frozen=True)
class Always(Formula):
    child: Formula
    interval: Interval = FULL

    def children(self):
        return (self.child,)


@dataclass(frozen=True)
class Until(Formula):
    left: Formula
    right: Formula
    interval: Interval = FULL

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Release(Formula):
    left: Formula
    right: Formula
    interval: Interval = FULL

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class NonStrictRelease(Formula):
    """Release variant whose inner join includes the current window sample.

    ``a RW b`` does not require ``b`` at samples from which ``a`` has
    already held at some earlier-or-equal sample.
    """

    left: Formula
    right: Formula
    interval: Interval = FULL

    def children(self):
        return (self.left, self.right)


def conj(*parts: Formula) -> Formula:
    """Left-nested conjunction of one or more formulas."""
    if not parts:
        raise ValueError("conj() needs at least one formula")
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(*parts: Formula) -> Formula:
    """Left-nested disjunction of one or more formulas."""
    if not parts:
        raise ValueError("disj() needs at least one formula")
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def atoms_of(phi: Formula) -> list[Atom]:
    """All atoms in the formula, de-duplicated, in first-appearance order."""
    seen: dict[Atom, None] = {}

    def walk(node: Formula) -> None:
        if isinstance(node, Atom):
            seen.setdefault(node, None)
        for c in node.children():
            walk(c)

    walk(phi)
    return list(seen)
