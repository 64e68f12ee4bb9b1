"""Discrete-time robust and Boolean semantics over finite traces.

Three independent evaluators:

* :func:`eval_robustness` — dynamic-programming pass computing, for every
  subformula, its robustness at all samples in one backward sweep
  (``O(N * |phi| * W)`` with ``W`` the window width in samples).
* :func:`eval_robustness_naive` — memoized direct transcription of the
  recursive sup/inf definition; the reference the DP pass is tested
  against.
* :func:`eval_boolean` — classical satisfaction, used as the sign oracle.

Temporal windows are resolved to sample offsets through
:meth:`Interval.sample_offsets`, so interval membership is exact at grid
boundaries.  Empty windows follow the extended sup/inf conventions: an
empty join is bottom, an empty meet is top.
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence

import numpy as np

from .formula import (
    Always,
    And,
    Atom,
    BOTTOM,
    Eventually,
    Formula,
    Implies,
    Next,
    Not,
    NonStrictRelease,
    Or,
    Release,
    TOP,
    TrueFormula,
    Until,
)
from .trace import Trace


def signed_distance(x: Mapping[str, float] | Sequence[float], atom: Atom) -> float:
    """Euclidean signed distance from point ``x`` to the atom's halfspace.

    Positive iff ``x`` satisfies the predicate, zero on the boundary.
    ``x`` is either a channel->value mapping or a sequence aligned with
    the atom's coefficient order.
    """
    if isinstance(x, Mapping):
        try:
            values = [float(x[ch]) for ch, _ in atom.coeffs]
        except KeyError as exc:
            raise ValueError(f"point is missing channel {exc.args[0]!r} required by atom {atom.name!r}") from None
    else:
        values = [float(v) for v in x]
        if len(values) != len(atom.coeffs):
            raise ValueError(
                f"dimension mismatch: atom {atom.name!r} has {len(atom.coeffs)} coefficients, point has {len(values)}"
            )
    acc = 0.0
    for (_, c), v in zip(atom.coeffs, values):
        acc += c * v
    acc += atom.const
    return acc / atom.norm


def _atom_margins(atom: Atom, trace: Trace) -> np.ndarray:
    acc = np.zeros(trace.n_samples)
    for ch, c in atom.coeffs:
        acc += c * trace.channel(ch)
    acc += atom.const
    acc /= atom.norm
    return acc


def _atom_margin_at(atom: Atom, trace: Trace, i: int) -> float:
    # Same accumulation order as the vectorized path, for bit-equality.
    acc = 0.0
    for ch, c in atom.coeffs:
        acc += c * float(trace.channel(ch)[i])
    acc += atom.const
    return acc / atom.norm


def _check_index(trace: Trace, i: int) -> None:
    if not 0 <= i < trace.n_samples:
        raise IndexError(f"sample index {i} out of range for trace of length {trace.n_samples}")


def _hi_offset(kmax: int | None, n: int) -> int:
    return n - 1 if kmax is None else min(kmax, n - 1)


def robustness_signal(phi: Formula, trace: Trace) -> np.ndarray:
    """Robustness of ``phi`` at every sample of ``trace``."""
    memo: dict[int, np.ndarray] = {}
    n = trace.n_samples
    dt = trace.dt

    def go(node: Formula) -> np.ndarray:
        cached = memo.get(id(node))
        if cached is not None:
            return cached
        out = _signal_of(node)
        memo[id(node)] = out
        return out

    def _signal_of(node: Formula) -> np.ndarray:
        if isinstance(node, TrueFormula):
            return np.full(n, TOP)
        if isinstance(node, Atom):
            return _atom_margins(node, trace)
        if isinstance(node, Not):
            return -go(node.child)
        if isinstance(node, Or):
            return np.maximum(go(node.left), go(node.right))
        if isinstance(node, And):
            return np.minimum(go(node.left), go(node.right))
        if isinstance(node, Implies):
            return np.maximum(-go(node.left), go(node.right))
        if isinstance(node, Next):
            kmin, kmax = node.interval.sample_offsets(dt)
            out = np.full(n, BOTTOM)
            if kmin <= 1 and (kmax is None or kmax >= 1) and n >= 2:
                out[: n - 1] = go(node.child)[1:]
            return out
        if isinstance(node, Eventually):
            return _windowed(go(node.child), node.interval, dt, find_max=True)
        if isinstance(node, Always):
            return _windowed(go(node.child), node.interval, dt, find_max=False)
        if isinstance(node, Until):
            return _until(go(node.left), go(node.right), node.interval, dt)
        if isinstance(node, Release):
            return _release(go(node.left), go(node.right), node.interval, dt, inclusive=False)
        if isinstance(node, NonStrictRelease):
            return _release(go(node.left), go(node.right), node.interval, dt, inclusive=True)
        raise TypeError(f"unknown formula node {type(node).__name__}")

    def _windowed(r: np.ndarray, interval, dt: float, find_max: bool) -> np.ndarray:
        kmin, kmax = interval.sample_offsets(dt)
        empty, combine = (BOTTOM, np.maximum) if find_max else (TOP, np.minimum)
        out = np.full(n, empty)
        if kmax is not None and kmin > kmax:
            return out
        if kmax is None:
            acc = combine.accumulate(r[::-1])[::-1]
            if kmin < n:
                out[: n - kmin] = acc[kmin:]
            return out
        for k in range(kmin, _hi_offset(kmax, n) + 1):
            out[: n - k] = combine(out[: n - k], r[k:])
        return out

    def _until(r1: np.ndarray, r2: np.ndarray, interval, dt: float) -> np.ndarray:
        kmin, kmax = interval.sample_offsets(dt)
        out = np.full(n, BOTTOM)
        if kmax is not None and kmin > kmax:
            return out
        if kmax is None:
            u0 = np.empty(n)
            u0[n - 1] = r2[n - 1]
            for i in range(n - 2, -1, -1):
                u0[i] = max(r2[i], min(r1[i], u0[i + 1]))
            if kmin == 0:
                return u0
            if kmin < n:
                pm = np.lib.stride_tricks.sliding_window_view(r1, kmin).min(axis=1)
                m = n - kmin
                out[:m] = np.minimum(pm[:m], u0[kmin:])
            return out
        run = np.full(n, TOP)
        for k in range(0, _hi_offset(kmax, n) + 1):
            if k >= 1:
                run[: n - k] = np.minimum(run[: n - k], r1[k - 1 : n - 1])
            if k >= kmin:
                out[: n - k] = np.maximum(out[: n - k], np.minimum(r2[k:], run[: n - k]))
        return out

    def _release(r1: np.ndarray, r2: np.ndarray, interval, dt: float, inclusive: bool) -> np.ndarray:
        kmin, kmax = interval.sample_offsets(dt)
        out = np.full(n, TOP)
        if kmax is not None and kmin > kmax:
            return out
        if kmax is None:
            g0 = np.empty(n)
            if inclusive:
                g0[n - 1] = max(r1[n - 1], r2[n - 1])
                for i in range(n - 2, -1, -1):
                    g0[i] = max(r1[i], min(r2[i], g0[i + 1]))
            else:
                g0[n - 1] = r2[n - 1]
                for i in range(n - 2, -1, -1):
                    g0[i] = min(r2[i], max(r1[i], g0[i + 1]))
            if kmin == 0:
                return g0
            if kmin < n:
                pj = np.lib.stride_tricks.sliding_window_view(r1, kmin).max(axis=1)
                m = n - kmin
                out[:m] = np.maximum(pj[:m], g0[kmin:])
            return out
        jrun = np.full(n, BOTTOM)
        for k in range(0, _hi_offset(kmax, n) + 1):
            if inclusive:
                jrun[: n - k] = np.maximum(jrun[: n - k], r1[k:])
            elif k >= 1:
                jrun[: n - k] = np.maximum(jrun[: n - k], r1[k - 1 : n - 1])
            if k >= kmin:
                out[: n - k] = np.minimum(out[: n - k], np.maximum(r2[k:], jrun[: n - k]))
        return out

    return go(phi)


def eval_robustness(phi: Formula, trace: Trace, i: int = 0) -> float:
    """Robustness of ``phi`` over ``trace`` at sample ``i`` (extended real)."""
    _check_index(trace, i)
    return float(robustness_signal(phi, trace)[i])


def eval_robustness_naive(phi: Formula, trace: Trace, i: int = 0) -> float:
    """Reference evaluator: memoized transcription of the recursive
    robust semantics, with derived operators expanded by definition
    (``F`` as ``true U``, ``G``/``And``/``R`` through negation duality)."""
    _check_index(trace, i)
    n = trace.n_samples
    dt = trace.dt
    memo: dict[tuple[int, int], float] = {}

    def go(node: Formula, j: int) -> float:
        key = (id(node), j)
        hit = memo.get(key)
        if hit is not None:
            return hit
        val = _value(node, j)
        memo[key] = val
        return val

    def _value(node: Formula, j: int) -> float:
        if isinstance(node, TrueFormula):
            return TOP
        if isinstance(node, Atom):
            return _atom_margin_at(node, trace, j)
        if isinstance(node, Not):
            return -go(node.child, j)
        if isinstance(node, Or):
            return max(go(node.left, j), go(node.right, j))
        if isinstance(node, And):
            return -max(-go(node.left, j), -go(node.right, j))
        if isinstance(node, Implies):
            return max(-go(node.left, j), go(node.right, j))
        if isinstance(node, Next):
            kmin, kmax = node.interval.sample_offsets(dt)
            if j + 1 < n and kmin <= 1 and (kmax is None or kmax >= 1):
                return go(node.child, j + 1)
            return BOTTOM
        if isinstance(node, Eventually):
            # F_I phi == true U_I phi; the inner meet over true is top.
            kmin, kmax = node.interval.sample_offsets(dt)
            best = BOTTOM
            for k in range(kmin, _hi_offset(kmax, n - j) + 1):
                best = max(best, go(node.child, j + k))
            return best
        if isinstance(node, Always):
            # G_I phi == not F_I not phi.
            kmin, kmax = node.interval.sample_offsets(dt)
            best = BOTTOM
            for k in range(kmin, _hi_offset(kmax, n - j) + 1):
                best = max(best, -go(node.child, j + k))
            return -best
        if isinstance(node, Until):
            kmin, kmax = node.interval.sample_offsets(dt)
            best = BOTTOM
            meet = TOP
            for k in range(0, _hi_offset(kmax, n - j) + 1):
                if k >= 1:
                    meet = min(meet, go(node.left, j + k - 1))
                if k >= kmin:
                    best = max(best, min(go(node.right, j + k), meet))
            return best
        if isinstance(node, Release):
            # phi1 R_I phi2 == not (not phi1 U_I not phi2).
            kmin, kmax = node.interval.sample_offsets(dt)
            best = BOTTOM
            meet = TOP
            for k in range(0, _hi_offset(kmax, n - j) + 1):
                if k >= 1:
                    meet = min(meet, -go(node.left, j + k - 1))
                if k >= kmin:
                    best = max(best, min(-go(node.right, j + k), meet))
            return -best
        if isinstance(node, NonStrictRelease):
            kmin, kmax = node.interval.sample_offsets(dt)
            val = TOP
            join = BOTTOM
            for k in range(0, _hi_offset(kmax, n - j) + 1):
                join = max(join, go(node.left, j + k))
                if k >= kmin:
                    val = min(val, max(go(node.right, j + k), join))
            return val
        raise TypeError(f"unknown formula node {type(node).__name__}")

    return go(phi, i)


def eval_boolean(phi: Formula, trace: Trace, i: int = 0) -> bool:
    """Classical satisfaction of ``phi`` over ``trace`` at sample ``i``.

    Atoms hold iff their unnormalized affine value is >= 0, so this is an
    oracle independent of the signed-distance normalization.
    """
    _check_index(trace, i)
    n = trace.n_samples
    dt = trace.dt
    memo: dict[tuple[int, int], bool] = {}

    def go(node: Formula, j: int) -> bool:
        key = (id(node), j)
        hit = memo.get(key)
        if hit is not None:
            return hit
        val = _value(node, j)
        memo[key] = val
        return val

    def _value(node: Formula, j: int) -> bool:
        if isinstance(node, TrueFormula):
            return True
        if isinstance(node, Atom):
            acc = 0.0
            for ch, c in node.coeffs:
                acc += c * float(trace.channel(ch)[j])
            return acc + node.const >= 0.0
        if isinstance(node, Not):
            return not go(node.child, j)
        if isinstance(node, Or):
            return go(node.left, j) or go(node.right, j)
        if isinstance(node, And):
            return go(node.left, j) and go(node.right, j)
        if isinstance(node, Implies):
            return (not go(node.left, j)) or go(node.right, j)
        if isinstance(node, Next):
            kmin, kmax = node.interval.sample_offsets(dt)
            return j + 1 < n and kmin <= 1 and (kmax is None or kmax >= 1) and go(node.child, j + 1)
        if isinstance(node, Eventually):
            kmin, kmax = node.interval.sample_offsets(dt)
            return any(go(node.child, j + k) for k in range(kmin, _hi_offset(kmax, n - j) + 1))
        if isinstance(node, Always):
            kmin, kmax = node.interval.sample_offsets(dt)
            return all(go(node.child, j + k) for k in range(kmin, _hi_offset(kmax, n - j) + 1))
        if isinstance(node, Until):
            kmin, kmax = node.interval.sample_offsets(dt)
            for k in range(0, _hi_offset(kmax, n - j) + 1):
                if k >= 1 and not go(node.left, j + k - 1):
                    return False  # prefix broken: no later witness possible
                if k >= kmin and go(node.right, j + k):
                    return True
            return False
        if isinstance(node, Release):
            kmin, kmax = node.interval.sample_offsets(dt)
            seen_left = False
            for k in range(0, _hi_offset(kmax, n - j) + 1):
                if k >= 1 and not seen_left:
                    seen_left = go(node.left, j + k - 1)
                if seen_left and k >= kmin:
                    return True
                if k >= kmin and not go(node.right, j + k):
                    return False
            return True
        if isinstance(node, NonStrictRelease):
            kmin, kmax = node.interval.sample_offsets(dt)
            seen_left = False
            for k in range(0, _hi_offset(kmax, n - j) + 1):
                if not seen_left:
                    seen_left = go(node.left, j + k)
                if seen_left and k >= kmin:
                    return True
                if k >= kmin and not go(node.right, j + k):
                    return False
            return True
        raise TypeError(f"unknown formula node {type(node).__name__}")

    return go(phi, i)
