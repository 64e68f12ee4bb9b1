"""Predicate blame: which atom's margin propagates to the root value.

The provenance evaluator mirrors the dynamic-programming robustness pass
but carries, next to every value, an origin code identifying the atom and
sample that supplied it.  At min/max nodes the origin follows the chosen
child; ties between equal values are broken toward the earliest sample,
then the lexicographically smallest atom name (structural constants lose
against real atoms).  Tie resolution is applied over the evaluator's
min/max DAG, pairwise in evaluation order.
"""

from __future__ import annotations

from dataclasses import dataclass

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
    atoms_of,
)
from .semantics import _atom_margins, _hi_offset, eval_robustness
from .trace import Trace

_NONE = np.iinfo(np.int64).max


@dataclass(frozen=True)
class RobustnessReport:
    """Robustness value plus the critical atom and sample behind it."""

    robustness: float
    blamed_atom: str | None
    critical_sample: int | None
    per_atom_extremes: dict[str, tuple[float, int]]


def _pick(take_b: np.ndarray, va, ca, vb, cb):
    return np.where(take_b, vb, va), np.where(take_b, cb, ca)


def _vmin(va, ca, vb, cb):
    return _pick((vb < va) | ((vb == va) & (cb < ca)), va, ca, vb, cb)


def _vmax(va, ca, vb, cb):
    return _pick((vb > va) | ((vb == va) & (cb < ca)), va, ca, vb, cb)


def _smin(va: float, ca: int, vb: float, cb: int) -> tuple[float, int]:
    return (vb, cb) if vb < va or (vb == va and cb < ca) else (va, ca)


def _smax(va: float, ca: int, vb: float, cb: int) -> tuple[float, int]:
    return (vb, cb) if vb > va or (vb == va and cb < ca) else (va, ca)


def provenance_signal(phi: Formula, trace: Trace) -> tuple[np.ndarray, np.ndarray]:
    """Arrays of (robustness, origin code) at every sample.

    Origin codes are ``sample * n_atoms + atom_rank`` with atoms ranked by
    sorted name; structural constants carry the maximal code.
    """
    names = sorted({a.name for a in atoms_of(phi)})
    rank = {name: r for r, name in enumerate(names)}
    n_atoms = max(1, len(names))
    n = trace.n_samples
    dt = trace.dt
    memo: dict[int, tuple[np.ndarray, np.ndarray]] = {}

    def go(node: Formula) -> tuple[np.ndarray, np.ndarray]:
        cached = memo.get(id(node))
        if cached is not None:
            return cached
        out = _pair_of(node)
        memo[id(node)] = out
        return out

    def _const(value: float) -> tuple[np.ndarray, np.ndarray]:
        return np.full(n, value), np.full(n, _NONE, dtype=np.int64)

    def _pair_of(node: Formula) -> tuple[np.ndarray, np.ndarray]:
        if isinstance(node, TrueFormula):
            return _const(TOP)
        if isinstance(node, Atom):
            v = _atom_margins(node, trace)
            c = np.arange(n, dtype=np.int64) * n_atoms + rank[node.name]
            return v, c
        if isinstance(node, Not):
            v, c = go(node.child)
            return -v, c
        if isinstance(node, Or):
            return _vmax(*go(node.left), *go(node.right))
        if isinstance(node, And):
            return _vmin(*go(node.left), *go(node.right))
        if isinstance(node, Implies):
            lv, lc = go(node.left)
            return _vmax(-lv, lc, *go(node.right))
        if isinstance(node, Next):
            kmin, kmax = node.interval.sample_offsets(dt)
            v, c = _const(BOTTOM)
            if kmin <= 1 and (kmax is None or kmax >= 1) and n >= 2:
                cv, cc = go(node.child)
                v[: n - 1] = cv[1:]
                c[: n - 1] = cc[1:]
            return v, c
        if isinstance(node, (Eventually, Always)):
            cv, cc = go(node.child)
            find_max = isinstance(node, Eventually)
            kmin, kmax = node.interval.sample_offsets(dt)
            v, c = _const(BOTTOM if find_max else TOP)
            if kmax is not None and kmin > kmax:
                return v, c
            sel = _vmax if find_max else _vmin
            if kmax is None:
                # backward suffix scan
                out_v = cv.copy()
                out_c = cc.copy()
                for i in range(n - 2, -1, -1):
                    out_v[i], out_c[i] = (
                        _smax(out_v[i + 1], out_c[i + 1], cv[i], cc[i])
                        if find_max
                        else _smin(out_v[i + 1], out_c[i + 1], cv[i], cc[i])
                    )
                if kmin < n:
                    v[: n - kmin] = out_v[kmin:]
                    c[: n - kmin] = out_c[kmin:]
                return v, c
            for k in range(kmin, _hi_offset(kmax, n) + 1):
                v[: n - k], c[: n - k] = sel(v[: n - k], c[: n - k], cv[k:], cc[k:])
            return v, c
        if isinstance(node, Until):
            lv, lc = go(node.left)
            rv, rc = go(node.right)
            kmin, kmax = node.interval.sample_offsets(dt)
            v, c = _const(BOTTOM)
            if kmax is not None and kmin > kmax:
                return v, c
            if kmax is None:
                uv = rv.copy()
                uc = rc.copy()
                for i in range(n - 2, -1, -1):
                    tv, tc = _smin(lv[i], lc[i], uv[i + 1], uc[i + 1])
                    uv[i], uc[i] = _smax(rv[i], rc[i], tv, tc)
                if kmin == 0:
                    return uv, uc
                if kmin < n:
                    pv, pc = _prefix(lv, lc, kmin, use_min=True)
                    m = n - kmin
                    v[:m], c[:m] = _vmin(pv[:m], pc[:m], uv[kmin:], uc[kmin:])
                return v, c
            run_v = np.full(n, TOP)
            run_c = np.full(n, _NONE, dtype=np.int64)
            for k in range(0, _hi_offset(kmax, n) + 1):
                if k >= 1:
                    run_v[: n - k], run_c[: n - k] = _vmin(
                        run_v[: n - k], run_c[: n - k], lv[k - 1 : n - 1], lc[k - 1 : n - 1]
                    )
                if k >= kmin:
                    tv, tc = _vmin(rv[k:], rc[k:], run_v[: n - k], run_c[: n - k])
                    v[: n - k], c[: n - k] = _vmax(v[: n - k], c[: n - k], tv, tc)
            return v, c
        if isinstance(node, (Release, NonStrictRelease)):
            inclusive = isinstance(node, NonStrictRelease)
            lv, lc = go(node.left)
            rv, rc = go(node.right)
            kmin, kmax = node.interval.sample_offsets(dt)
            v, c = _const(TOP)
            if kmax is not None and kmin > kmax:
                return v, c
            if kmax is None:
                gv = np.empty(n)
                gc = np.empty(n, dtype=np.int64)
                if inclusive:
                    gv[n - 1], gc[n - 1] = _smax(lv[n - 1], lc[n - 1], rv[n - 1], rc[n - 1])
                else:
                    gv[n - 1], gc[n - 1] = rv[n - 1], rc[n - 1]
                for i in range(n - 2, -1, -1):
                    if inclusive:
                        tv, tc = _smin(rv[i], rc[i], gv[i + 1], gc[i + 1])
                        gv[i], gc[i] = _smax(lv[i], lc[i], tv, tc)
                    else:
                        tv, tc = _smax(lv[i], lc[i], gv[i + 1], gc[i + 1])
                        gv[i], gc[i] = _smin(rv[i], rc[i], tv, tc)
                if kmin == 0:
                    return gv, gc
                if kmin < n:
                    pv, pc = _prefix(lv, lc, kmin, use_min=False)
                    m = n - kmin
                    v[:m], c[:m] = _vmax(pv[:m], pc[:m], gv[kmin:], gc[kmin:])
                return v, c
            j_v = np.full(n, BOTTOM)
            j_c = np.full(n, _NONE, dtype=np.int64)
            for k in range(0, _hi_offset(kmax, n) + 1):
                if inclusive:
                    j_v[: n - k], j_c[: n - k] = _vmax(j_v[: n - k], j_c[: n - k], lv[k:], lc[k:])
                elif k >= 1:
                    j_v[: n - k], j_c[: n - k] = _vmax(
                        j_v[: n - k], j_c[: n - k], lv[k - 1 : n - 1], lc[k - 1 : n - 1]
                    )
                if k >= kmin:
                    tv, tc = _vmax(rv[k:], rc[k:], j_v[: n - k], j_c[: n - k])
                    v[: n - k], c[: n - k] = _vmin(v[: n - k], c[: n - k], tv, tc)
            return v, c
        raise TypeError(f"unknown formula node {type(node).__name__}")

    def _prefix(xv: np.ndarray, xc: np.ndarray, width: int, use_min: bool):
        # windowed min/max with provenance over [i, i+width)
        pv = xv[: n - width + 1].copy()
        pc = xc[: n - width + 1].copy()
        sel = _vmin if use_min else _vmax
        for k in range(1, width):
            m = n - width + 1
            pv, pc = sel(pv, pc, xv[k : k + m], xc[k : k + m])
        return pv, pc

    return go(phi)


def blame(phi: Formula, trace: Trace) -> RobustnessReport:
    """Evaluate ``phi`` at sample 0 and report the critical atom.

    The reported robustness equals :func:`eval_robustness` on the same
    inputs; ``per_atom_extremes`` maps every atom to its most critical
    (smallest) margin and the sample where it occurs.
    """
    names = sorted({a.name for a in atoms_of(phi)})
    n_atoms = max(1, len(names))
    v, c = provenance_signal(phi, trace)
    code = int(c[0])
    if code == _NONE:
        blamed, sample = None, None
    else:
        blamed = names[code % n_atoms]
        sample = code // n_atoms
    extremes: dict[str, tuple[float, int]] = {}
    for atom in atoms_of(phi):
        if atom.name in extremes:
            continue
        margins = _atom_margins(atom, trace)
        idx = int(np.argmin(margins))
        extremes[atom.name] = (float(margins[idx]), idx)
    return RobustnessReport(
        robustness=float(v[0]),
        blamed_atom=blamed,
        critical_sample=sample,
        per_atom_extremes=extremes,
    )


__all__ = ["RobustnessReport", "blame", "provenance_signal", "eval_robustness"]
