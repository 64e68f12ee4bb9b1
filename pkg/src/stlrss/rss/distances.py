"""RSS safe-distance closed forms and the deadbanded lateral velocity.

Both distance functions follow the standard accelerate-for-rho-then-brake
worst case.  They accept scalars or numpy arrays and broadcast.
"""

from __future__ import annotations

import numpy as np

from .params import RssParams


def lon_safe_distance(v_rear, v_front, p: RssParams):
    """Minimum safe longitudinal gap between a rear and a front vehicle.

    Worst case: the rear car accelerates at ``a_lon_max_acc`` for ``rho``
    seconds and then brakes at ``a_lon_min_br``; the front car brakes at
    ``a_lon_max_br``.  Negative brackets clamp to zero.  Speeds below zero
    are treated as zero.
    """
    v_r = np.maximum(np.asarray(v_rear, dtype=np.float64), 0.0)
    v_f = np.maximum(np.asarray(v_front, dtype=np.float64), 0.0)
    if not (np.all(np.isfinite(v_r)) and np.all(np.isfinite(v_f))):
        raise ValueError("non-finite velocity passed to lon_safe_distance")
    v_rho = v_r + p.rho * p.a_lon_max_acc
    d = (
        v_r * p.rho
        + 0.5 * p.a_lon_max_acc * p.rho**2
        + v_rho**2 / (2.0 * p.a_lon_min_br)
        - v_f**2 / (2.0 * p.a_lon_max_br)
    )
    out = np.maximum(d, 0.0)
    return float(out) if out.ndim == 0 else out


def lat_safe_distance(v_left, v_right, p: RssParams):
    """Minimum safe lateral gap between a left and a right vehicle.

    Velocities are signed positive toward the right (i.e. toward the other
    car for the left vehicle).  Worst case: both cars accelerate toward
    each other at ``a_lat_max_acc`` for ``rho`` seconds, then brake at
    ``a_lat_min_br``.  The result is never below the standstill margin
    ``mu``.
    """
    v_l = np.asarray(v_left, dtype=np.float64)
    v_r = np.asarray(v_right, dtype=np.float64)
    if not (np.all(np.isfinite(v_l)) and np.all(np.isfinite(v_r))):
        raise ValueError("non-finite velocity passed to lat_safe_distance")
    v_l_rho = v_l + p.rho * p.a_lat_max_acc
    v_r_rho = v_r - p.rho * p.a_lat_max_acc
    left_travel = (v_l + v_l_rho) / 2.0 * p.rho + v_l_rho**2 / (2.0 * p.a_lat_min_br)
    right_travel = (v_r + v_r_rho) / 2.0 * p.rho - v_r_rho**2 / (2.0 * p.a_lat_min_br)
    out = p.mu + np.maximum(left_travel - right_travel, 0.0)
    return float(out) if out.ndim == 0 else out


def mu_lateral_velocity(y, p: RssParams) -> np.ndarray:
    """Deadbanded lateral velocity of a lateral-position signal.

    Central-difference derivative (one-sided at the ends), forced to zero
    at samples where the total displacement over the trailing window of
    length ``rho`` stays below ``mu / 2``.
    """
    y = np.asarray(y, dtype=np.float64)
    n = y.shape[0]
    if n < 2:
        raise ValueError("mu_lateral_velocity needs at least 2 samples")
    v_raw = np.empty(n)
    v_raw[0] = (y[1] - y[0]) / p.dt
    v_raw[-1] = (y[-1] - y[-2]) / p.dt
    if n > 2:
        v_raw[1:-1] = (y[2:] - y[:-2]) / (2.0 * p.dt)
    k = p.rho_steps
    idx = np.arange(n)
    back = np.maximum(idx - k, 0)
    displacement = np.abs(y - y[back])
    return np.where(displacement < p.mu / 2.0, 0.0, v_raw)
