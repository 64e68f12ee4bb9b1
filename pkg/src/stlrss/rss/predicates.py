"""Per-sample RSS predicate margins from lane-based trajectories.

Every channel of the produced trace is a signed margin: positive iff the
corresponding Boolean predicate holds at that sample.  Gap channels for the
collision-avoidance spec (center distances per agent) ride along.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..stl import Trace
from .coords import EGO, LaneTrajectory
from .distances import lat_safe_distance, lon_safe_distance, mu_lateral_velocity
from .params import RssParams

#: Margin reported when no agent constrains an aspect at a sample.  Large
#: enough to lose every min against a real margin on a desk-scale highway.
SAFE_MARGIN = 1000.0

RSS_CHANNELS = (
    "S_lon",
    "S_lat",
    "A_lon_maxAcc",
    "A_lon_minBr",
    "A_lat_maxAcc",
    "A_lat_minBr",
    "V_lat_stop",
    "V_lat_neg",
)

GAP_CHANNELS = ("dx_a1", "dy_a1", "dx_a2", "dy_a2")


@dataclass(frozen=True)
class VehicleGeometry:
    length: float = 4.8
    width: float = 1.8
    lane_width: float = 3.5


def _backward_diff(values: np.ndarray, dt: float) -> np.ndarray:
    out = np.empty_like(values)
    out[1:] = (values[1:] - values[:-1]) / dt
    out[0] = out[1]
    return out


def build_predicate_trace(
    lane: LaneTrajectory,
    p: RssParams,
    geometry: VehicleGeometry = VehicleGeometry(),
    safe_margin: float = SAFE_MARGIN,
) -> Trace:
    """Compute the eight RSS margin channels plus the per-agent gap channels.

    Longitudinal margins are taken against agents ahead of the ego whose
    lateral bumper gap is below one lane width (corridor overlap); lateral
    margins against every agent, with the side convention mirrored so the
    same formula applies with the ego on either side.  The most
    constraining agent wins per aspect per sample.  Gaps are bumper to
    bumper; ego accelerations are backward differences of the ego velocity
    channels.
    """
    if EGO not in lane.tracks:
        raise ValueError("lane trajectory is missing the ego vehicle")
    agents = lane.agents()
    if len(agents) < 1:
        raise ValueError("lane trajectory needs at least one agent vehicle")
    if lane.dt != p.dt:
        raise ValueError(f"trajectory dt={lane.dt} does not match RSS dt={p.dt}")
    n = lane.n_samples
    for name, tr in lane.tracks.items():
        for arr in (tr.x, tr.y, tr.vx, tr.vy):
            if arr.shape[0] != n:
                raise ValueError(f"vehicle {name!r} trajectory is misaligned ({arr.shape[0]} != {n})")

    ego = lane.ego()
    a_lon = _backward_diff(ego.vx, p.dt)
    a_lat = _backward_diff(ego.vy, p.dt)
    v_mu = mu_lateral_velocity(ego.y, p)

    lon_margins = []
    lat_margins = []
    sides = []
    gap_channels: dict[str, np.ndarray] = {}
    for name, agent in agents:
        dxc = agent.x - ego.x
        dyc = agent.y - ego.y
        lat_gap = np.abs(dyc) - geometry.width

        ahead = dxc >= 0.0
        corridor = lat_gap < geometry.lane_width
        d_lon = lon_safe_distance(ego.vx, agent.vx, p)
        lon_margins.append(np.where(ahead & corridor, (dxc - geometry.length) - d_lon, safe_margin))

        agent_left = dyc > 0.0
        # velocities signed positive toward the right, i.e. toward -y
        v_left = np.where(agent_left, -agent.vy, -ego.vy)
        v_right = np.where(agent_left, -ego.vy, -agent.vy)
        d_lat = lat_safe_distance(v_left, v_right, p)
        lat_margins.append(lat_gap - d_lat)
        sides.append(np.where(dyc != 0.0, np.sign(dyc), 1.0))

        gap_channels[f"dx_{name}"] = np.abs(dxc)
        gap_channels[f"dy_{name}"] = np.abs(dyc)

    lon_stack = np.stack(lon_margins)
    lat_stack = np.stack(lat_margins)
    s_lon = lon_stack.min(axis=0)
    s_lat = lat_stack.min(axis=0)
    nearest = lat_stack.argmin(axis=0)
    side = np.stack(sides)[nearest, np.arange(n)]

    channels: dict[str, np.ndarray] = {
        "S_lon": s_lon,
        "S_lat": s_lat,
        "A_lon_maxAcc": p.a_lon_max_acc - a_lon,
        "A_lon_minBr": -a_lon - p.a_lon_min_br,
        "A_lat_maxAcc": p.a_lat_max_acc - np.abs(a_lat),
        "A_lat_minBr": -np.sign(v_mu) * a_lat - p.a_lat_min_br,
        "V_lat_stop": p.v_eps - np.abs(v_mu),
        "V_lat_neg": -side * v_mu,
    }
    channels.update(gap_channels)
    return Trace(p.dt, channels)
