"""Lane-based coordinate frame and trajectory containers.

The lane frame has x along the road and y lateral, positive to the left,
with y = 0 on the center lane's centerline.  For the straight highway the
world-to-lane translation is the identity on positions; it is kept as an
explicit step so curved roads can slot in later.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

EGO = "ego"
AGENT_NAMES = ("a1", "a2")


@dataclass(frozen=True)
class RoadGeometry:
    num_lanes: int = 3
    lane_width: float = 3.5

    @property
    def half_width(self) -> float:
        return self.num_lanes * self.lane_width / 2.0

    def lane_centers(self) -> np.ndarray:
        offset = (self.num_lanes - 1) / 2.0
        return (np.arange(self.num_lanes) - offset) * self.lane_width

    def nearest_lane_center(self, y: float) -> float:
        centers = self.lane_centers()
        return float(centers[np.argmin(np.abs(centers - y))])


@dataclass(frozen=True)
class WorldTrack:
    """World-frame pose trajectory of one vehicle."""

    x: np.ndarray
    y: np.ndarray
    theta: np.ndarray
    v: np.ndarray


@dataclass(frozen=True)
class WorldTrajectory:
    dt: float
    tracks: dict[str, WorldTrack]  # keys: ego, a1, a2

    @property
    def n_samples(self) -> int:
        return next(iter(self.tracks.values())).x.shape[0]


@dataclass(frozen=True)
class LaneTrack:
    """Lane-frame trajectory of one vehicle: positions and velocity components."""

    x: np.ndarray
    y: np.ndarray
    vx: np.ndarray
    vy: np.ndarray


@dataclass(frozen=True)
class LaneTrajectory:
    dt: float
    tracks: dict[str, LaneTrack]
    off_road: tuple[str, ...] = field(default_factory=tuple)

    @property
    def n_samples(self) -> int:
        return next(iter(self.tracks.values())).x.shape[0]

    def ego(self) -> LaneTrack:
        return self.tracks[EGO]

    def agents(self) -> list[tuple[str, LaneTrack]]:
        return [(name, self.tracks[name]) for name in self.tracks if name != EGO]


def to_lane_coordinates(world: WorldTrajectory, road: RoadGeometry = RoadGeometry()) -> LaneTrajectory:
    """Translate world-frame poses into the lane frame.

    Straight road aligned with the world x axis: positions carry over,
    speeds resolve into (vx, vy) components.  Vehicles leaving the roadway
    are flagged in ``off_road``, not rejected.
    """
    tracks: dict[str, LaneTrack] = {}
    flagged: list[str] = []
    for name, tr in world.tracks.items():
        vx = tr.v * np.cos(tr.theta)
        vy = tr.v * np.sin(tr.theta)
        tracks[name] = LaneTrack(x=tr.x, y=tr.y, vx=vx, vy=vy)
        if np.any(np.abs(tr.y) > road.half_width):
            flagged.append(name)
    return LaneTrajectory(dt=world.dt, tracks=tracks, off_road=tuple(flagged))
