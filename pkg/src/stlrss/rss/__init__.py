"""RSS margin signals and safety formulas."""

from .coords import (
    AGENT_NAMES,
    EGO,
    LaneTrack,
    LaneTrajectory,
    RoadGeometry,
    WorldTrack,
    WorldTrajectory,
    to_lane_coordinates,
)
from .distances import lat_safe_distance, lon_safe_distance, mu_lateral_velocity
from .formulas import cas_formula, cas_formula_per_agent, rss_formula, rss_subformulas
from .params import RssParams, load_rss_params, save_rss_params
from .predicates import (
    GAP_CHANNELS,
    RSS_CHANNELS,
    SAFE_MARGIN,
    VehicleGeometry,
    build_predicate_trace,
)

__all__ = [
    "AGENT_NAMES",
    "EGO",
    "GAP_CHANNELS",
    "LaneTrack",
    "LaneTrajectory",
    "RSS_CHANNELS",
    "RoadGeometry",
    "RssParams",
    "SAFE_MARGIN",
    "VehicleGeometry",
    "WorldTrack",
    "WorldTrajectory",
    "build_predicate_trace",
    "cas_formula",
    "cas_formula_per_agent",
    "lat_safe_distance",
    "load_rss_params",
    "lon_safe_distance",
    "mu_lateral_velocity",
    "rss_formula",
    "rss_subformulas",
    "save_rss_params",
    "to_lane_coordinates",
]
