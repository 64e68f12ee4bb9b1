"""RSS rule parameters and their config-file format.

Config files (YAML or JSON) use the canonical key names: ``rho``, ``mu``,
``dt``, ``a_lon_min_br``, ``a_lon_max_acc``, ``a_lon_max_br``,
``a_lat_min_br``, ``a_lat_max_acc`` (all required keys have defaults), plus
the optional ``v_eps`` zero-velocity tolerance.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from decimal import Decimal
from fractions import Fraction
from pathlib import Path

import yaml


@dataclass(frozen=True)
class RssParams:
    rho: float = 0.5
    mu: float = 0.4
    dt: float = 0.01
    a_lon_min_br: float = 4.0
    a_lon_max_acc: float = 4.5
    a_lon_max_br: float = 2.5
    a_lat_min_br: float = 3.0
    a_lat_max_acc: float = 3.0
    v_eps: float = 0.01

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not value > 0:
                raise ValueError(f"RSS parameter {f.name} must be strictly positive, got {value}")
        # rho must land exactly on the sample grid, otherwise the boundary
        # between hesitation and reaction windows would silently shift.
        ratio = Fraction(Decimal(repr(self.rho))) / Fraction(Decimal(repr(self.dt)))
        if ratio.denominator != 1:
            raise ValueError(f"rho={self.rho} is not an integer multiple of dt={self.dt}")

    @property
    def rho_steps(self) -> int:
        """Number of samples in the hesitation window [0, rho)."""
        return int(Fraction(Decimal(repr(self.rho))) / Fraction(Decimal(repr(self.dt))))


def load_rss_params(path: str | Path) -> RssParams:
    path = Path(path)
    text = path.read_text()
    data = json.loads(text) if path.suffix.lower() == ".json" else yaml.safe_load(text)
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a mapping of RSS parameters")
    known = {f.name for f in fields(RssParams)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"{path}: unknown RSS parameter keys {sorted(unknown)}")
    return RssParams(**{k: float(v) for k, v in data.items()})


def save_rss_params(params: RssParams, path: str | Path) -> None:
    path = Path(path)
    data = asdict(params)
    if path.suffix.lower() == ".json":
        path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        path.write_text(yaml.safe_dump(data, sort_keys=True))
