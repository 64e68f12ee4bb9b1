"""STL formulas enforcing the RSS response rules and the collision box.

The responsibility formula is a conjunction of four cases keyed on how the
lateral/longitudinal safe distances flip from safe to unsafe: trigger
patterns watch the flip, responses constrain ego accelerations and the
deadbanded lateral velocity over the hesitation window ``[0, rho)`` and
the reaction window ``[rho, inf)``, released once either distance is safe
again.  The initial-state case carries no box and therefore binds at
sample 0 only.
"""

from __future__ import annotations

import math

from ..stl import (
    Always,
    And,
    Formula,
    Implies,
    Interval,
    Next,
    NonStrictRelease,
    Not,
    Or,
    atom_le,
    conj,
    disj,
    margin,
)
from .params import RssParams


def rss_formula(p: RssParams) -> Formula:
    """Responsibility formula over the margin channels of a predicate trace."""
    s_lat = margin("S_lat")
    s_lon = margin("S_lon")
    a_lon_max = margin("A_lon_maxAcc")
    a_lon_br = margin("A_lon_minBr")
    a_lat_max = margin("A_lat_maxAcc")
    a_lat_br = margin("A_lat_minBr")
    v_stop = margin("V_lat_stop")
    v_neg = margin("V_lat_neg")

    hesitation = Interval(0.0, p.rho, False, True)
    reaction = Interval(p.rho, math.inf, False, True)
    safe_again = Or(s_lat, s_lon)

    p_lon = And(
        NonStrictRelease(safe_again, a_lon_max, hesitation),
        NonStrictRelease(safe_again, a_lon_br, reaction),
    )
    p_lat = conj(
        NonStrictRelease(safe_again, a_lat_max, hesitation),
        NonStrictRelease(disj(s_lat, s_lon, v_stop), a_lat_br, reaction),
        NonStrictRelease(
            safe_again,
            Implies(v_stop, NonStrictRelease(safe_again, v_neg)),
            reaction,
        ),
    )

    becomes_unsafe = Next(And(Not(s_lat), Not(s_lon)))
    case_lon = Always(Implies(conj(Not(s_lat), s_lon, becomes_unsafe), Next(p_lon)))
    case_lat = Always(Implies(conj(s_lat, Not(s_lon), becomes_unsafe), Next(p_lat)))
    case_both = Always(Implies(conj(s_lat, s_lon, becomes_unsafe), Next(Or(p_lat, p_lon))))
    case_initial = Implies(And(Not(s_lat), Not(s_lon)), Next(Or(p_lat, p_lon)))

    return conj(case_lon, case_lat, case_both, case_initial)


def rss_subformulas(p: RssParams) -> dict[str, Formula]:
    """The four response cases individually, for diagnostics and oracles."""
    full = rss_formula(p)
    # conj() nests left: ((lon /\ lat) /\ both) /\ initial
    first, case_initial = full.left, full.right
    second, case_both = first.left, first.right
    case_lon, case_lat = second.left, second.right
    return {"lon": case_lon, "lat": case_lat, "both": case_both, "initial": case_initial}


def cas_formula(delta_x: float, delta_y: float) -> Formula:
    """Collision box formula over the center-distance gap channels.

    Both agents must sit inside the (delta_x, delta_y) box around the ego
    at the same sample for a violation, matching the conjunctive form of
    the requirement.  See :func:`cas_formula_per_agent` for the
    variant that fires on either agent alone.
    """
    if not (delta_x > 0 and delta_y > 0):
        raise ValueError("collision thresholds must be positive")
    box = conj(
        atom_le("dx_a1", delta_x),
        atom_le("dy_a1", delta_y),
        atom_le("dx_a2", delta_x),
        atom_le("dy_a2", delta_y),
    )
    return Always(Not(box))


def cas_formula_per_agent(delta_x: float, delta_y: float) -> Formula:
    """Sensitivity variant: violation when either agent enters the box."""
    if not (delta_x > 0 and delta_y > 0):
        raise ValueError("collision thresholds must be positive")
    box1 = And(atom_le("dx_a1", delta_x), atom_le("dy_a1", delta_y))
    box2 = And(atom_le("dx_a2", delta_x), atom_le("dy_a2", delta_y))
    return Always(Not(Or(box1, box2)))
