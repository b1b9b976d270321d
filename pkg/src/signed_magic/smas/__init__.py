"""Signed magic array set constructions and their routing."""

from __future__ import annotations

from .construct import (
    base_6_7_1,
    build_57,
    build_6b,
    build_odd_odd,
    build_route,
    construct_smas,
    double_from_ihs,
    transpose_set,
)
from .engine import Plan, check_leftovers, realize
from .routing import Construction, Route, admissibility_violation, route_for

__all__ = [
    "Construction",
    "Plan",
    "Route",
    "admissibility_violation",
    "base_6_7_1",
    "build_57",
    "build_6b",
    "build_odd_odd",
    "build_route",
    "check_leftovers",
    "construct_smas",
    "double_from_ihs",
    "realize",
    "route_for",
    "transpose_set",
]
