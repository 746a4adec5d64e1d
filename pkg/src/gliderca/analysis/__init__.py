"""Simulation, fleet and bound analysis, commutation suites, S-gap shifts, probes, rendering."""

from .diffusion import Decomposition, check_decomposition, detect_diffusion, find_decomposition, speed_check
from .fleets import (BoundReport, BoundUndefined, check_bound_monotonicity, is_fleet, is_left_fleet,
                     is_right_fleet, left_bound, right_bound)
from .probes import blocking_word_probe, refute_direction, sensitivity_probe
from .render import render_spacetime, write_spacetime
from .ryan import check_ryan_identities, commute_check, nocompact_H
from .sgap import SGapSpec, build_sgap, gapinert_check, generator_membership, perfect_squares
from .simulate import Trajectory, simulate

__all__ = [
    "BoundReport", "BoundUndefined", "Decomposition", "SGapSpec", "Trajectory",
    "blocking_word_probe", "build_sgap", "check_bound_monotonicity", "check_decomposition",
    "check_ryan_identities", "commute_check", "detect_diffusion", "find_decomposition",
    "gapinert_check", "generator_membership", "is_fleet", "is_left_fleet", "is_right_fleet",
    "left_bound", "nocompact_H", "perfect_squares", "refute_direction", "render_spacetime",
    "right_bound", "sensitivity_probe", "simulate", "speed_check", "write_spacetime",
]
