"""Reversible glider cellular automata on sofic and synchronizing shifts."""

from .configuration import TailConfiguration, glue
from .glider import GliderSystem, build_F, build_GX, build_GXn, build_ryan_H, with_n
from .marker import CAPipeline, MarkerAutomorphism, build as build_marker, compose, validate_marker
from .presentation import SoficPresentation, parse_presentation
from .recode import recode, verify_prop01

__version__ = "0.1.0"

__all__ = [
    "CAPipeline", "GliderSystem", "MarkerAutomorphism", "SoficPresentation", "TailConfiguration",
    "build_F", "build_GX", "build_GXn", "build_marker", "build_ryan_H", "compose", "glue",
    "parse_presentation", "recode", "validate_marker", "verify_prop01", "with_n",
]
