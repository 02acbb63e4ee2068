"""Convex-polygon strut-property toolkit: geometry kernel, pentagon family analysis,
and perimeter-bound searches."""

from ._strutgeo import *  # noqa: F401,F403
