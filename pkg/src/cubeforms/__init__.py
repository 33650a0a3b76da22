"""Exact-arithmetic toolkit for quadratic-form class groups, 2x2x2 cube
orbits, alternating-form pairs, double Dirichlet series identities and
non-archimedean local L-factor identities.
"""

from . import altforms, arith, cubes, localfactors, qforms, series

__all__ = ["arith", "qforms", "cubes", "altforms", "series", "localfactors"]
__version__ = "0.1.0"
