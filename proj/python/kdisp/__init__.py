"""Exact and heuristic k-dispersion of point sets in the unit cube."""

from ._kdisp import *  # noqa: F401,F403
from ._kdisp import __version__  # noqa: F401
