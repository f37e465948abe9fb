"""Noncommutative graphs, independence numbers, and additivity certificates
for zero-error classical capacities of quantum channels."""

from ._zecap import *  # noqa: F401,F403
from ._zecap import __version__  # noqa: F401
