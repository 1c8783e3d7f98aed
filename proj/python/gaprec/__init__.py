"""Numerical semigroup gap sets, the linear recurrences whose solutions vanish
exactly on them, and the associated increasing random walks.

Everything except Monte Carlo summaries is exact: rationals cross the
boundary as ``fractions.Fraction`` objects and integers are arbitrary size.
"""

from gaprec._core import *  # noqa: F401,F403
from gaprec._core import __version__  # noqa: F401
