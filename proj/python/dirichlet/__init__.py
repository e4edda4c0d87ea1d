"""Dirichlet problem on the unit disc and on ellipses."""

from ._dirichlet import *  # noqa: F401,F403
from ._dirichlet import __doc__  # noqa: F401
