"""Exact calculator for measure-weighted subgroup relations.

Everything numeric crosses the boundary as exact fraction strings "a/b".
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
