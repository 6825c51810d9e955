"""Forts, zero forcing, and related graph parameters.

Thin package wrapper around the compiled _fortlib extension module.
"""

from ._fortlib import *  # noqa: F401,F403
from ._fortlib import __version__  # noqa: F401
