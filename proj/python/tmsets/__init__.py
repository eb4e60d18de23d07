"""Additive structure of Thue-Morse occurrence sets.

Thin re-export of the compiled core; see the project README for the full
tour of the operations.
"""

from tmsets._core import *  # noqa: F401,F403
from tmsets._core import __version__  # noqa: F401
