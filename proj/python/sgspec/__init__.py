"""Exact spectral toolkit for signed graphs.

Thin re-export of the compiled extension; see the project README for the
operation surface.
"""

from ._sgspec import *  # noqa: F401,F403
from ._sgspec import __doc__  # noqa: F401

__version__ = "0.1.0"
