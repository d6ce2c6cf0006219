"""Delta-profile 4-graph construction, verification and edge extraction."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
