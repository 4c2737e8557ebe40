"""Weak dominance drawings of DAGs with minimum falsely implied paths."""

from domdraw import _core
from domdraw._core import *  # noqa: F401,F403

__version__ = "0.1.0"
__all__ = [name for name in dir(_core) if not name.startswith("_")]
