"""Campanato space seminorms, Carleson measures and composition-operator criteria."""

from ._core import *  # noqa: F401,F403
from ._core import Error, ConfigError, DomainError, ResolutionError, GridConfig, __version__  # noqa: F401
