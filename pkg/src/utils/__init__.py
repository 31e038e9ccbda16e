"""Utility functions, constants, settings and error types."""

from .errors import (
    UnknownEventError,
    NetParseError,
    StateSpaceLimitError,
    StateSpaceError,
    FaceIndexError,
    IncompatibleComplexError,
    MalformedComplexError,
)
from .settings import Settings, get_settings

__all__ = [
    'UnknownEventError',
    'NetParseError',
    'StateSpaceLimitError',
    'StateSpaceError',
    'FaceIndexError',
    'IncompatibleComplexError',
    'MalformedComplexError',
    'Settings',
    'get_settings',
]
