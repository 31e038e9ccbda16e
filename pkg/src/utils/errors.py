"""
Error types for the Petri net homology engine.

Each error derives from the builtin the rest of the code base already raises
for the same situation (ValueError for bad input, RuntimeError for resource
limits), so callers catching the builtin keep working.
"""

from typing import Optional


class UnknownEventError(ValueError):
    """An event identifier that is not declared in the net."""

    def __init__(self, event: str) -> None:
        super().__init__(f"Unknown event identifier: {event!r}")
        self.event = event


class NetParseError(ValueError):
    """
    Syntax or semantic error in a net file document.

    Carries the 1-based line and column of the offending token.
    """

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class StateSpaceLimitError(RuntimeError):
    """The state space grew past the configured state-count cap."""

    def __init__(self, cap: int, reached: Optional[int] = None) -> None:
        detail = f" (reached {reached})" if reached is not None else ""
        super().__init__(f"State space exceeds cap of {cap} states{detail}")
        self.cap = cap
        self.reached = reached


class StateSpaceError(ValueError):
    """A state set that violates the StateSpace invariants."""


class FaceIndexError(IndexError):
    """Face operator called with n, i or epsilon out of range."""


class IncompatibleComplexError(ValueError):
    """Two semicubical sets that are not subcomplexes of a common ambient."""


class MalformedComplexError(ValueError):
    """A chain complex whose differentials do not compose to zero."""
