"""Exception hierarchy for ghurwitz.

Every exception carries the CLI exit code it maps to. Mathematical verdicts
(a negative minor, a broken interlacing chain) are never raised: they are
returned as verdict objects. Exceptions are reserved for bad input and for
data that is too short to answer the question asked.
"""

from __future__ import annotations

from typing import Any

#: Exit code for malformed input (specs, flags, parameters).
EXIT_INPUT_ERROR = 2
#: Exit code for data insufficiency (window too small, truncation too short).
EXIT_INSUFFICIENT_DATA = 3


class GhurwitzError(Exception):
    """Base class for every error raised by ghurwitz."""

    exit_code: int = EXIT_INPUT_ERROR


class SpecError(GhurwitzError, ValueError):
    """Raised when a JSON spec or a command-line value is malformed."""


class DomainError(GhurwitzError, ValueError):
    """Raised when a parameter lies outside the domain an operation accepts."""


class RangeError(GhurwitzError, ValueError):
    """Raised when index ranges are empty or not well ordered."""


class ShapeError(GhurwitzError, ValueError):
    """Raised on non-square determinants or minor orders exceeding a window."""


class InsufficientDataError(GhurwitzError):
    """Raised when the stored coefficients cannot answer a request."""

    exit_code = EXIT_INSUFFICIENT_DATA


class OutsideWindowError(InsufficientDataError):
    """Raised when a required coefficient lies outside its backing window.

    Attributes:
        index: The series index that was requested.
        lo: Lower end of the backing window.
        hi: Upper end of the backing window.
    """

    def __init__(self, index: int, lo: int, hi: int, name: str = "f") -> None:
        super().__init__(f"coefficient {name}_{index} lies outside the window [{lo}, {hi}]")
        self.index = index
        self.lo = lo
        self.hi = hi


class SamplingError(GhurwitzError):
    """Raised when no usable sample point could be drawn."""

    exit_code = EXIT_INSUFFICIENT_DATA


class ConvergenceError(GhurwitzError):
    """Raised when an iterative numeric scheme does not reach its tolerance.

    Attributes:
        best: The best iterate reached before giving up.
    """

    exit_code = EXIT_INSUFFICIENT_DATA

    def __init__(self, message: str, best: Any = None) -> None:
        super().__init__(message)
        self.best = best
