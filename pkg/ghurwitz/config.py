"""Run configuration shared by the CLI and the harness suites."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from ghurwitz.analytic import DEFAULT_TOL
from ghurwitz.errors import SpecError
from ghurwitz.laurent import DEFAULT_EXP_TRUNCATION
from ghurwitz.rational import format_rational, parse_rational

Mode = Literal["exact", "approx"]

#: Environment variable that sets the worker count of the suites.
THREADS_ENV = "GHURWITZ_THREADS"

#: Minor order checked when none is given.
DEFAULT_ORDER = 4

#: Mask weights used for the Toeplitz side of the equivalence suite.
DEFAULT_GRID: tuple[Fraction, ...] = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))

_COMMANDS = ("build", "check-tnn", "check-s", "equivalence", "quasi-stability", "sector")


def parse_range(text: str) -> tuple[int, int]:
    """Parse ``"a:b"`` into an ordered pair of integers.

    Raises:
        SpecError: If the text is malformed or ``a > b``.
    """
    parts = text.split(":")
    if len(parts) != 2:
        raise SpecError(f"malformed range {text!r}; use 'a:b'")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise SpecError(f"malformed range {text!r}; bounds must be integers") from exc
    if lo > hi:
        raise SpecError(f"ill-ordered range {text!r}")
    return lo, hi


def parse_grid(text: str) -> tuple[Fraction, ...]:
    """Parse ``"0,1/2,1,2"`` into nonnegative rationals."""
    values = tuple(parse_rational(part) for part in text.split(",") if part.strip())
    if not values:
        raise SpecError("grid must list at least one value")
    if any(v < 0 for v in values):
        raise SpecError("grid values must be nonnegative")
    return values


def threads_from_env(default: int = 1) -> int:
    """Worker count from ``GHURWITZ_THREADS``, or ``default`` when unset.

    Read at call time so tests can monkeypatch ``os.environ``.

    Raises:
        SpecError: If the variable is set to anything but a positive integer.
    """
    raw = os.environ.get(THREADS_ENV, "").strip()
    if not raw:
        return default
    try:
        threads = int(raw)
    except ValueError as exc:
        raise SpecError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from exc
    if threads < 1:
        raise SpecError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return threads


@dataclass(frozen=True)
class RunConfig:
    """Every tunable parameter of one CLI run.

    ``threads`` changes only how fast a suite runs, never its result, so it is
    left out of :meth:`to_dict`.
    """

    command: str = "equivalence"
    inputs: tuple[str, ...] = ()
    rows: tuple[int, int] | None = None
    cols: tuple[int, int] | None = None
    max_order: int = DEFAULT_ORDER
    mode: Mode = "exact"
    tol: float = DEFAULT_TOL
    samples: int = 1000
    seed: int = 0
    M: int = 3
    grid: tuple[Fraction, ...] = DEFAULT_GRID
    count: int = 50
    degree: int = 8
    window: int = 8
    cap_window: int = 16
    cap_order: int = 4
    exp_truncation: int = DEFAULT_EXP_TRUNCATION
    row_offset: int = 0
    pad: bool = False
    max_inconclusive: float = 0.02
    threads: int = field(default=1, compare=False)

    def __post_init__(self) -> None:
        if self.command not in _COMMANDS:
            raise SpecError(f"unknown command {self.command!r}")
        for name in ("rows", "cols"):
            bounds = getattr(self, name)
            if bounds is not None and bounds[0] > bounds[1]:
                raise SpecError(f"ill-ordered {name} {bounds[0]}:{bounds[1]}")
        if self.max_order < 1:
            raise SpecError("max_order must be at least 1")
        if self.mode not in ("exact", "approx"):
            raise SpecError(f"mode must be 'exact' or 'approx', got {self.mode!r}")
        if not self.tol > 0:
            raise SpecError("tol must be positive")
        positive = ("samples", "count", "degree", "window", "cap_window", "cap_order",
                    "exp_truncation", "threads", "M")
        for name in positive:
            if getattr(self, name) < 1:
                raise SpecError(f"{name} must be positive")
        if self.cap_window < self.window:
            raise SpecError("cap_window must be at least the starting window")
        if not 0 <= self.max_inconclusive <= 1:
            raise SpecError("max_inconclusive must lie in [0, 1]")

    def to_dict(self) -> dict[str, object]:
        return {
            "command": self.command,
            "inputs": list(self.inputs),
            "rows": None if self.rows is None else list(self.rows),
            "cols": None if self.cols is None else list(self.cols),
            "max_order": self.max_order,
            "mode": self.mode,
            "tol": self.tol,
            "samples": self.samples,
            "seed": self.seed,
            "M": self.M,
            "grid": [format_rational(v) for v in self.grid],
            "count": self.count,
            "degree": self.degree,
            "window": self.window,
            "cap_window": self.cap_window,
            "cap_order": self.cap_order,
            "exp_truncation": self.exp_truncation,
            "row_offset": self.row_offset,
            "pad": self.pad,
            "max_inconclusive": self.max_inconclusive,
        }
