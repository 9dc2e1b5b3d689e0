"""Exact rational scalars and their string form.

The coefficient field is :class:`fractions.Fraction`, which keeps every value
in canonical form (positive denominator, coprime numerator). On the wire a
rational is the base-10 string ``"p/q"`` or ``"p"``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import TypeAlias

from ghurwitz.errors import SpecError

RationalScalar: TypeAlias = Fraction

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(value: object) -> Fraction:
    """Parse a wire-format rational.

    Args:
        value: A ``"p/q"`` / ``"p"`` string or a Python int. Floats are
            rejected because they are not exact.

    Returns:
        The canonical :class:`~fractions.Fraction`.

    Raises:
        SpecError: If the value is not a well-formed rational.
    """
    if isinstance(value, bool):
        raise SpecError(f"expected a rational string, got boolean {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if not isinstance(value, str):
        raise SpecError(f"expected a rational string like '3/4', got {value!r}")
    match = _RATIONAL_PATTERN.match(value)
    if match is None:
        raise SpecError(f"malformed rational {value!r}; use 'p/q' or 'p'")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise SpecError(f"rational {value!r} has a zero denominator")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction | int) -> str:
    """Render a rational as ``"p/q"``, or ``"p"`` when it is an integer."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational_list(values: object, field: str) -> tuple[Fraction, ...]:
    """Parse a JSON list of rationals, naming ``field`` in error messages."""
    if not isinstance(values, list):
        raise SpecError(f"'{field}' must be a list of rationals")
    try:
        return tuple(parse_rational(v) for v in values)
    except SpecError as exc:
        raise SpecError(f"'{field}': {exc}") from exc
