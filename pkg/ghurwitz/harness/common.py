"""Window building, negative-witness search and ordered parallel evaluation."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import TypeVar

from ghurwitz.laurent import LaurentWindow, window_add
from ghurwitz.realroots import RationalPoly
from ghurwitz.structmat import (
    HurwitzTypeView,
    ToeplitzView,
    WindowMatrix,
    extract_window,
    hurwitz_ranges,
    padded,
    toeplitz_range,
)
from ghurwitz.tnn import (
    TnnVerdict,
    affordable_order,
    check_tnn,
    first_negative_contiguous_minor,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

#: Increment of the window side while searching for a negative minor.
GROWTH_STEP = 4


def poly_window(poly: RationalPoly) -> LaurentWindow:
    """A polynomial as a closed window (the zero polynomial is a single 0)."""
    return LaurentWindow.polynomial(poly.coeffs or (0,))


def hurwitz_window(p: LaurentWindow, q: LaurentWindow, size: int) -> WindowMatrix:
    """Rows and columns ``1..size`` of ``H(p, q)``, padding closed sides as needed."""
    p_range, q_range = hurwitz_ranges(1, size, 1, size)
    if p_range is not None:
        p = padded(p, *p_range)
    if q_range is not None:
        q = padded(q, *q_range)
    return extract_window(HurwitzTypeView(p, q), 1, size, 1, size)


def toeplitz_window(f: LaurentWindow, size: int) -> WindowMatrix:
    """Rows and columns ``1..size`` of ``T(f)``."""
    lo, hi = toeplitz_range(1, size, 1, size)
    return extract_window(ToeplitzView(padded(f, lo, hi)), 1, size, 1, size)


def combination_window(
    u: LaurentWindow, v: LaurentWindow, A: Fraction, B: Fraction, size: int
) -> WindowMatrix:
    """``T(A u + B v)`` on rows and columns ``1..size``."""
    lo, hi = toeplitz_range(1, size, 1, size)
    lo = min(lo, u.lo, v.lo)
    hi = max(hi, u.hi, v.hi)
    return toeplitz_window(window_add(padded(u, lo, hi), padded(v, lo, hi), A, B), size)


def search_negative(
    build: Callable[[int], WindowMatrix],
    start: int,
    cap: int,
    cap_order: int,
    workers: int = 1,
) -> tuple[TnnVerdict, bool]:
    """Grow a square window until a negative minor shows up or ``cap`` is reached.

    At each size all minors up to the affordable order (at most ``cap_order``)
    are enumerated, then contiguous minors of every order are scanned.

    Returns:
        The last verdict and whether it carries a negative witness.
    """
    size = start
    while True:
        window = build(size)
        order = min(cap_order, affordable_order(size, size), size)
        verdict = check_tnn(window, order, workers=workers)
        if not verdict.passed:
            return verdict, True
        if size > order:
            witness = first_negative_contiguous_minor(window, size)
            if witness is not None:
                logger.debug("contiguous minor of order %d is negative", witness.order)
                return TnnVerdict("negative_minor", size, window.bounds, witness), True
        if size >= cap:
            return verdict, False
        logger.debug("no negative minor on %dx%d, growing the window", size, size)
        size = min(cap, size + GROWTH_STEP)


def ordered_map(func: Callable[[T], R], items: Sequence[T], workers: int) -> list[R]:
    """Apply ``func`` to ``items``; results keep the input order whatever ``workers`` is."""
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))
