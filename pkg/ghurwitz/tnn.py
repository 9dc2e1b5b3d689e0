"""Exact total-nonnegativity certification on finite windows.

Every verdict is qualified by the window and the largest minor order that was
searched; nothing here claims anything about the infinite matrix.

Minors are computed with fraction-free (Bareiss) elimination on an integer
copy of the window: each row is scaled once by the lcm of its denominators,
which multiplies every minor by a positive constant and so keeps its sign.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Literal

from ghurwitz.errors import DomainError, ShapeError
from ghurwitz.laurent import LaurentWindow
from ghurwitz.rational import format_rational
from ghurwitz.structmat import WindowMatrix

logger = logging.getLogger(__name__)

#: Largest minor order searched when the caller does not choose one.
DEFAULT_MAX_ORDER = 5
#: Number of minors a harness is willing to enumerate for one window.
DEFAULT_MINOR_BUDGET = 350_000

Status = Literal["nonnegative_up_to", "negative_minor"]
Method = Literal["fekete", "enumeration"]


@dataclass(frozen=True)
class MinorWitness:
    """A minor: absolute row and column indices and its exact value."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Fraction

    @property
    def order(self) -> int:
        return len(self.rows)

    def to_dict(self) -> dict[str, object]:
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "value": format_rational(self.value),
        }


@dataclass(frozen=True)
class TnnVerdict:
    """Outcome of :func:`check_tnn` on one window.

    Attributes:
        status: ``"nonnegative_up_to"`` or ``"negative_minor"``.
        order_checked: Largest minor order covered by the verdict.
        bounds: ``(row_lo, row_hi, col_lo, col_hi)`` of the searched window.
        witness: The lexicographically smallest negative minor, if any.
        method: ``"fekete"`` when every contiguous minor was positive,
            ``"enumeration"`` when all minors were enumerated.
    """

    status: Status
    order_checked: int
    bounds: tuple[int, int, int, int]
    witness: MinorWitness | None = None
    method: Method = "enumeration"

    @property
    def passed(self) -> bool:
        return self.status == "nonnegative_up_to"

    def to_dict(self) -> dict[str, object]:
        data: dict[str, object]
        if self.witness is None:
            data = {"status": self.status, "order": self.order_checked}
        else:
            data = {"status": self.status, **self.witness.to_dict()}
        row_lo, row_hi, col_lo, col_hi = self.bounds
        data["window"] = {"row_lo": row_lo, "row_hi": row_hi, "col_lo": col_lo, "col_hi": col_hi}
        data["method"] = self.method
        return data


# -- determinants -------------------------------------------------------------


def _int_det(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss elimination with row swaps on an integer matrix."""
    n = len(rows)
    a = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


def _scaled_rows(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], list[int]]:
    ints: list[list[int]] = []
    scales: list[int] = []
    for row in rows:
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        ints.append([int(x * scale) for x in row])
        scales.append(scale)
    return ints, scales


@lru_cache(maxsize=4096)
def _cached_det(rows: tuple[tuple[Fraction, ...], ...]) -> Fraction:
    ints, scales = _scaled_rows(rows)
    return Fraction(_int_det(ints), math.prod(scales))


def exact_det(m: WindowMatrix | Sequence[Sequence[Fraction | int]]) -> Fraction:
    """Exact determinant of a square matrix.

    Args:
        m: A square :class:`WindowMatrix` or nested sequences of rationals.

    Raises:
        ShapeError: If the matrix is not square.
    """
    rows = m.entries if isinstance(m, WindowMatrix) else m
    grid = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if any(len(row) != len(grid) for row in grid):
        raise ShapeError(f"determinant needs a square matrix, got {len(grid)} rows")
    return _cached_det(grid)


# -- minor enumeration ----------------------------------------------------------


class _IntWindow:
    """Integer copy of a window with its row scales, for signed minor values."""

    def __init__(self, m: WindowMatrix) -> None:
        self.window = m
        self.ints, self.scales = _scaled_rows(m.entries)

    def minor(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> Fraction:
        r0 = self.window.row_lo
        c0 = self.window.col_lo
        grid = [[self.ints[i - r0][j - c0] for j in cols] for i in rows]
        scale = math.prod(self.scales[i - r0] for i in rows)
        return Fraction(_int_det(grid), scale)


def _validate_order(m: WindowMatrix, k: int) -> None:
    limit = min(m.n_rows, m.n_cols)
    if not 1 <= k <= limit:
        raise ShapeError(f"minor order {k} is outside 1..{limit} for this window")


def _row_sets(m: WindowMatrix, k: int) -> Iterator[tuple[int, ...]]:
    return combinations(range(m.row_lo, m.row_hi + 1), k)


def _first_negative_for_rows(
    work: _IntWindow, k: int, row_sets: Sequence[tuple[int, ...]]
) -> MinorWitness | None:
    cols_all = range(work.window.col_lo, work.window.col_hi + 1)
    for rows in row_sets:
        for cols in combinations(cols_all, k):
            value = work.minor(rows, cols)
            if value < 0:
                return MinorWitness(rows, cols, value)
    return None


def _chunks(items: list[tuple[int, ...]], parts: int) -> list[list[tuple[int, ...]]]:
    size = max(1, math.ceil(len(items) / parts))
    return [items[i : i + size] for i in range(0, len(items), size)]


def contiguous_minor_scan(m: WindowMatrix, max_order: int) -> Iterator[MinorWitness]:
    """Yield every minor with consecutive rows and consecutive columns.

    Order is ``(k, first row, first column)``.
    """
    _validate_order(m, max_order)
    work = _IntWindow(m)
    for k in range(1, max_order + 1):
        for r in range(m.row_lo, m.row_hi - k + 2):
            rows = tuple(range(r, r + k))
            for c in range(m.col_lo, m.col_hi - k + 2):
                cols = tuple(range(c, c + k))
                yield MinorWitness(rows, cols, work.minor(rows, cols))


def first_negative_contiguous_minor(m: WindowMatrix, max_order: int) -> MinorWitness | None:
    """First negative contiguous minor of order at most ``max_order``, if any."""
    return next((w for w in contiguous_minor_scan(m, max_order) if w.value < 0), None)


def _all_contiguous_positive(m: WindowMatrix, max_order: int) -> bool:
    return all(w.value > 0 for w in contiguous_minor_scan(m, max_order))


def check_tnn(
    m: WindowMatrix,
    max_order: int | None = None,
    *,
    fast_path: bool = True,
    workers: int = 1,
) -> TnnVerdict:
    """Search all minors of order ``1..max_order`` for a negative one.

    Minors are visited in lexicographic order of ``(k, rows, cols)`` and the
    first negative one is returned, whatever the number of workers. When every
    contiguous minor up to ``max_order`` is strictly positive, all minors up to
    that order are positive and enumeration is skipped; the shortcut can only
    produce a nonnegative verdict.

    Args:
        m: The window to check.
        max_order: Largest order; defaults to ``min(5, rows, cols)``.
        fast_path: Allow the contiguous-minor shortcut.
        workers: Threads used to enumerate row subsets.

    Raises:
        ShapeError: If ``max_order`` exceeds the window or is below 1.
    """
    if max_order is None:
        max_order = min(DEFAULT_MAX_ORDER, m.n_rows, m.n_cols)
    _validate_order(m, max_order)

    if fast_path and _all_contiguous_positive(m, max_order):
        logger.debug("all contiguous minors up to order %d are positive", max_order)
        return TnnVerdict("nonnegative_up_to", max_order, m.bounds, method="fekete")

    work = _IntWindow(m)
    for k in range(1, max_order + 1):
        row_sets = list(_row_sets(m, k))
        witness: MinorWitness | None
        if workers > 1 and len(row_sets) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                found = pool.map(
                    lambda chunk: _first_negative_for_rows(work, k, chunk),
                    _chunks(row_sets, workers),
                )
                witness = next((w for w in found if w is not None), None)
        else:
            witness = _first_negative_for_rows(work, k, row_sets)
        if witness is not None:
            logger.debug("negative minor of order %d at rows %s", k, witness.rows)
            return TnnVerdict("negative_minor", max_order, m.bounds, witness)
    return TnnVerdict("nonnegative_up_to", max_order, m.bounds)


def has_nonzero_minor_of_order(m: WindowMatrix, k: int) -> MinorWitness | None:
    """First ``k x k`` minor with a nonzero value, in lexicographic order.

    Raises:
        ShapeError: If ``k`` is outside ``1..min(rows, cols)``.
    """
    _validate_order(m, k)
    work = _IntWindow(m)
    for rows in _row_sets(m, k):
        for cols in combinations(range(m.col_lo, m.col_hi + 1), k):
            value = work.minor(rows, cols)
            if value != 0:
                return MinorWitness(rows, cols, value)
    return None


def affordable_order(n_rows: int, n_cols: int, budget: int = DEFAULT_MINOR_BUDGET) -> int:
    """Largest order ``k`` whose minor count ``C(r,k) C(c,k)`` fits ``budget``."""
    order = 1
    for k in range(1, min(n_rows, n_cols) + 1):
        if math.comb(n_rows, k) * math.comb(n_cols, k) > budget:
            break
        order = k
    return order


# -- degeneracy ---------------------------------------------------------------------


def detect_geometric_degeneracy(
    p: LaurentWindow, q: LaurentWindow
) -> tuple[Fraction, Fraction] | None:
    """Detect ``a_k = a_0 rho^k`` and ``b_k = s a_k`` on the stored windows.

    On the windows this holds exactly when every order-2 minor of ``H(p, q)``
    vanishes. The ratio must be nonzero: with ``rho = 0`` only ``a_0`` survives
    and rows 1 and 3 of ``H(p, q)`` give the order-2 minor ``a_0^2``, so such a
    pair is reported as not degenerate. Zeros declared past a closed side rule
    out any nonzero ratio as well.

    Returns:
        ``(rho, s)`` with ``rho = a_1/a_0`` and ``s = b_0/a_0``, or ``None``.

    Raises:
        DomainError: If ``a_0`` is not stored or is zero.
    """
    if not p.covers(0) or p.coefficient(0, "p") == 0:
        raise DomainError("degeneracy detection needs a stored nonzero a_0")
    a0 = p.coefficient(0, "p")
    a_plus = p.known_value(1)
    a_minus = p.known_value(-1)
    if a_plus is not None:
        rho = a_plus / a0
    elif a_minus is not None:
        if a_minus == 0:
            return None
        rho = a0 / a_minus
    else:
        rho = Fraction(1)
    if rho == 0:
        return None
    # a known zero past a closed side breaks a_k = a_0 rho^k
    if p.lower_closed or p.upper_closed:
        return None

    def geometric(k: int) -> Fraction:
        return a0 * rho**k

    if any(c != geometric(k) for k, c in p.items()):
        return None
    anchor = 0 if q.covers(0) else q.lo
    scale = q.coefficient(anchor, "q") / geometric(anchor)
    if scale != 0 and (q.lower_closed or q.upper_closed):
        return None
    if any(c != scale * geometric(k) for k, c in q.items()):
        return None
    return rho, scale
