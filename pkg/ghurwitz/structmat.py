"""Lazily indexed structured matrices and finite window extraction.

Row and column indices are plain signed integers; ``(1, 1)`` is the
uppermost row and the leftmost column of the displayed matrices. Every entry
is read straight from a backing :class:`~ghurwitz.laurent.LaurentWindow`, so a
coefficient outside that window raises
:class:`~ghurwitz.errors.OutsideWindowError` instead of being read as zero.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar

from ghurwitz.errors import DomainError, OutsideWindowError, RangeError
from ghurwitz.laurent import (
    LaurentWindow,
    pad_window,
    split_even_odd,
    window_add,
    window_shift,
)
from ghurwitz.rational import format_rational

logger = logging.getLogger(__name__)

_ZERO = Fraction(0)


class MatrixView:
    """Base class for an infinite matrix with an exact entry function."""

    kind: ClassVar[str] = "abstract"

    def entry(self, i: int, j: int) -> Fraction:
        raise NotImplementedError


@dataclass(frozen=True)
class ToeplitzView(MatrixView):
    """``T(f)`` with ``entry(i, j) = f_{j-i}``."""

    f: LaurentWindow
    kind: ClassVar[str] = "toeplitz"

    def entry(self, i: int, j: int) -> Fraction:
        return self.f.coefficient(j - i, "f")


@dataclass(frozen=True)
class HurwitzTypeView(MatrixView):
    """``H(p, q)``: odd rows carry ``a_k`` from ``p``, even rows ``b_k`` from ``q``.

    ``entry(i, j) = a_{j-(i+1)/2}`` for odd ``i`` and ``b_{j-i/2}`` for even
    ``i``, so ``entry(1, 1) = a_0`` and ``entry(2, 1) = b_0``.
    """

    p: LaurentWindow
    q: LaurentWindow
    kind: ClassVar[str] = "hurwitz_type"

    def entry(self, i: int, j: int) -> Fraction:
        if i % 2:
            return self.p.coefficient(j - (i + 1) // 2, "p")
        return self.q.coefficient(j - i // 2, "q")


@dataclass(frozen=True)
class GeneralizedHurwitzView(MatrixView):
    """Generalized Hurwitz matrix with ``entry(i, j) = f_{jM - i + 1 - row_offset}``.

    ``row_offset = 0`` is the displayed convention, where ``entry(1, 1) = f_M``.
    With ``M = 2`` and ``row_offset = 1`` the view equals ``H(p, q)`` of the
    even/odd split entry for entry; with ``row_offset = 0`` it equals that
    matrix moved up one row (``entry(i, j) = H(i-1, j)``).
    """

    f: LaurentWindow
    M: int
    row_offset: int = 0
    kind: ClassVar[str] = "generalized"

    def __post_init__(self) -> None:
        if self.M < 1:
            raise DomainError(f"generalized Hurwitz step M must be positive, got {self.M}")

    def entry(self, i: int, j: int) -> Fraction:
        return self.f.coefficient(j * self.M - i + 1 - self.row_offset, "f")


@dataclass(frozen=True)
class TwoBandMaskView(MatrixView):
    """Mask with ``A`` at ``(i, 2i-1)``, ``B`` at ``(i, 2i)`` and zeros elsewhere."""

    A: Fraction
    B: Fraction
    kind: ClassVar[str] = "two_band"

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))

    def entry(self, i: int, j: int) -> Fraction:
        if j == 2 * i - 1:
            return self.A
        if j == 2 * i:
            return self.B
        return _ZERO


def hurwitz_view(f: LaurentWindow) -> HurwitzTypeView:
    """Hurwitz matrix of ``f``: ``H(p, q)`` for ``f(z) = q(z^2) + z p(z^2)``."""
    p, q = split_even_odd(f)
    return HurwitzTypeView(p, q)


def entry(view: MatrixView, i: int, j: int) -> Fraction:
    """Exact entry ``(i, j)`` of ``view``."""
    return view.entry(i, j)


@dataclass(frozen=True)
class WindowMatrix:
    """Dense exact copy of rows ``row_lo..row_hi`` and columns ``col_lo..col_hi``."""

    row_lo: int
    row_hi: int
    col_lo: int
    col_hi: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.row_lo > self.row_hi or self.col_lo > self.col_hi:
            raise RangeError(
                f"ill-ordered window rows [{self.row_lo}, {self.row_hi}] "
                f"cols [{self.col_lo}, {self.col_hi}]"
            )
        if len(self.entries) != self.n_rows or any(
            len(row) != self.n_cols for row in self.entries
        ):
            raise RangeError("window entries do not match the index bounds")

    @classmethod
    def from_rows(
        cls, rows: list[list[Fraction | int]], row_lo: int = 1, col_lo: int = 1
    ) -> WindowMatrix:
        """Wrap a dense grid whose top-left entry has index ``(row_lo, col_lo)``."""
        if not rows or not rows[0]:
            raise RangeError("a window needs at least one entry")
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        return cls(
            row_lo=row_lo,
            row_hi=row_lo + len(entries) - 1,
            col_lo=col_lo,
            col_hi=col_lo + len(entries[0]) - 1,
            entries=entries,
        )

    @property
    def n_rows(self) -> int:
        return self.row_hi - self.row_lo + 1

    @property
    def n_cols(self) -> int:
        return self.col_hi - self.col_lo + 1

    @property
    def bounds(self) -> tuple[int, int, int, int]:
        return self.row_lo, self.row_hi, self.col_lo, self.col_hi

    def at(self, i: int, j: int) -> Fraction:
        """Entry at absolute index ``(i, j)``."""
        if not (self.row_lo <= i <= self.row_hi and self.col_lo <= j <= self.col_hi):
            raise RangeError(f"index ({i}, {j}) outside window {self.bounds}")
        return self.entries[i - self.row_lo][j - self.col_lo]

    def submatrix(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> tuple[tuple[Fraction, ...], ...]:
        """Entries at absolute row and column indices."""
        return tuple(tuple(self.at(i, j) for j in cols) for i in rows)

    def sub_window(self, row_lo: int, row_hi: int, col_lo: int, col_hi: int) -> WindowMatrix:
        """Contiguous sub-window with absolute bounds."""
        rows = [
            [self.at(i, j) for j in range(col_lo, col_hi + 1)]
            for i in range(row_lo, row_hi + 1)
        ]
        return WindowMatrix.from_rows(rows, row_lo, col_lo)  # type: ignore[arg-type]

    def to_dict(self) -> dict[str, object]:
        return {
            "row_lo": self.row_lo,
            "row_hi": self.row_hi,
            "col_lo": self.col_lo,
            "col_hi": self.col_hi,
            "entries": [[format_rational(x) for x in row] for row in self.entries],
        }


def extract_window(
    view: MatrixView, row_lo: int, row_hi: int, col_lo: int, col_hi: int
) -> WindowMatrix:
    """Copy a finite window of ``view``.

    Raises:
        RangeError: If the bounds are ill-ordered.
        OutsideWindowError: If an entry needs a coefficient that is not stored.
    """
    if row_lo > row_hi or col_lo > col_hi:
        raise RangeError(
            f"ill-ordered window rows [{row_lo}, {row_hi}] cols [{col_lo}, {col_hi}]"
        )
    entries = tuple(
        tuple(view.entry(i, j) for j in range(col_lo, col_hi + 1))
        for i in range(row_lo, row_hi + 1)
    )
    return WindowMatrix(row_lo, row_hi, col_lo, col_hi, entries)


# -- coefficient ranges -------------------------------------------------------


def toeplitz_range(row_lo: int, row_hi: int, col_lo: int, col_hi: int) -> tuple[int, int]:
    """Series indices touched by ``T(f)`` on the given window."""
    return col_lo - row_hi, col_hi - row_lo


def hurwitz_ranges(
    row_lo: int, row_hi: int, col_lo: int, col_hi: int
) -> tuple[tuple[int, int] | None, tuple[int, int] | None]:
    """Index ranges of ``p`` and ``q`` touched by ``H(p, q)`` on the given window.

    A component is ``None`` when no row of its parity lies in the window.
    """
    odd = [i for i in range(row_lo, row_hi + 1) if i % 2]
    even = [i for i in range(row_lo, row_hi + 1) if not i % 2]
    p_range = (col_lo - (max(odd) + 1) // 2, col_hi - (min(odd) + 1) // 2) if odd else None
    q_range = (col_lo - max(even) // 2, col_hi - min(even) // 2) if even else None
    return p_range, q_range


def generalized_range(
    M: int, row_lo: int, row_hi: int, col_lo: int, col_hi: int, row_offset: int = 0
) -> tuple[int, int]:
    """Series indices touched by the generalized Hurwitz matrix on the given window."""
    return col_lo * M - row_hi + 1 - row_offset, col_hi * M - row_lo + 1 - row_offset


def padded(f: LaurentWindow, lo: int, hi: int) -> LaurentWindow:
    """Widen ``f`` over ``[lo, hi]`` with zeros on its closed sides only."""
    return pad_window(f, lo, hi)


# -- structural identities -----------------------------------------------------


def row_shift_check(
    p: LaurentWindow,
    q: LaurentWindow,
    row_lo: int,
    row_hi: int,
    col_lo: int,
    col_hi: int,
) -> bool:
    """Check ``H(q, z p)(i, j) = H(p, q)(i+1, j)`` on the window.

    Raises:
        OutsideWindowError: If either side needs an unstored coefficient.
    """
    shifted = HurwitzTypeView(q, window_shift(p))
    original = HurwitzTypeView(p, q)
    for i in range(row_lo, row_hi + 1):
        for j in range(col_lo, col_hi + 1):
            if shifted.entry(i, j) != original.entry(i + 1, j):
                logger.debug("row shift mismatch at (%d, %d)", i, j)
                return False
    return True


def _mask_identity(
    lhs: ToeplitzView,
    rhs: HurwitzTypeView,
    mask: TwoBandMaskView,
    row_lo: int,
    row_hi: int,
    col_lo: int,
    col_hi: int,
) -> bool:
    for i in range(row_lo, row_hi + 1):
        for j in range(col_lo, col_hi + 1):
            product = _ZERO
            for k in (2 * i - 1, 2 * i):
                weight = mask.entry(i, k)
                if weight:
                    product += weight * rhs.entry(k, j)
            if lhs.entry(i, j) != product:
                logger.debug("factorization mismatch at (%d, %d)", i, j)
                return False
    return True


def factorization_check(
    p: LaurentWindow,
    q: LaurentWindow,
    A: Fraction | int,
    B: Fraction | int,
    row_lo: int,
    row_hi: int,
    col_lo: int,
    col_hi: int,
) -> bool:
    """Check ``T(Ap+Bq) = M(A,B) H(p,q)`` and ``T(Aq+Bzp) = M(A,B) H(q,zp)``.

    ``M(A, B)`` is the two-band mask, so each entry of the product is a sum of
    two terms. Both sides are computed independently: the left side through
    :func:`~ghurwitz.laurent.window_add` and a Toeplitz view.

    Raises:
        DomainError: If ``A`` or ``B`` is negative.
        OutsideWindowError: If a needed coefficient is not stored.
    """
    A = Fraction(A)
    B = Fraction(B)
    if A < 0 or B < 0:
        raise DomainError("mask weights A and B must be nonnegative")
    mask = TwoBandMaskView(A, B)
    p_tilde = window_shift(p)
    try:
        first = ToeplitzView(window_add(p, q, A, B))
        second = ToeplitzView(window_add(q, p_tilde, A, B))
    except RangeError as exc:
        raise OutsideWindowError(col_lo - row_hi, max(p.lo, q.lo), min(p.hi, q.hi)) from exc
    return _mask_identity(
        first, HurwitzTypeView(p, q), mask, row_lo, row_hi, col_lo, col_hi
    ) and _mask_identity(
        second, HurwitzTypeView(q, p_tilde), mask, row_lo, row_hi, col_lo, col_hi
    )


def generalized_coherence_check(
    f: LaurentWindow, row_lo: int, row_hi: int, col_lo: int, col_hi: int
) -> bool:
    """Check that the generalized matrix with ``M = 2`` and ``row_offset = 1`` is ``H(f)``."""
    general = GeneralizedHurwitzView(f, 2, row_offset=1)
    hurwitz = hurwitz_view(f)
    return all(
        general.entry(i, j) == hurwitz.entry(i, j)
        for i in range(row_lo, row_hi + 1)
        for j in range(col_lo, col_hi + 1)
    )


def dilation_submatrix_check(
    f: LaurentWindow,
    M: int,
    k: int,
    row_lo: int,
    row_hi: int,
    col_lo: int,
    col_hi: int,
) -> bool:
    """Check that the step-``kM`` matrix is the column submatrix ``j -> kj`` of the step-``M`` one."""
    if k < 1:
        raise DomainError(f"column stride must be positive, got {k}")
    coarse = GeneralizedHurwitzView(f, k * M)
    fine = GeneralizedHurwitzView(f, M)
    return all(
        coarse.entry(i, j) == fine.entry(i, k * j)
        for i in range(row_lo, row_hi + 1)
        for j in range(col_lo, col_hi + 1)
    )
