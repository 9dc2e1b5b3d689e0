"""Exact Laurent-coefficient windows and product-form generators.

A :class:`LaurentWindow` is a finite slice ``f_lo .. f_hi`` of a two-way
sequence together with what the caller knows about the rest of it:

* ``lower_closed`` / ``upper_closed`` declare that the true coefficients vanish
  below ``lo`` / above ``hi`` (a one-sided series, or a Laurent polynomial when
  both hold);
* ``tail_mass`` optionally bounds ``sum(|f_k|)`` over the indices outside the
  window;
* ``exact`` / ``tail_bound`` say whether the stored values are the true
  coefficients or approximations with a uniform absolute error.

Nothing outside a window is ever treated as zero unless the corresponding side
is closed, and even then only :func:`pad_window` turns the declaration into
stored zeros.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Protocol

from ghurwitz.errors import (
    DomainError,
    InsufficientDataError,
    OutsideWindowError,
    RangeError,
)
from ghurwitz.rational import format_rational

logger = logging.getLogger(__name__)

#: Default number of cross terms kept when both sides of a product are infinite.
DEFAULT_EXP_TRUNCATION = 32

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LaurentWindow:
    """Coefficients ``f_lo .. f_hi`` of a Laurent series.

    Attributes:
        lo: Lowest stored index.
        hi: Highest stored index.
        coeffs: ``coeffs[t]`` is ``f_{lo+t}``.
        exact: Whether every stored value is the true coefficient.
        tail_bound: Uniform bound on the absolute error of the stored values
            (required when ``exact`` is false).
        lower_closed: True coefficients vanish below ``lo``.
        upper_closed: True coefficients vanish above ``hi``.
        tail_mass: Declared bound on the absolute sum of the coefficients
            outside ``[lo, hi]``; ``0`` for a Laurent polynomial.
    """

    lo: int
    hi: int
    coeffs: tuple[Fraction, ...]
    exact: bool = True
    tail_bound: float | None = None
    lower_closed: bool = False
    upper_closed: bool = False
    tail_mass: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if self.lo > self.hi:
            raise RangeError(f"window lower index {self.lo} exceeds upper index {self.hi}")
        if len(self.coeffs) != self.hi - self.lo + 1:
            raise RangeError(
                f"window [{self.lo}, {self.hi}] needs {self.hi - self.lo + 1} "
                f"coefficients, got {len(self.coeffs)}"
            )
        if not self.exact and self.tail_bound is None:
            raise DomainError("an approximate window must carry a tail_bound")
        if self.tail_bound is not None and self.tail_bound < 0:
            raise DomainError("tail_bound must be nonnegative")
        if self.tail_mass is not None and self.tail_mass < 0:
            raise DomainError("tail_mass must be nonnegative")
        if self.lower_closed and self.upper_closed:
            object.__setattr__(self, "tail_mass", 0.0)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(
        cls,
        coeffs: Iterable[Fraction | int],
        lo: int = 0,
        *,
        finite: bool = False,
    ) -> LaurentWindow:
        """Build an exact window starting at index ``lo``.

        Args:
            coeffs: Coefficients in increasing index order.
            lo: Index of the first coefficient.
            finite: Declare that the series has no other nonzero coefficients.
        """
        values = tuple(Fraction(c) for c in coeffs)
        return cls(
            lo=lo,
            hi=lo + len(values) - 1,
            coeffs=values,
            lower_closed=finite,
            upper_closed=finite,
        )

    @classmethod
    def polynomial(cls, coeffs: Iterable[Fraction | int], lo: int = 0) -> LaurentWindow:
        """Build a Laurent polynomial (both sides closed)."""
        return cls.from_coeffs(coeffs, lo, finite=True)

    # -- queries -----------------------------------------------------------

    @property
    def finite_support(self) -> bool:
        """Whether the window holds every nonzero coefficient of the series."""
        return self.lower_closed and self.upper_closed

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Iterate over ``(index, coefficient)`` pairs."""
        return zip(self.indices(), self.coeffs)

    def covers(self, k: int) -> bool:
        return self.lo <= k <= self.hi

    def coefficient(self, k: int, name: str = "f") -> Fraction:
        """Return the stored coefficient ``f_k``.

        Raises:
            OutsideWindowError: If ``k`` is not stored, even on a closed side.
        """
        if not self.lo <= k <= self.hi:
            raise OutsideWindowError(k, self.lo, self.hi, name)
        return self.coeffs[k - self.lo]

    def known_value(self, k: int) -> Fraction | None:
        """Return ``f_k`` when it is stored or declared zero, else ``None``."""
        if self.lo <= k <= self.hi:
            return self.coeffs[k - self.lo]
        if k < self.lo and self.lower_closed:
            return _ZERO
        if k > self.hi and self.upper_closed:
            return _ZERO
        return None

    def abs_mass(self) -> float:
        """Absolute sum of the stored coefficients."""
        return float(sum(abs(c) for c in self.coeffs))

    def abs_max(self) -> float:
        return float(max(abs(c) for c in self.coeffs))

    @property
    def is_zero(self) -> bool:
        """Whether every stored coefficient is zero."""
        return all(c == 0 for c in self.coeffs)

    def to_dict(self) -> dict[str, object]:
        """JSON-ready form with rationals as strings."""
        return {
            "lo": self.lo,
            "hi": self.hi,
            "coeffs": [format_rational(c) for c in self.coeffs],
            "exact": self.exact,
            "tail_bound": self.tail_bound,
            "lower_closed": self.lower_closed,
            "upper_closed": self.upper_closed,
        }


@dataclass(frozen=True)
class FactorSpec:
    """Finite truncation of the canonical product for totally positive sequences.

    Represents ``C z^j e^{Az + A0/z}`` times the positive-side ratio
    ``prod(1 + z/beta) / prod(1 - z/delta)`` and the negative-side ratio
    ``prod(1 + 1/(z beta)) / prod(1 - 1/(z delta))``. ``zero_at_origin`` adds
    the factor ``z`` that replaces a vanishing ``beta``.
    """

    C: Fraction = _ONE
    j: int = 0
    A: Fraction = _ZERO
    A0: Fraction = _ZERO
    pos_zeros: tuple[Fraction, ...] = ()
    pos_poles: tuple[Fraction, ...] = ()
    neg_zeros: tuple[Fraction, ...] = ()
    neg_poles: tuple[Fraction, ...] = ()
    zero_at_origin: bool = False

    def __post_init__(self) -> None:
        for name in ("C", "A", "A0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        for name in ("pos_zeros", "pos_poles", "neg_zeros", "neg_poles"):
            values = tuple(Fraction(v) for v in getattr(self, name))
            object.__setattr__(self, name, values)
            bad = [v for v in values if v <= 0]
            if bad:
                raise DomainError(
                    f"{name} must be strictly positive, got {format_rational(bad[0])}"
                )
        if self.C <= 0:
            raise DomainError("C must be positive")
        if self.A < 0 or self.A0 < 0:
            raise DomainError("exponential parameters A and A0 must be nonnegative")


@dataclass(frozen=True)
class StableFormSpec:
    """Finite truncation of the product form of series with TNN Hurwitz matrices.

    ``C z^r e^{Bz + B0/z}`` times real factors ``(1 + z/xi)`` (``real_zeros``)
    and ``(1 + 1/(z xi))`` (``neg_real_zeros``), conjugate pairs
    ``(1 + z/gamma)(1 + z/conj(gamma))`` given as ``(Re gamma, Im gamma)``
    (and their ``1/z`` analogues), times ``g(z^2)`` for an optional
    :class:`FactorSpec` ``g``.
    """

    C: Fraction = _ONE
    r: int = 0
    B: Fraction = _ZERO
    B0: Fraction = _ZERO
    real_zeros: tuple[Fraction, ...] = ()
    neg_real_zeros: tuple[Fraction, ...] = ()
    complex_zeros: tuple[tuple[Fraction, Fraction], ...] = ()
    neg_complex_zeros: tuple[tuple[Fraction, Fraction], ...] = ()
    g: FactorSpec | None = None

    def __post_init__(self) -> None:
        for name in ("C", "B", "B0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        for name in ("real_zeros", "neg_real_zeros"):
            values = tuple(Fraction(v) for v in getattr(self, name))
            object.__setattr__(self, name, values)
            if any(v <= 0 for v in values):
                raise DomainError(f"{name} must be strictly positive")
        for name in ("complex_zeros", "neg_complex_zeros"):
            pairs = tuple((Fraction(re), Fraction(im)) for re, im in getattr(self, name))
            object.__setattr__(self, name, pairs)
            if any(re <= 0 or im <= 0 for re, im in pairs):
                raise DomainError(f"{name} need positive real and imaginary parts")
        if self.C <= 0:
            raise DomainError("C must be positive")
        if self.B < 0 or self.B0 < 0:
            raise DomainError("exponential parameters B and B0 must be nonnegative")


# -- arithmetic on windows ---------------------------------------------------


def _dropped_mass(u: LaurentWindow, lo: int, hi: int) -> float:
    return float(sum(abs(c) for k, c in u.items() if k < lo or k > hi))


def window_add(
    u: LaurentWindow,
    v: LaurentWindow,
    alpha: Fraction | int = 1,
    beta: Fraction | int = 1,
) -> LaurentWindow:
    """Coefficientwise ``alpha*u + beta*v`` on the common index range.

    Args:
        u: First operand.
        v: Second operand.
        alpha: Weight of ``u``.
        beta: Weight of ``v``.

    Returns:
        A window over the intersection of both ranges, exact iff both inputs are.

    Raises:
        RangeError: If the two ranges do not intersect.
    """
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    lo = max(u.lo, v.lo)
    hi = min(u.hi, v.hi)
    if lo > hi:
        raise RangeError(
            f"windows [{u.lo}, {u.hi}] and [{v.lo}, {v.hi}] have no common index"
        )
    coeffs = tuple(
        alpha * u.coeffs[k - u.lo] + beta * v.coeffs[k - v.lo] for k in range(lo, hi + 1)
    )
    exact = u.exact and v.exact
    tail_bound = None
    if not exact:
        tail_bound = float(abs(alpha)) * (u.tail_bound or 0.0) + float(abs(beta)) * (
            v.tail_bound or 0.0
        )

    def _side_closed(closed_u: bool, closed_v: bool) -> bool:
        return (alpha == 0 or closed_u) and (beta == 0 or closed_v)

    lower_closed = _side_closed(u.lower_closed, v.lower_closed) and all(
        w.coeffs[k - w.lo] == 0 for w in (u, v) for k in range(w.lo, lo)
    )
    upper_closed = _side_closed(u.upper_closed, v.upper_closed) and all(
        w.coeffs[k - w.lo] == 0 for w in (u, v) for k in range(hi + 1, w.hi + 1)
    )
    tail_mass = None
    if u.tail_mass is not None and v.tail_mass is not None:
        tail_mass = float(abs(alpha)) * (u.tail_mass + _dropped_mass(u, lo, hi)) + float(
            abs(beta)
        ) * (v.tail_mass + _dropped_mass(v, lo, hi))
    return LaurentWindow(
        lo=lo,
        hi=hi,
        coeffs=coeffs,
        exact=exact,
        tail_bound=tail_bound,
        lower_closed=lower_closed,
        upper_closed=upper_closed,
        tail_mass=tail_mass,
    )


def window_shift(u: LaurentWindow, by: int = 1) -> LaurentWindow:
    """Coefficients of ``z**by * u(z)``; the default gives ``z u(z)``."""
    return LaurentWindow(
        lo=u.lo + by,
        hi=u.hi + by,
        coeffs=u.coeffs,
        exact=u.exact,
        tail_bound=u.tail_bound,
        lower_closed=u.lower_closed,
        upper_closed=u.upper_closed,
        tail_mass=u.tail_mass,
    )


def pad_window(u: LaurentWindow, lo: int, hi: int) -> LaurentWindow:
    """Widen ``u`` with explicit zeros so that it covers ``[lo, hi]``.

    Only closed sides can be padded: the zeros must be true coefficients.

    Raises:
        OutsideWindowError: If padding would extend an open side.
    """
    new_lo = min(lo, u.lo)
    new_hi = max(hi, u.hi)
    if new_lo < u.lo and not u.lower_closed:
        raise OutsideWindowError(new_lo, u.lo, u.hi)
    if new_hi > u.hi and not u.upper_closed:
        raise OutsideWindowError(new_hi, u.lo, u.hi)
    if new_lo == u.lo and new_hi == u.hi:
        return u
    coeffs = (_ZERO,) * (u.lo - new_lo) + u.coeffs + (_ZERO,) * (new_hi - u.hi)
    return LaurentWindow(
        lo=new_lo,
        hi=new_hi,
        coeffs=coeffs,
        exact=u.exact,
        tail_bound=u.tail_bound,
        lower_closed=u.lower_closed,
        upper_closed=u.upper_closed,
        tail_mass=u.tail_mass,
    )


def restrict_window(u: LaurentWindow, lo: int, hi: int) -> LaurentWindow:
    """Return the sub-window ``[lo, hi]`` of ``u``.

    Raises:
        RangeError: If ``lo > hi``.
        OutsideWindowError: If ``[lo, hi]`` is not inside ``u``.
    """
    if lo > hi:
        raise RangeError(f"empty range [{lo}, {hi}]")
    for k in (lo, hi):
        if not u.covers(k):
            raise OutsideWindowError(k, u.lo, u.hi)
    tail_mass = None if u.tail_mass is None else u.tail_mass + _dropped_mass(u, lo, hi)
    below_zero = all(c == 0 for k, c in u.items() if k < lo)
    above_zero = all(c == 0 for k, c in u.items() if k > hi)
    return LaurentWindow(
        lo=lo,
        hi=hi,
        coeffs=u.coeffs[lo - u.lo : hi - u.lo + 1],
        exact=u.exact,
        tail_bound=u.tail_bound,
        lower_closed=u.lower_closed and below_zero,
        upper_closed=u.upper_closed and above_zero,
        tail_mass=tail_mass,
    )


def _sup_all(w: LaurentWindow) -> float | None:
    """Bound on ``sup_k |w_k|`` over all indices, or ``None`` if unknown."""
    stored = w.abs_max() + (w.tail_bound or 0.0)
    if w.finite_support:
        return stored
    if w.tail_mass is None:
        return None
    return max(stored, w.tail_mass)


def window_mul(
    u: LaurentWindow,
    v: LaurentWindow,
    out_lo: int,
    out_hi: int,
) -> LaurentWindow:
    """Cauchy product ``c_n = sum_k u_k v_{n-k}`` on ``[out_lo, out_hi]``.

    Pairs ``(k, n-k)`` that fall outside a window contribute zero when the
    corresponding side is closed. Otherwise the side must declare a
    ``tail_mass``, the contribution is bounded instead of computed and the
    result is approximate.

    Raises:
        RangeError: If ``out_lo > out_hi``.
        InsufficientDataError: If a needed contribution is neither known to
            vanish nor bounded by a declared tail mass.
    """
    if out_lo > out_hi:
        raise RangeError(f"empty output range [{out_lo}, {out_hi}]")

    u_max = u.abs_max() + (u.tail_bound or 0.0)
    v_max = v.abs_max() + (v.tail_bound or 0.0)
    v_sup = _sup_all(v)
    coefficient_error = 0.0
    if not (u.exact and v.exact):
        eu = u.tail_bound or 0.0
        ev = v.tail_bound or 0.0
        u_l1 = u.abs_mass() + (u.tail_mass or 0.0)
        v_l1 = v.abs_mass() + (v.tail_mass or 0.0)
        coefficient_error = eu * v_l1 + ev * u_l1 + eu * ev * min(u.size, v.size)

    def _missing(condition: bool, closed: bool, mass: float | None, scale: float | None,
                 what: str, n: int) -> float:
        if not condition or closed:
            return 0.0
        if mass is None or scale is None:
            raise InsufficientDataError(
                f"coefficient {n} of the product needs {what} with no declared tail mass"
            )
        return mass * scale

    coeffs: list[Fraction] = []
    worst = 0.0
    for n in range(out_lo, out_hi + 1):
        total = _ZERO
        for k in range(max(u.lo, n - v.hi), min(u.hi, n - v.lo) + 1):
            total += u.coeffs[k - u.lo] * v.coeffs[n - k - v.lo]
        coeffs.append(total)

        bound = 0.0
        # k stored, n-k below / above v's window
        bound += _missing(
            max(u.lo, n - v.lo + 1) <= u.hi, v.lower_closed, v.tail_mass, u_max,
            "terms of the second factor below its window", n,
        )
        bound += _missing(
            u.lo <= min(u.hi, n - v.hi - 1), v.upper_closed, v.tail_mass, u_max,
            "terms of the second factor above its window", n,
        )
        # k below / above u's window; vanishes if every partner index is known zero
        below_needed = not (v.upper_closed and n - u.lo + 1 > v.hi)
        above_needed = not (v.lower_closed and n - u.hi - 1 < v.lo)
        bound += _missing(
            below_needed, u.lower_closed, u.tail_mass, v_sup,
            "terms of the first factor below its window", n,
        )
        bound += _missing(
            above_needed, u.upper_closed, u.tail_mass, v_sup,
            "terms of the first factor above its window", n,
        )
        worst = max(worst, bound)

    exact = u.exact and v.exact and worst == 0.0
    tail_bound = None if exact else worst + coefficient_error
    return LaurentWindow(
        lo=out_lo,
        hi=out_hi,
        coeffs=tuple(coeffs),
        exact=exact,
        tail_bound=tail_bound,
        lower_closed=u.lower_closed and v.lower_closed and out_lo <= u.lo + v.lo,
        upper_closed=u.upper_closed and v.upper_closed and out_hi >= u.hi + v.hi,
    )


def window_dilate(u: LaurentWindow, M: int) -> LaurentWindow:
    """Coefficients of ``u(z**M)``.

    Raises:
        DomainError: If ``M < 1``.
    """
    if M < 1:
        raise DomainError(f"dilation factor must be positive, got {M}")
    coeffs = [_ZERO] * ((u.hi - u.lo) * M + 1)
    for t, c in enumerate(u.coeffs):
        coeffs[t * M] = c
    return LaurentWindow(
        lo=u.lo * M,
        hi=u.hi * M,
        coeffs=tuple(coeffs),
        exact=u.exact,
        tail_bound=u.tail_bound,
        lower_closed=u.lower_closed,
        upper_closed=u.upper_closed,
        tail_mass=u.tail_mass,
    )


# -- coefficient splits ---------------------------------------------------------


def split_m_way(f: LaurentWindow, M: int) -> list[LaurentWindow]:
    """Split ``f(z) = sum_{n<M} z^n p_n(z^M)`` into the windows of ``p_0 .. p_{M-1}``.

    ``p_n`` has coefficient ``f_{kM+n}`` at index ``k``. A component whose range
    contains no stored index is the zero window when ``f`` has finite support.

    Raises:
        DomainError: If ``M < 1``.
        InsufficientDataError: If a component has no stored index and ``f`` is
            not a Laurent polynomial.
    """
    if M < 1:
        raise DomainError(f"split factor must be positive, got {M}")
    parts: list[LaurentWindow] = []
    for n in range(M):
        lo_c = -((n - f.lo) // M)
        hi_c = (f.hi - n) // M
        if lo_c > hi_c:
            if not f.finite_support:
                raise InsufficientDataError(
                    f"window [{f.lo}, {f.hi}] holds no coefficient of component {n} of {M}"
                )
            parts.append(LaurentWindow.polynomial([_ZERO], lo=lo_c))
            continue
        coeffs = tuple(f.coeffs[k * M + n - f.lo] for k in range(lo_c, hi_c + 1))
        parts.append(
            LaurentWindow(
                lo=lo_c,
                hi=hi_c,
                coeffs=coeffs,
                exact=f.exact,
                tail_bound=f.tail_bound,
                lower_closed=f.lower_closed,
                upper_closed=f.upper_closed,
                tail_mass=f.tail_mass,
            )
        )
    return parts


def split_even_odd(f: LaurentWindow) -> tuple[LaurentWindow, LaurentWindow]:
    """Return ``(p, q)`` with ``f(z) = q(z^2) + z p(z^2)``."""
    q, p = split_m_way(f, 2)
    return p, q


def merge_m_way(parts: Sequence[LaurentWindow]) -> LaurentWindow:
    """Reassemble ``f(z) = sum_n z^n p_n(z^M)`` from its ``M`` components.

    Raises:
        DomainError: If ``parts`` is empty.
        OutsideWindowError: If an index inside the merged range is missing
            from an open component.
    """
    M = len(parts)
    if M == 0:
        raise DomainError("need at least one component to merge")
    lo = min(part.lo * M + n for n, part in enumerate(parts))
    hi = max(part.hi * M + n for n, part in enumerate(parts))
    coeffs: list[Fraction] = []
    for index in range(lo, hi + 1):
        n = index % M
        k = index // M
        value = parts[n].known_value(k)
        if value is None:
            raise OutsideWindowError(k, parts[n].lo, parts[n].hi, f"p{n}")
        coeffs.append(value)
    exact = all(part.exact for part in parts)
    return LaurentWindow(
        lo=lo,
        hi=hi,
        coeffs=tuple(coeffs),
        exact=exact,
        tail_bound=None if exact else max(part.tail_bound or 0.0 for part in parts),
        lower_closed=all(part.lower_closed for part in parts),
        upper_closed=all(part.upper_closed for part in parts),
    )


# -- ratio profile ------------------------------------------------------------


@dataclass(frozen=True)
class RatioProfile:
    """Successive coefficient ratios ``a_k / a_{k+1}`` of a nonnegative window.

    Attributes:
        ratios: ``(k, a_k/a_{k+1})`` where defined; ``math.inf`` when only
            ``a_{k+1}`` vanishes.
        gaps: Indices of zero coefficients lying between nonzero ones.
        inner: Smallest defined ratio (inner annulus radius estimate).
        outer: Largest defined ratio (outer annulus radius estimate).
    """

    ratios: tuple[tuple[int, Fraction | float], ...]
    gaps: tuple[int, ...]
    inner: Fraction | float | None
    outer: Fraction | float | None

    @property
    def nondecreasing(self) -> bool:
        values = [r for _, r in self.ratios]
        return all(a <= b for a, b in zip(values, values[1:]))

    @property
    def has_gaps(self) -> bool:
        return bool(self.gaps)


def ratio_profile(u: LaurentWindow) -> RatioProfile:
    """Compute successive ratios, annulus estimates and gaps of ``u``.

    Raises:
        DomainError: If a coefficient is negative.
    """
    for k, c in u.items():
        if c < 0:
            raise DomainError(f"ratio profile needs nonnegative coefficients; f_{k} < 0")
    ratios: list[tuple[int, Fraction | float]] = []
    for k in range(u.lo, u.hi):
        a = u.coeffs[k - u.lo]
        b = u.coeffs[k + 1 - u.lo]
        if b > 0:
            ratios.append((k, a / b))
        elif a > 0:
            ratios.append((k, math.inf))
    nonzero = [k for k, c in u.items() if c != 0]
    gaps: tuple[int, ...] = ()
    if nonzero:
        gaps = tuple(k for k in range(nonzero[0], nonzero[-1] + 1) if u.coeffs[k - u.lo] == 0)
    values = [r for _, r in ratios]
    return RatioProfile(
        ratios=tuple(ratios),
        gaps=gaps,
        inner=min(values) if values else None,
        outer=max(values) if values else None,
    )


# -- product forms ----------------------------------------------------------------


class _Factor(Protocol):
    finite: bool
    degree: int
    radius: float

    def series(self, order: int) -> list[Fraction]: ...

    def value_at(self, r: float) -> float: ...


@dataclass(frozen=True)
class _PolyFactor:
    coeffs: tuple[Fraction, ...]
    dilation: int = 1
    finite: bool = field(default=True, init=False)
    radius: float = field(default=math.inf, init=False)

    @property
    def degree(self) -> int:
        return (len(self.coeffs) - 1) * self.dilation

    def series(self, order: int) -> list[Fraction]:
        out = [_ZERO] * (order + 1)
        for t, c in enumerate(self.coeffs):
            if t * self.dilation <= order:
                out[t * self.dilation] = c
        return out

    def value_at(self, r: float) -> float:
        return sum(float(c) * r ** (t * self.dilation) for t, c in enumerate(self.coeffs))


@dataclass(frozen=True)
class _ExpFactor:
    rate: Fraction
    dilation: int = 1
    finite: bool = field(default=False, init=False)
    degree: int = field(default=-1, init=False)
    radius: float = field(default=math.inf, init=False)

    def series(self, order: int) -> list[Fraction]:
        out = [_ZERO] * (order + 1)
        term = _ONE
        k = 0
        while k * self.dilation <= order:
            out[k * self.dilation] = term
            k += 1
            term = term * self.rate / k
        return out

    def value_at(self, r: float) -> float:
        try:
            return math.exp(float(self.rate) * r**self.dilation)
        except OverflowError:
            return math.inf


@dataclass(frozen=True)
class _PoleFactor:
    delta: Fraction
    dilation: int = 1
    finite: bool = field(default=False, init=False)
    degree: int = field(default=-1, init=False)

    @property
    def radius(self) -> float:
        return float(self.delta) ** (1.0 / self.dilation)

    def series(self, order: int) -> list[Fraction]:
        out = [_ZERO] * (order + 1)
        term = _ONE
        k = 0
        while k * self.dilation <= order:
            out[k * self.dilation] = term
            term = term / self.delta
            k += 1
        return out

    def value_at(self, r: float) -> float:
        x = r**self.dilation / float(self.delta)
        return math.inf if x >= 1 else 1.0 / (1.0 - x)


def _series_mul(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    out = [_ZERO] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x == 0:
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            if y:
                out[i + j] += x * y
    return out


def _side_series(factors: Sequence[_Factor], order: int) -> list[Fraction]:
    out = [_ONE] + [_ZERO] * order
    for factor in factors:
        out = _series_mul(out, factor.series(order), order)
    return out


def _side_value(factors: Sequence[_Factor], r: float) -> float:
    value = 1.0
    for factor in factors:
        value *= factor.value_at(r)
    return value


def _side_radius(factors: Sequence[_Factor]) -> float:
    return min((factor.radius for factor in factors), default=math.inf)


def _cauchy_radii(pos_radius: float, neg_radius: float) -> tuple[float, float]:
    """Pick ``r < R_pos`` and ``s < R_neg`` with ``r*s > 1``."""
    if math.isinf(pos_radius) and math.isinf(neg_radius):
        return 2.0, 2.0
    if math.isinf(neg_radius):
        r = pos_radius / 2.0
        return r, 4.0 / r
    if math.isinf(pos_radius):
        s = neg_radius / 2.0
        return 4.0 / s, s
    t = (1.0 + (pos_radius * neg_radius) ** -0.5) / 2.0
    return pos_radius * t, neg_radius * t


def _assemble(
    scale: Fraction,
    shift: int,
    pos: Sequence[_Factor],
    neg: Sequence[_Factor],
    out_lo: int,
    out_hi: int,
    exp_truncation: int,
) -> LaurentWindow:
    """Coefficients of ``scale * z**shift * P(z) * N(1/z)`` on ``[out_lo, out_hi]``."""
    if out_lo > out_hi:
        raise RangeError(f"empty output range [{out_lo}, {out_hi}]")
    if exp_truncation < 1:
        raise DomainError("exp_truncation must be a positive integer")
    lo_rel = out_lo - shift
    hi_rel = out_hi - shift
    pos_finite = all(f.finite for f in pos)
    neg_finite = all(f.finite for f in neg)
    pos_degree = sum(f.degree for f in pos) if pos_finite else None
    neg_degree = sum(f.degree for f in neg) if neg_finite else None

    # c_n = sum_{m >= 0} P_{n+m} N_m, finite when either side is a polynomial.
    tail_bound: float | None = None
    if neg_degree is not None:
        terms = neg_degree
    elif pos_degree is not None:
        terms = max(pos_degree - lo_rel, 0)
    else:
        terms = exp_truncation
    p_order = max(hi_rel + terms, 0)
    if pos_degree is not None:
        p_order = min(p_order, pos_degree)
    big_p = _side_series(pos, p_order)
    big_n = _side_series(neg, terms)

    coeffs: list[Fraction] = []
    for n in range(lo_rel, hi_rel + 1):
        total = _ZERO
        for m in range(max(0, -n), terms + 1):
            if n + m > p_order:
                break
            if big_n[m]:
                total += big_p[n + m] * big_n[m]
        coeffs.append(scale * total)

    exact = neg_degree is not None or pos_degree is not None
    if not exact:
        pos_radius = _side_radius(pos)
        neg_radius = _side_radius(neg)
        if pos_radius * neg_radius <= 1.0:
            raise DomainError(
                "poles on both sides leave no annulus of convergence "
                f"(radii {pos_radius:g} and 1/{neg_radius:g})"
            )
        r, s = _cauchy_radii(pos_radius, neg_radius)
        magnitude = float(scale) * _side_value(pos, r) * _side_value(neg, s)
        rs = r * s
        series_tail = rs ** -(exp_truncation + 1) / (1.0 - 1.0 / rs)
        tail_bound = max(magnitude * r ** (-n) * series_tail for n in range(lo_rel, hi_rel + 1))
        logger.debug(
            "two-sided product truncated after %d cross terms; tail bound %.3g",
            exp_truncation,
            tail_bound,
        )

    return LaurentWindow(
        lo=out_lo,
        hi=out_hi,
        coeffs=tuple(coeffs),
        exact=exact,
        tail_bound=tail_bound,
        lower_closed=neg_degree is not None and out_lo <= shift - neg_degree,
        upper_closed=pos_degree is not None and out_hi >= shift + pos_degree,
    )


def _factor_sides(
    spec: FactorSpec, dilation: int = 1
) -> tuple[list[_Factor], list[_Factor], int]:
    pos: list[_Factor] = []
    neg: list[_Factor] = []
    if spec.A > 0:
        pos.append(_ExpFactor(spec.A, dilation))
    if spec.A0 > 0:
        neg.append(_ExpFactor(spec.A0, dilation))
    pos.extend(_PolyFactor((_ONE, 1 / beta), dilation) for beta in spec.pos_zeros)
    neg.extend(_PolyFactor((_ONE, 1 / beta), dilation) for beta in spec.neg_zeros)
    pos.extend(_PoleFactor(delta, dilation) for delta in spec.pos_poles)
    neg.extend(_PoleFactor(delta, dilation) for delta in spec.neg_poles)
    shift = (spec.j + (1 if spec.zero_at_origin else 0)) * dilation
    return pos, neg, shift


def generate_product_form(
    spec: FactorSpec,
    out_lo: int,
    out_hi: int,
    exp_truncation: int = DEFAULT_EXP_TRUNCATION,
) -> LaurentWindow:
    """Laurent coefficients of the product described by ``spec``.

    The window is exact when the negative-power side is a polynomial
    (``A0 = 0`` and no negative-side poles) or the positive-power side is
    (``A = 0`` and no positive-side poles). Otherwise the two-sided sum is cut
    after ``exp_truncation`` cross terms and ``tail_bound`` comes from Cauchy
    estimates of both sides on circles inside the annulus of convergence.

    Raises:
        RangeError: If ``out_lo > out_hi``.
        DomainError: On an empty annulus of convergence or a nonpositive
            ``exp_truncation``.
    """
    pos, neg, shift = _factor_sides(spec)
    return _assemble(spec.C, shift, pos, neg, out_lo, out_hi, exp_truncation)


def _binomial_power(rate: Fraction, n: int) -> tuple[Fraction, ...]:
    """Coefficients of ``(1 + rate*w/n)**n``."""
    coeffs = [_ONE]
    for k in range(1, n + 1):
        coeffs.append(coeffs[-1] * (n - k + 1) / k * rate / n)
    return tuple(coeffs)


def generate_stable_form(
    spec: StableFormSpec,
    out_lo: int,
    out_hi: int,
    exp_truncation: int = DEFAULT_EXP_TRUNCATION,
    approximant_degree: int | None = None,
) -> LaurentWindow:
    """Laurent coefficients of the stable-type product described by ``spec``.

    Args:
        spec: The factor description.
        out_lo: Lowest requested index.
        out_hi: Highest requested index.
        exp_truncation: Cross terms kept when both sides are infinite.
        approximant_degree: When set to ``n``, ``e^{Bz}`` and ``e^{B0/z}`` are
            replaced by ``(1 + Bz/n)**n`` and ``(1 + B0/(nz))**n``.

    Returns:
        The coefficient window, with the same exactness rule as
        :func:`generate_product_form`.
    """
    pos: list[_Factor] = []
    neg: list[_Factor] = []
    for rate, side in ((spec.B, pos), (spec.B0, neg)):
        if rate == 0:
            continue
        if approximant_degree is not None:
            if approximant_degree < 1:
                raise DomainError("approximant_degree must be positive")
            side.append(_PolyFactor(_binomial_power(rate, approximant_degree)))
        else:
            side.append(_ExpFactor(rate))
    pos.extend(_PolyFactor((_ONE, 1 / xi)) for xi in spec.real_zeros)
    neg.extend(_PolyFactor((_ONE, 1 / xi)) for xi in spec.neg_real_zeros)
    for pairs, side in ((spec.complex_zeros, pos), (spec.neg_complex_zeros, neg)):
        for re, im in pairs:
            modulus_sq = re * re + im * im
            side.append(_PolyFactor((_ONE, 2 * re / modulus_sq, 1 / modulus_sq)))
    scale = spec.C
    shift = spec.r
    if spec.g is not None:
        g_pos, g_neg, g_shift = _factor_sides(spec.g, dilation=2)
        pos.extend(g_pos)
        neg.extend(g_neg)
        shift += g_shift
        scale *= spec.g.C
    return _assemble(scale, shift, pos, neg, out_lo, out_hi, exp_truncation)
