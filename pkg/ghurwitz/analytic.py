"""Floating-point falsifiers for the half-plane, modulus and sector properties.

Nothing in this module upgrades an exact verdict: sampling can only find
violations or add confidence. Samples are drawn from seeded
:func:`numpy.random.default_rng` generators with log-uniform radii, so every
report is reproducible from its seed.
"""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Literal, Protocol, Union

import numpy as np
import numpy.typing as npt

from ghurwitz.errors import ConvergenceError, DomainError, SamplingError
from ghurwitz.laurent import LaurentWindow, split_even_odd, split_m_way
from ghurwitz.realroots import RationalPoly

logger = logging.getLogger(__name__)

ComplexArray = npt.NDArray[np.complex128]
Region = Literal["upper", "right", "sector", "wedge", "ray"]

#: Default tolerance of the inequality checks.
DEFAULT_TOL = 1e-9
#: Default angular tolerance of the sector boundary.
DEFAULT_ANGULAR_TOL = 1e-9
#: Default relative residual accepted for an approximate root.
DEFAULT_ROOT_TOL = 1e-10

_RESAMPLE_ROUNDS = 8
_NEWTON_STEPS = 50
_EDGE = 1e-12


@dataclass(frozen=True)
class ComplexSampler:
    """Seeded sampler of points in a region of the complex plane.

    Attributes:
        region: ``"upper"`` (Im z > 0), ``"right"`` (Re z > 0), ``"sector"``
            (``|arg z| < angle``), ``"wedge"`` (``0 < arg z < angle``) or
            ``"ray"`` (``arg z = angle``).
        count: Number of points per draw.
        seed: Generator seed.
        r_min: Smallest radius.
        r_max: Largest radius.
        angle: Half-angle of the sector, opening of the wedge or direction of the ray.
    """

    region: Region = "upper"
    count: int = 1000
    seed: int = 0
    r_min: float = 1e-3
    r_max: float = 1e3
    angle: float = math.pi / 2

    def __post_init__(self) -> None:
        if self.count < 1:
            raise DomainError("sample count must be positive")
        if not 0 < self.r_min < self.r_max:
            raise DomainError("radius range must satisfy 0 < r_min < r_max")
        if self.region != "ray" and not 0 < self.angle <= math.pi:
            raise DomainError("sector angle must lie in (0, pi]")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def draw(self, rng: np.random.Generator, count: int | None = None) -> ComplexArray:
        """Draw ``count`` points strictly inside the region."""
        n = self.count if count is None else count
        radii = np.exp(rng.uniform(math.log(self.r_min), math.log(self.r_max), n))
        if self.region == "upper":
            lo, hi = 0.0, math.pi
        elif self.region == "right":
            lo, hi = -math.pi / 2, math.pi / 2
        elif self.region == "sector":
            lo, hi = -self.angle, self.angle
        elif self.region == "wedge":
            lo, hi = 0.0, self.angle
        else:
            lo = hi = self.angle
        if lo == hi:
            angles = np.full(n, lo)
        else:
            angles = np.clip(rng.uniform(lo, hi, n), lo + _EDGE, hi - _EDGE)
        return (radii * np.exp(1j * angles)).astype(np.complex128)


# -- evaluable functions -------------------------------------------------------


class ComplexFunction(Protocol):
    """Vectorized function with an additive error slack."""

    @property
    def slack(self) -> float: ...

    def __call__(self, z: ComplexArray) -> ComplexArray: ...


def _descending(poly: RationalPoly) -> npt.NDArray[np.float64]:
    if poly.is_zero:
        return np.zeros(1)
    return np.array([float(c) for c in reversed(poly.coeffs)])


@dataclass(frozen=True)
class RationalFunction:
    """``scale * num(z) / den(z)``; poles evaluate to NaN."""

    num: RationalPoly
    den: RationalPoly = field(default_factory=lambda: RationalPoly.of(1))
    scale: float = 1.0

    @property
    def slack(self) -> float:
        return 0.0

    def __call__(self, z: ComplexArray) -> ComplexArray:
        z = np.asarray(z, dtype=np.complex128)
        top = np.polyval(_descending(self.num), z)
        bottom = np.polyval(_descending(self.den), z)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = self.scale * top / bottom
        return np.where(bottom == 0, np.nan + 0j, out)


@dataclass(frozen=True)
class LaurentFunction:
    """Evaluates the stored coefficients of a window; the slack is its ``tail_bound``."""

    window: LaurentWindow

    @property
    def slack(self) -> float:
        return self.window.tail_bound or 0.0

    def __call__(self, z: ComplexArray) -> ComplexArray:
        z = np.asarray(z, dtype=np.complex128)
        desc = np.array([float(c) for c in reversed(self.window.coeffs)])
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            return np.polyval(desc, z) * z ** float(self.window.lo)


FunctionData = Union[ComplexFunction, RationalPoly, LaurentWindow]


def as_function(data: FunctionData) -> ComplexFunction:
    """Wrap polynomials and windows as evaluable functions."""
    if isinstance(data, RationalPoly):
        return RationalFunction(data)
    if isinstance(data, LaurentWindow):
        return LaurentFunction(data)
    return data


# -- reports --------------------------------------------------------------------


@dataclass(frozen=True)
class SampleReport:
    """Outcome of a sampled inequality.

    Attributes:
        passed: Whether every usable sample satisfied the inequality.
        worst_z: Sample with the smallest margin.
        worst_value: Function value reported at ``worst_z``.
        margin: Smallest margin; negative beyond ``-tol`` means a violation.
        samples: Number of usable points (random samples plus anchors).
        seed: Seed of the sampler.
        tol: Tolerance used.
        details: Check-specific extras.
    """

    passed: bool
    worst_z: complex
    worst_value: complex
    margin: float
    samples: int
    seed: int
    tol: float
    details: dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict[str, object]:
        data: dict[str, object] = {
            "pass": self.passed,
            "worst": {
                "z": [self.worst_z.real, self.worst_z.imag],
                "value": [self.worst_value.real, self.worst_value.imag],
            },
            "margin": self.margin,
            "samples": self.samples,
            "seed": self.seed,
            "tol": self.tol,
        }
        if self.details:
            data["details"] = dict(self.details)
        return data


Metric = Callable[[ComplexArray], tuple[ComplexArray, npt.NDArray[np.float64]]]


def _sampled_check(
    metric: Metric,
    sampler: ComplexSampler,
    tol: float,
    slack: float = 0.0,
    anchors: Sequence[complex] = (),
    details: dict[str, object] | None = None,
) -> SampleReport:
    """Evaluate ``metric`` on samples, redrawing points where it is undefined.

    ``metric`` returns the reported values and per-point margins; NaN margins
    mark unusable points (poles).
    """
    rng = sampler.rng()
    points = sampler.draw(rng)
    values, margins = metric(points)
    for _ in range(_RESAMPLE_ROUNDS):
        bad = ~np.isfinite(margins)
        if not bad.any():
            break
        fresh = sampler.draw(rng, int(bad.sum()))
        fresh_values, fresh_margins = metric(fresh)
        points[bad] = fresh
        values[bad] = fresh_values
        margins[bad] = fresh_margins
    if anchors:
        anchor_points = np.asarray(list(anchors), dtype=np.complex128)
        anchor_values, anchor_margins = metric(anchor_points)
        points = np.concatenate([points, anchor_points])
        values = np.concatenate([values, anchor_values])
        margins = np.concatenate([margins, anchor_margins])
    usable = np.isfinite(margins) | np.isneginf(margins)
    if not usable.any():
        raise SamplingError("every sample point hit a pole")
    points = points[usable]
    values = values[usable]
    margins = margins[usable]
    worst = int(np.argmin(margins))
    margin = float(margins[worst])
    return SampleReport(
        passed=margin >= -(tol + slack),
        worst_z=complex(points[worst]),
        worst_value=complex(values[worst]),
        margin=margin,
        samples=int(points.size),
        seed=sampler.seed,
        tol=tol,
        details=details or {},
    )


def sample_im_nonneg(
    F: FunctionData, sampler: ComplexSampler, tol: float = DEFAULT_TOL
) -> SampleReport:
    """Check ``Im z * Im F(z) >= -tol`` at sampled points.

    Raises:
        SamplingError: If every point is a pole of ``F``.
    """
    func = as_function(F)

    def metric(z: ComplexArray) -> tuple[ComplexArray, npt.NDArray[np.float64]]:
        values = func(z)
        return values, np.asarray(z.imag * values.imag, dtype=np.float64)

    return _sampled_check(metric, sampler, tol, func.slack)


def check_conjugate_symmetry(
    F: FunctionData, sampler: ComplexSampler, tol: float = DEFAULT_TOL
) -> SampleReport:
    """Check ``F(conj z) = conj F(z)`` up to a relative tolerance."""
    func = as_function(F)

    def metric(z: ComplexArray) -> tuple[ComplexArray, npt.NDArray[np.float64]]:
        values = func(z)
        mirrored = func(np.conj(z))
        gap = np.abs(mirrored - np.conj(values)) / np.maximum(1.0, np.abs(values))
        return values, np.asarray(-gap, dtype=np.float64)

    return _sampled_check(metric, sampler, tol, func.slack)


def check_modulus_inequality(
    h: RationalPoly | LaurentWindow,
    sampler: ComplexSampler,
    tol: float = DEFAULT_TOL,
    anchors: Sequence[complex] = (),
) -> SampleReport:
    """Check ``|h(-z)| <= (1 + tol) |h(z)|`` for ``Re z > 0``.

    The bound is evaluated directly and through the split
    ``|(q(z^2) - z p(z^2)) / (q(z^2) + z p(z^2))|``; both verdicts are
    reported in ``details``. Points where ``h(z)`` and ``h(-z)`` both vanish
    are dropped, while ``h(z) = 0`` alone is a violation.
    """
    window = (
        LaurentWindow.polynomial(h.coeffs or [0]) if isinstance(h, RationalPoly) else h
    )
    func = LaurentFunction(window)
    p_win, q_win = split_even_odd(window)
    p_func = LaurentFunction(p_win)
    q_func = LaurentFunction(q_win)

    def ratio(top: ComplexArray, bottom: ComplexArray) -> npt.NDArray[np.float64]:
        top_abs = np.abs(top)
        bottom_abs = np.abs(bottom)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = top_abs / bottom_abs
        out = np.where((bottom_abs == 0) & (top_abs > 0), np.inf, out)
        return np.where((bottom_abs == 0) & (top_abs == 0), np.nan, out)

    def direct(z: ComplexArray) -> tuple[ComplexArray, npt.NDArray[np.float64]]:
        r = ratio(func(-z), func(z))
        return r.astype(np.complex128), 1.0 - r

    def mobius(z: ComplexArray) -> tuple[ComplexArray, npt.NDArray[np.float64]]:
        zz = z * z
        odd = z * p_func(zz)
        even = q_func(zz)
        r = ratio(even - odd, even + odd)
        return r.astype(np.complex128), 1.0 - r

    right = ComplexSampler("right", sampler.count, sampler.seed, sampler.r_min, sampler.r_max)
    second = _sampled_check(mobius, right, tol, func.slack, anchors)
    report = _sampled_check(
        direct,
        right,
        tol,
        func.slack,
        anchors,
        details={"mobius_pass": second.passed, "mobius_margin": second.margin},
    )
    if report.passed != second.passed:
        logger.warning("direct and split modulus checks disagree (margins %g, %g)",
                       report.margin, second.margin)
    return report


def check_rhp_mapping(
    p: RationalPoly | LaurentWindow,
    q: RationalPoly | LaurentWindow,
    sampler: ComplexSampler,
    tol: float = DEFAULT_TOL,
    anchors: Sequence[complex] = (),
) -> SampleReport:
    """Check ``Re w(z) >= -tol`` for ``w(z) = z p(z^2) / q(z^2)`` and ``Re z > 0``.

    A vanishing ``q`` makes the check vacuous; it passes and is marked
    ``degenerate`` in ``details``.
    """
    q_window = q if isinstance(q, LaurentWindow) else None
    if (q_window is not None and q_window.is_zero) or (
        isinstance(q, RationalPoly) and q.is_zero
    ):
        return SampleReport(True, 0j, 0j, math.inf, 0, sampler.seed, tol, {"degenerate": True})
    p_func = as_function(p)
    q_func = as_function(q)

    def metric(z: ComplexArray) -> tuple[ComplexArray, npt.NDArray[np.float64]]:
        zz = z * z
        bottom = q_func(zz)
        with np.errstate(divide="ignore", invalid="ignore"):
            w = z * p_func(zz) / bottom
        w = np.where(bottom == 0, np.nan + 0j, w)
        return w, np.asarray(w.real, dtype=np.float64)

    right = ComplexSampler("right", sampler.count, sampler.seed, sampler.r_min, sampler.r_max)
    return _sampled_check(metric, right, tol, p_func.slack + q_func.slack, anchors)


def check_split_argument_bound(
    f: LaurentWindow,
    M: int,
    sampler: ComplexSampler | None = None,
    tol: float = DEFAULT_TOL,
) -> SampleReport:
    """Check ``(m-n) arg z - pi < arg(z^{m-n} p_m(z^M) / p_n(z^M)) <= (m-n) arg z``.

    Points are drawn from the wedge ``0 < arg z < pi/M`` and every pair
    ``0 <= n < m < M`` of nonzero components is tested. On the wedge the bound
    reduces to ``arg(p_m(u) / p_n(u))`` lying in ``(-pi, 0]`` for ``u = z^M``.
    """
    if M < 2:
        raise DomainError("the split argument bound needs M >= 2")
    sampler = sampler or ComplexSampler("wedge", angle=math.pi / M)
    if sampler.region != "wedge":
        sampler = ComplexSampler("wedge", sampler.count, sampler.seed, sampler.r_min,
                                 sampler.r_max, math.pi / M)
    parts = [LaurentFunction(part) for part in split_m_way(f, M)]
    pairs = [
        (m, n)
        for m in range(M)
        for n in range(m)
        if not parts[m].window.is_zero and not parts[n].window.is_zero
    ]

    def metric(z: ComplexArray) -> tuple[ComplexArray, npt.NDArray[np.float64]]:
        u = z**M
        worst = np.full(z.shape, np.inf)
        worst_value = np.zeros(z.shape, dtype=np.complex128)
        for m, n in pairs:
            with np.errstate(divide="ignore", invalid="ignore"):
                r = parts[m](u) / parts[n](u)
            margin = -np.angle(r)
            margin = np.where(np.isfinite(r), margin, np.nan)
            replace = ~(margin >= worst)
            worst = np.where(replace, margin, worst)
            worst_value = np.where(replace, r, worst_value)
        return worst_value, worst

    if not pairs:
        return SampleReport(True, 0j, 0j, math.inf, 0, sampler.seed, tol, {"pairs": 0})
    return _sampled_check(metric, sampler, tol, details={"pairs": len(pairs)})


# -- negativity exhibits --------------------------------------------------------------


@dataclass(frozen=True)
class NegativityExhibit:
    """A non-real point where a function takes a negative value."""

    z: complex
    value: complex

    def to_dict(self) -> dict[str, object]:
        return {"z": [self.z.real, self.z.imag], "value": [self.value.real, self.value.imag]}


def _value_or_one(F: FunctionData | None, z: complex) -> complex:
    if F is None:
        return 1 + 0j
    return complex(as_function(F)(np.asarray([z], dtype=np.complex128))[0])


def _bisect_imaginary(
    g: Callable[[float], complex], a: float, b: float, tol: float
) -> float | None:
    """Root of ``Im g`` on ``[a, b]`` where ``Re g < 0``, if the sign changes."""
    ga, gb = g(a), g(b)
    if not (np.isfinite(ga) and np.isfinite(gb)) or (ga.imag > 0) == (gb.imag > 0):
        return None
    for _ in range(200):
        mid = (a + b) / 2
        gm = g(mid)
        if abs(gm.imag) <= tol * max(1.0, abs(gm)):
            return mid if gm.real < 0 else None
        if (gm.imag > 0) == (ga.imag > 0):
            a, ga = mid, gm
        else:
            b = mid
    gm = g((a + b) / 2)
    return (a + b) / 2 if gm.real < 0 else None


def exhibit_negativity_exponential(
    A: float,
    A0: float,
    F: FunctionData | None = None,
    r_max: float = 100.0,
    power: float = 0.0,
    tol: float = DEFAULT_TOL,
    grid: int = 4096,
) -> NegativityExhibit | None:
    """Find ``z0 = i r`` with ``G(z0) < 0`` for ``G(z) = e^{Az + A0/z} z^power F(z)``.

    The phase of ``G(ir)`` is unwrapped along a logarithmic grid on
    ``(0, r_max]`` and anchored at ``r = 1``. The crossing of an odd multiple
    of ``pi`` closest to ``r = 1`` is refined by bisection on ``Im G``.

    Returns:
        The exhibit, or ``None`` when no crossing occurs below ``r_max``.

    Raises:
        DomainError: If ``A`` or ``A0`` is negative or both vanish.
    """
    if A < 0 or A0 < 0:
        raise DomainError("exponential parameters must be nonnegative")
    if A == 0 and A0 == 0:
        raise DomainError("need A > 0 or A0 > 0")

    def g(r: float) -> complex:
        z = 1j * r
        return cmath.exp(A * z + A0 / z) * (z**power if power else 1) * _value_or_one(F, z)

    r_min = min(1e-3, r_max / 10)
    radii = np.geomspace(r_min, r_max, grid)
    values = np.array([g(float(r)) for r in radii])
    finite = np.isfinite(values) & (values != 0)
    phase = np.unwrap(np.angle(np.where(finite, values, 1.0)))
    anchor = int(np.argmin(np.abs(np.log(radii))))
    phase = phase - 2 * math.pi * round((phase[anchor] - math.atan2(values[anchor].imag, values[anchor].real)) / (2 * math.pi))

    crossings = []
    for k in range(grid - 1):
        if not (finite[k] and finite[k + 1]):
            continue
        a = (phase[k] - math.pi) / (2 * math.pi)
        b = (phase[k + 1] - math.pi) / (2 * math.pi)
        if math.floor(a) != math.floor(b):
            crossings.append(k)
    crossings.sort(key=lambda k: abs(math.log(radii[k])))
    for k in crossings:
        r = _bisect_imaginary(g, float(radii[k]), float(radii[k + 1]), tol)
        if r is not None:
            logger.debug("argument of G crosses pi at r = %.6g", r)
            return NegativityExhibit(1j * r, g(r))
    return None


def exhibit_negativity_power(
    power: float,
    F: FunctionData | None = None,
    radii: Sequence[float] = (1.0, 0.1, 10.0, 0.01, 100.0, 0.001, 1000.0),
    tol: float = DEFAULT_TOL,
    steps: int = 4096,
) -> NegativityExhibit | None:
    """Find ``z0`` in the upper half-plane with ``z0^power F(z0) < 0``.

    Semicircles ``|z| = r`` are scanned in ``theta`` for a sign change of
    ``Im G`` with ``Re G < 0``, then refined by bisection.

    Raises:
        DomainError: If ``-1 <= power <= 0``.
    """
    if -1 <= power <= 0:
        raise DomainError("power must lie outside [-1, 0]")
    for radius in radii:

        def g(theta: float, radius: float = radius) -> complex:
            z = cmath.rect(radius, theta)
            return cmath.rect(radius**power, power * theta) * _value_or_one(F, z)

        thetas = np.linspace(_EDGE, math.pi - _EDGE, steps)
        values = [g(float(t)) for t in thetas]
        for k in range(steps - 1):
            a, b = values[k], values[k + 1]
            if (a.real < 0 or b.real < 0) and (a.imag > 0) != (b.imag > 0):
                theta = _bisect_imaginary(g, float(thetas[k]), float(thetas[k + 1]), tol)
                if theta is not None:
                    z0 = cmath.rect(radius, theta)
                    return NegativityExhibit(z0, g(theta))
    return None


# -- roots and sectors ---------------------------------------------------------------


@dataclass(frozen=True)
class RootReport:
    """Approximate roots with relative residuals ``|f(r)| / sum |a_k| |r|^k``."""

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)


def _coefficients(f: RationalPoly | LaurentWindow) -> list[float]:
    """Ascending float coefficients with all factors of ``z`` removed."""
    if isinstance(f, LaurentWindow):
        if not f.finite_support:
            raise DomainError("root finding needs a Laurent polynomial window")
        coeffs = [float(c) for c in f.coeffs]
    else:
        coeffs = [float(c) for c in f.coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if not coeffs:
        raise DomainError("cannot find the roots of the zero polynomial")
    return coeffs


def approximate_roots(f: RationalPoly | LaurentWindow, tol: float = DEFAULT_ROOT_TOL) -> RootReport:
    """All complex roots of ``f`` after clearing powers of ``z``.

    Companion-matrix eigenvalues (:func:`numpy.roots`) are polished by Newton
    steps.

    Raises:
        DomainError: If ``f`` is zero or an open window.
        ConvergenceError: If a residual stays above ``tol``.
    """
    ascending = _coefficients(f)
    if len(ascending) == 1:
        return RootReport((), ())
    desc = np.array(ascending[::-1])
    deriv = np.polyder(desc)
    magnitudes = np.abs(desc)
    roots = np.roots(desc).astype(np.complex128)
    for _ in range(_NEWTON_STEPS):
        slope = np.polyval(deriv, roots)
        step = np.where(slope != 0, np.polyval(desc, roots) / np.where(slope != 0, slope, 1), 0)
        candidate = roots - step
        better = np.abs(np.polyval(desc, candidate)) < np.abs(np.polyval(desc, roots))
        roots = np.where(better, candidate, roots)
        if not better.any():
            break
    scale = np.polyval(magnitudes, np.abs(roots))
    residuals = np.abs(np.polyval(desc, roots)) / np.where(scale > 0, scale, 1.0)
    if (residuals > tol).any():
        raise ConvergenceError(
            f"root residual {float(residuals.max()):.3g} exceeds tolerance {tol:g}",
            best=tuple(complex(r) for r in roots),
        )
    order = np.lexsort((roots.imag, roots.real))
    return RootReport(
        tuple(complex(r) for r in roots[order]),
        tuple(float(x) for x in residuals[order]),
    )


@dataclass(frozen=True)
class SectorReport:
    """Location of the roots of ``f`` relative to the sector ``|arg z| < pi/M``."""

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    min_abs_arg: float
    half_angle: float
    passed: bool

    def to_dict(self) -> dict[str, object]:
        return {
            "roots": [[r.real, r.imag] for r in self.roots],
            "min_abs_arg": self.min_abs_arg,
            "half_angle": self.half_angle,
            "pass": self.passed,
        }


def sector_check(
    f: LaurentWindow,
    M: int,
    angular_tol: float = DEFAULT_ANGULAR_TOL,
    tol: float = DEFAULT_ROOT_TOL,
) -> SectorReport:
    """Check that no root of the Laurent polynomial ``f`` lies in ``|arg z| < pi/M``.

    Roots on the boundary rays count as outside because the sector is open.

    Raises:
        DomainError: If ``M < 1`` or ``f`` does not have finite support.
    """
    if M < 1:
        raise DomainError(f"sector index M must be positive, got {M}")
    found = approximate_roots(f, tol)
    half_angle = math.pi / M
    min_abs_arg = min((abs(cmath.phase(r)) for r in found.roots), default=math.pi)
    return SectorReport(
        roots=found.roots,
        residuals=found.residuals,
        min_abs_arg=min_abs_arg,
        half_angle=half_angle,
        passed=min_abs_arg >= half_angle - angular_tol,
    )


def right_half_plane_roots(f: RationalPoly | LaurentWindow, threshold: float = 1e-6) -> list[complex]:
    """Approximate roots with ``Re z > threshold``, used as anchor points."""
    try:
        found = approximate_roots(f)
    except ConvergenceError as exc:
        found = RootReport(tuple(exc.best or ()), ())
    return [r for r in found.roots if r.real > threshold]
