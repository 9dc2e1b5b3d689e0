"""Exact real roots, interlacing chains, partial fractions and quasi-stability.

Polynomials are kept as ascending tuples of :class:`~fractions.Fraction` in
:class:`RationalPoly`. Euclidean work (gcd, square-free factorization, Sturm
chains, rational roots) is delegated to :mod:`sympy` over ``QQ``; Sturm chains
are evaluated back in exact ``Fraction`` arithmetic.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from sympy import QQ, Poly, Rational, Symbol

from ghurwitz.errors import DomainError, RangeError
from ghurwitz.laurent import FactorSpec
from ghurwitz.rational import format_rational

logger = logging.getLogger(__name__)

_Z = Symbol("z")
_ZERO = Fraction(0)
_ONE = Fraction(1)

#: Bisection steps allowed when certifying the sign of an irrational residue.
_MAX_SIGN_REFINEMENTS = 200
#: Shifts tried when a Routh array meets a zero pivot in a nonzero row.
_ROUTH_SHIFTS = (1, 2, 3)


# -- polynomials ---------------------------------------------------------------


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with rational coefficients in ascending powers.

    Trailing zero coefficients are dropped, so the zero polynomial has no
    coefficients and degree ``-1``.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = [Fraction(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def of(cls, *coeffs: Fraction | int) -> RationalPoly:
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def from_roots(cls, roots: Iterable[Fraction | int], leading: Fraction | int = 1) -> RationalPoly:
        """``leading * prod(z - r)``."""
        poly = cls.of(leading)
        for r in roots:
            poly = poly * cls.of(-Fraction(r), 1)
        return poly

    @classmethod
    def from_sympy(cls, poly: Poly) -> RationalPoly:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        return cls(tuple(coeffs))

    def to_sympy(self) -> Poly:
        if self.is_zero:
            return Poly(0, _Z, domain=QQ)
        return Poly(
            [Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)],
            _Z,
            domain=QQ,
        )

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def __call__(self, x: Fraction | complex | float) -> Fraction | complex | float:
        total: Fraction | complex | float = _ZERO
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def at(self, x: Fraction) -> Fraction:
        """Exact value at a rational point."""
        total = _ZERO
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def __mul__(self, other: RationalPoly) -> RationalPoly:
        if self.is_zero or other.is_zero:
            return RationalPoly(())
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(tuple(out))

    def __add__(self, other: RationalPoly) -> RationalPoly:
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (_ZERO,) * (size - len(self.coeffs))
        b = other.coeffs + (_ZERO,) * (size - len(other.coeffs))
        return RationalPoly(tuple(x + y for x, y in zip(a, b)))

    def scale(self, factor: Fraction | int) -> RationalPoly:
        return RationalPoly(tuple(c * factor for c in self.coeffs))

    def derivative(self) -> RationalPoly:
        return RationalPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def reflect(self) -> RationalPoly:
        """``f(-z)``."""
        return RationalPoly(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def shift_power(self, k: int) -> RationalPoly:
        """``z**k * f(z)`` for ``k >= 0``."""
        return RationalPoly((_ZERO,) * k + self.coeffs)

    def strip_z(self) -> tuple[int, RationalPoly]:
        """Split off the largest power of ``z``: returns ``(k, f / z**k)``."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return k, RationalPoly(self.coeffs[k:])

    def gcd(self, other: RationalPoly) -> RationalPoly:
        return RationalPoly.from_sympy(self.to_sympy().gcd(other.to_sympy()))

    def exquo(self, other: RationalPoly) -> RationalPoly:
        """Exact quotient; ``other`` must divide ``self``."""
        return RationalPoly.from_sympy(self.to_sympy().exquo(other.to_sympy()))

    def root_bound(self) -> Fraction:
        """Cauchy bound: every root has modulus below this value."""
        lead = abs(self.leading)
        return 1 + max((abs(c) / lead for c in self.coeffs[:-1]), default=_ZERO)

    def to_dict(self) -> dict[str, object]:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}


def hurwitz_split(f: RationalPoly) -> tuple[RationalPoly, RationalPoly]:
    """Return ``(p, q)`` with ``f(z) = q(z^2) + z p(z^2)``."""
    return RationalPoly(f.coeffs[1::2]), RationalPoly(f.coeffs[0::2])


# -- Sturm isolation -----------------------------------------------------------


@dataclass(frozen=True)
class RootInterval:
    """A distinct real root in ``(lo, hi]``, or exactly ``lo`` when ``lo == hi``."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def to_dict(self) -> dict[str, object]:
        value: object = (
            format_rational(self.lo)
            if self.exact
            else [format_rational(self.lo), format_rational(self.hi)]
        )
        return {"value": value, "multiplicity": self.multiplicity}


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint isolating intervals sorted left to right."""

    intervals: tuple[RootInterval, ...]

    @property
    def distinct(self) -> int:
        return len(self.intervals)

    @property
    def total(self) -> int:
        return sum(iv.multiplicity for iv in self.intervals)


class _SturmChain:
    """Sturm chain of a square-free polynomial, evaluated exactly."""

    def __init__(self, squarefree: RationalPoly) -> None:
        self.poly = squarefree
        self.chain = [RationalPoly.from_sympy(s) for s in squarefree.to_sympy().sturm()]

    def variations(self, x: Fraction) -> int:
        signs = [v for v in (s.at(x) for s in self.chain) if v != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))

    def count(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct roots in ``(lo, hi]``."""
        return self.variations(lo) - self.variations(hi)

    def refine(self, interval: RootInterval) -> RootInterval:
        """Halve an isolating interval, keeping the half holding the root."""
        if interval.exact:
            return interval
        mid = interval.midpoint
        if self.poly.at(mid) == 0:
            return RootInterval(mid, mid, interval.multiplicity)
        if self.count(interval.lo, mid) == 1:
            return RootInterval(interval.lo, mid, interval.multiplicity)
        return RootInterval(mid, interval.hi, interval.multiplicity)


def _squarefree(p: RationalPoly) -> RationalPoly:
    return p.exquo(p.gcd(p.derivative())) if p.degree > 0 else p


def _sqf_factors(p: RationalPoly) -> list[tuple[RationalPoly, int]]:
    _, factors = p.to_sympy().sqf_list()
    return [(RationalPoly.from_sympy(f), m) for f, m in factors]


def _isolate(chain: _SturmChain, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    found: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = chain.count(a, b)
        if n == 0:
            continue
        if n == 1:
            found.append((b, b) if chain.poly.at(b) == 0 else (a, b))
            continue
        mid = (a + b) / 2
        stack.append((mid, b))
        stack.append((a, mid))
    return sorted(found)


def sturm_isolate(p: RationalPoly, lo: Fraction | int, hi: Fraction | int) -> RootIsolation:
    """Isolate the distinct real roots of ``p`` in ``(lo, hi]``.

    The square-free part ``p / gcd(p, p')`` is isolated by bisection on Sturm
    sign variations; multiplicities come from the square-free factorization.

    Raises:
        DomainError: If ``p`` is the zero polynomial.
        RangeError: If ``lo >= hi``.
    """
    if p.is_zero:
        raise DomainError("cannot isolate the roots of the zero polynomial")
    lo = Fraction(lo)
    hi = Fraction(hi)
    if lo >= hi:
        raise RangeError(f"isolation interval ({lo}, {hi}] is empty")
    if p.degree == 0:
        return RootIsolation(())
    chain = _SturmChain(_squarefree(p))
    factor_chains = [(_SturmChain(f), m) for f, m in _sqf_factors(p) if f.degree > 0]
    intervals = []
    for a, b in _isolate(chain, lo, hi):
        if a == b:
            mult = next(m for c, m in factor_chains if c.poly.at(a) == 0)
        else:
            mult = next(m for c, m in factor_chains if c.count(a, b) == 1)
        intervals.append(RootInterval(a, b, mult))
    return RootIsolation(tuple(intervals))


def isolate_real_roots(p: RationalPoly) -> RootIsolation:
    """Isolate every real root of ``p``."""
    bound = p.root_bound() if p.degree > 0 else _ONE
    return sturm_isolate(p, -bound - 1, bound)


def refine_interval(p: RationalPoly, interval: RootInterval, max_width: Fraction) -> RootInterval:
    """Refine an isolating interval of ``p`` until its width is at most ``max_width``."""
    chain = _SturmChain(_squarefree(p))
    while interval.width > max_width:
        interval = chain.refine(interval)
    return interval


# -- interlacing ----------------------------------------------------------------


@dataclass(frozen=True)
class ChainLink:
    """One zero or pole of ``F``, located by the magnitude ``[lo, hi]`` of its root."""

    kind: Literal["zero", "pole"]
    side: Literal["pos", "neg"]
    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def to_dict(self) -> dict[str, object]:
        value: object = (
            format_rational(self.lo)
            if self.exact
            else [format_rational(self.lo), format_rational(self.hi)]
        )
        return {"kind": self.kind, "side": self.side, "value": value}


@dataclass(frozen=True)
class SVerdict:
    """Structural S-function verdict for a ratio ``F = q / p``.

    Attributes:
        is_s_function: Whether the zeros and poles form the required chain.
        chain: Zeros (of ``q``) and poles (of ``p``) ordered by magnitude.
        violation: Why the chain fails, when it does.
        witness: The offending link, when one can be named.
    """

    is_s_function: bool
    chain: tuple[ChainLink, ...] = ()
    violation: str | None = None
    witness: ChainLink | None = None

    def to_dict(self) -> dict[str, object]:
        return {
            "is_s_function": self.is_s_function,
            "chain": [link.to_dict() for link in self.chain],
            "violation": self.violation,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def _real_nonpositive_simple(
    poly: RationalPoly, kind: Literal["zero", "pole"]
) -> tuple[list[RootInterval], SVerdict | None]:
    if poly.degree <= 0:
        return [], None
    bound = poly.root_bound()
    positive = sturm_isolate(poly, 0, bound)
    if positive.distinct:
        iv = positive.intervals[0]
        link = ChainLink(kind, "pos", iv.lo, iv.hi)
        return [], SVerdict(False, violation=f"{kind} at a positive real point", witness=link)
    roots = sturm_isolate(poly, -bound - 1, 0)
    if roots.total != poly.degree:
        return [], SVerdict(False, violation=f"{kind}s include nonreal points")
    for iv in roots.intervals:
        if iv.multiplicity > 1:
            link = ChainLink(kind, "pos", -iv.hi, -iv.lo)
            return [], SVerdict(False, violation=f"multiple {kind} of order {iv.multiplicity}", witness=link)
    return list(roots.intervals), None


def _separate(
    tagged: list[tuple[str, RootInterval]], chains: dict[str, _SturmChain]
) -> list[tuple[str, RootInterval]]:
    """Refine intervals of distinct roots until they are pairwise ordered."""
    items = list(tagged)
    while True:
        items.sort(key=lambda t: (t[1].lo, t[1].hi))
        clash = None
        for index in range(len(items) - 1):
            a = items[index][1]
            b = items[index + 1][1]
            if a.hi > b.lo or (a.exact and b.exact and a.lo == b.lo):
                clash = index
                break
        if clash is None:
            return items
        left, right = items[clash], items[clash + 1]
        target = clash if left[1].width >= right[1].width else clash + 1
        tag, iv = items[target]
        items[target] = (tag, chains[tag].refine(iv))


def _alternation(chain: Sequence[ChainLink]) -> SVerdict:
    for index, link in enumerate(chain):
        expected = "zero" if index % 2 == 0 else "pole"
        if link.kind != expected:
            reason = (
                "chain starts with a pole"
                if index == 0
                else f"two consecutive {link.kind}s at chain position {index}"
            )
            return SVerdict(False, tuple(chain), reason, link)
    return SVerdict(True, tuple(chain))


def check_interlacing(pz: RationalPoly, qz: RationalPoly) -> SVerdict:
    """Decide whether ``F = q / p`` has the interlacing form of an S-function.

    Common factors are cancelled first. Then all zeros and poles must be
    real, nonpositive and simple, the leading coefficients must have the same
    sign, and ordered by magnitude the chain must read zero, pole, zero, ...
    starting with a zero of ``q`` (a zero at the origin is allowed).

    Raises:
        DomainError: If either polynomial is zero.
    """
    if pz.is_zero or qz.is_zero:
        raise DomainError("interlacing needs two nonzero polynomials")
    common = pz.gcd(qz)
    if common.degree > 0:
        logger.debug("cancelling a common factor of degree %d", common.degree)
        pz = pz.exquo(common)
        qz = qz.exquo(common)
    if pz.leading * qz.leading <= 0:
        return SVerdict(False, violation="leading coefficients of q and p differ in sign")

    q_roots, bad = _real_nonpositive_simple(qz, "zero")
    if bad is not None:
        return bad
    p_roots, bad = _real_nonpositive_simple(pz, "pole")
    if bad is not None:
        return bad

    chains = {"zero": _SturmChain(_squarefree(qz)), "pole": _SturmChain(_squarefree(pz))}
    tagged = [("zero", iv) for iv in q_roots] + [("pole", iv) for iv in p_roots]
    ordered = _separate(tagged, chains)
    chain = [
        ChainLink("zero" if tag == "zero" else "pole", "pos", -iv.hi, -iv.lo)
        for tag, iv in reversed(ordered)
    ]
    return _alternation(chain)


def reciprocal_instance(pz: RationalPoly, qz: RationalPoly) -> tuple[RationalPoly, RationalPoly]:
    """The ``(p, q)`` pair of ``z / F`` for ``F = q / p``: ``(q, z p)``."""
    return qz, pz.shift_power(1)


# -- two-sided chains -------------------------------------------------------------


@dataclass(frozen=True)
class ZeroSet:
    """Finite zero data of one factor of a two-sided product.

    ``pos`` holds ``beta`` for factors ``1 + z/beta``, ``neg`` holds ``beta``
    for factors ``1 + 1/(z beta)``; ``at_origin`` adds a factor ``z``.
    """

    pos: tuple[Fraction, ...] = ()
    neg: tuple[Fraction, ...] = ()
    at_origin: bool = False

    def __post_init__(self) -> None:
        for name in ("pos", "neg"):
            values = tuple(Fraction(v) for v in getattr(self, name))
            if any(v <= 0 for v in values):
                raise DomainError(f"{name} zeros must be strictly positive")
            object.__setattr__(self, name, values)


def _origin_order(p_zeros: ZeroSet, q_zeros: ZeroSet, j: int = 0) -> int:
    """Net power of ``z`` left in ``q/p`` after clearing ``1/z`` factors."""
    return (
        len(p_zeros.neg)
        - len(q_zeros.neg)
        + int(q_zeros.at_origin)
        - int(p_zeros.at_origin)
        + j
    )


def laurent_to_polynomials(
    p_zeros: ZeroSet, q_zeros: ZeroSet, j: int = 0
) -> tuple[RationalPoly, RationalPoly]:
    """Polynomials ``(P, Q)`` with ``z^j q/p = c Q/P`` for a positive constant ``c``.

    Each factor ``1 + 1/(z beta)`` becomes ``z + 1/beta`` and the powers of
    ``z`` that this frees are collected on one side.
    """

    def build(zeros: ZeroSet) -> RationalPoly:
        poly = RationalPoly.of(1)
        for beta in zeros.pos:
            poly = poly * RationalPoly.of(1, 1 / beta)
        for beta in zeros.neg:
            poly = poly * RationalPoly.of(1 / beta, 1)
        return poly

    order = _origin_order(p_zeros, q_zeros, j)
    big_p = build(p_zeros).shift_power(max(-order, 0))
    big_q = build(q_zeros).shift_power(max(order, 0))
    return big_p, big_q


def laurent_interlacing_check(p_zeros: ZeroSet, q_zeros: ZeroSet, j: int = 0) -> SVerdict:
    """Check the two-sided chain of ``z^j q/p`` for finite zero lists.

    The negative-side reciprocals ``1/beta`` must all lie below the positive
    side values, and the merged chain (origin, reciprocals, positive side)
    must alternate zero, pole, zero, ... starting with a zero. Equal values in
    ``q`` and ``p`` cancel.
    """
    q_pos, p_pos = _cancel(q_zeros.pos, p_zeros.pos)
    q_neg, p_neg = _cancel(q_zeros.neg, p_zeros.neg)
    links: list[ChainLink] = []
    for kind, values in (("zero", q_neg), ("pole", p_neg)):
        links.extend(ChainLink(kind, "neg", 1 / v, 1 / v) for v in values)  # type: ignore[arg-type]
    positive: list[ChainLink] = []
    for kind, values in (("zero", q_pos), ("pole", p_pos)):
        positive.extend(ChainLink(kind, "pos", v, v) for v in values)  # type: ignore[arg-type]

    if links and positive:
        top = max(links, key=lambda link: link.lo)
        bottom = min(positive, key=lambda link: link.lo)
        if top.lo >= bottom.lo:
            return SVerdict(
                False,
                violation="negative-side reciprocal does not lie below the positive side",
                witness=top,
            )

    order = _origin_order(p_zeros, q_zeros, j)
    origin_kind: Literal["zero", "pole"] = "zero" if order > 0 else "pole"
    origin = [ChainLink(origin_kind, "pos", _ZERO, _ZERO)] * abs(order)
    if abs(order) > 1:
        return SVerdict(False, violation=f"{origin_kind} of order {abs(order)} at the origin", witness=origin[0])

    chain = origin + sorted(links, key=lambda link: link.lo) + sorted(positive, key=lambda link: link.lo)
    for a, b in zip(chain, chain[1:]):
        if a.lo == b.lo:
            return SVerdict(False, tuple(chain), "repeated value in the chain", b)
    return _alternation(chain)


def _cancel(
    zeros: tuple[Fraction, ...], poles: tuple[Fraction, ...]
) -> tuple[list[Fraction], list[Fraction]]:
    remaining = list(poles)
    kept: list[Fraction] = []
    for z in zeros:
        if z in remaining:
            remaining.remove(z)
        else:
            kept.append(z)
    return kept, remaining


def factor_ratio_verdict(q_spec: FactorSpec, p_spec: FactorSpec) -> SVerdict:
    """Structural verdict for the ratio of two product forms.

    Equal exponential parameters and common poles cancel. A remaining
    exponential factor rules out the S-function property (the numeric exhibit
    is :func:`ghurwitz.analytic.exhibit_negativity_exponential`). A remaining
    pole ``1/(1 - z/delta)`` of either product is a zero or pole of the ratio
    at ``+delta``, which is never allowed.
    """
    if q_spec.A != p_spec.A or q_spec.A0 != p_spec.A0:
        return SVerdict(False, violation="nontrivial exponential factor")
    for side in ("pos", "neg"):
        q_poles, p_poles = _cancel(
            getattr(q_spec, f"{side}_poles"), getattr(p_spec, f"{side}_poles")
        )
        leftover = q_poles + p_poles
        if leftover:
            kind: Literal["zero", "pole"] = "pole" if q_poles else "zero"
            value = leftover[0] if side == "pos" else 1 / leftover[0]
            return SVerdict(
                False,
                violation=f"{kind} on the positive real axis",
                witness=ChainLink(kind, side, value, value),  # type: ignore[arg-type]
            )
    return laurent_interlacing_check(
        ZeroSet(p_spec.pos_zeros, p_spec.neg_zeros, p_spec.zero_at_origin),
        ZeroSet(q_spec.pos_zeros, q_spec.neg_zeros, q_spec.zero_at_origin),
        j=q_spec.j - p_spec.j,
    )


# -- partial fractions -------------------------------------------------------------


@dataclass(frozen=True)
class ResidueTerm:
    """Term ``A z / (z + alpha)`` of the expansion.

    ``alpha`` and ``coefficient`` are exact when the pole is rational; otherwise
    ``pole`` isolates ``-alpha``, ``sign`` is certified and ``approx`` is a
    float estimate.
    """

    pole: RootInterval
    coefficient: Fraction | None
    sign: int
    approx: float

    @property
    def alpha(self) -> Fraction | None:
        return -self.pole.lo if self.pole.exact else None

    def to_dict(self) -> dict[str, object]:
        return {
            "pole": self.pole.to_dict(),
            "coefficient": None if self.coefficient is None else format_rational(self.coefficient),
            "sign": self.sign,
            "approx": self.approx,
        }


@dataclass(frozen=True)
class PartialFractions:
    """``F(z) = constant + slope * z + sum(A z / (z + alpha))``."""

    constant: Fraction
    slope: Fraction
    terms: tuple[ResidueTerm, ...] = field(default_factory=tuple)

    @property
    def all_positive(self) -> bool:
        return all(term.sign > 0 for term in self.terms)

    def to_dict(self) -> dict[str, object]:
        return {
            "constant": format_rational(self.constant),
            "slope": format_rational(self.slope),
            "terms": [term.to_dict() for term in self.terms],
        }


def _residue_at(C: Fraction, qz: RationalPoly, dp: RationalPoly, x: Fraction) -> Fraction:
    return C * qz.at(x) / (x * dp.at(x))


def partial_fraction_residues(
    C: Fraction | int, qz: RationalPoly, pz: RationalPoly
) -> PartialFractions:
    """Expand ``F = C q / p`` over the poles of ``p``.

    Each pole ``-alpha`` contributes ``A z/(z + alpha)`` with
    ``A = C q(-alpha) / (-alpha p'(-alpha))``. Rational poles give exact
    coefficients. At an irrational pole the interval is refined until neither
    ``q`` nor ``p'`` vanishes on it, which fixes the sign of ``A``.

    Raises:
        DomainError: If ``p`` and ``q`` share a root, if a pole is not simple,
            real and negative, or if ``deg q > deg p + 1``.
    """
    C = Fraction(C)
    if pz.is_zero or qz.is_zero:
        raise DomainError("partial fractions need nonzero polynomials")
    if pz.gcd(qz).degree > 0:
        raise DomainError("q and p share a root; divide it out first")
    if qz.degree > pz.degree + 1:
        raise DomainError("deg q exceeds deg p + 1")
    if pz.at(_ZERO) == 0:
        raise DomainError("p has a pole at the origin")
    bound = pz.root_bound() if pz.degree > 0 else _ONE
    if pz.degree > 0 and sturm_isolate(pz, 0, bound).distinct:
        raise DomainError("p has a positive real root")
    poles = sturm_isolate(pz, -bound - 1, 0) if pz.degree > 0 else RootIsolation(())
    if poles.total != pz.degree:
        raise DomainError("p has nonreal roots")
    if any(iv.multiplicity > 1 for iv in poles.intervals):
        raise DomainError("p has a multiple root")

    dp = pz.derivative()
    rational_roots = {
        Fraction(int(r.p), int(r.q)) for r in pz.to_sympy().ground_roots()
    }
    chain = _SturmChain(_squarefree(pz))
    terms: list[ResidueTerm] = []
    for iv in poles.intervals:
        exact_root = next((r for r in rational_roots if iv.lo < r <= iv.hi or r == iv.lo), None)
        if exact_root is not None:
            value = _residue_at(C, qz, dp, exact_root)
            terms.append(
                ResidueTerm(RootInterval(exact_root, exact_root), value, _sign(value), float(value))
            )
            continue
        terms.append(_certified_term(C, qz, dp, chain, iv))

    slope = C * qz.leading / pz.leading if qz.degree == pz.degree + 1 else _ZERO
    constant = C * qz.at(_ZERO) / pz.at(_ZERO)
    return PartialFractions(constant, slope, tuple(terms))


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _free_of_roots(poly: RationalPoly, iv: RootInterval) -> bool:
    if poly.degree <= 0:
        return True
    if poly.at(iv.lo) == 0:
        return False
    return sturm_isolate(poly, iv.lo, iv.hi).distinct == 0


def _certified_term(
    C: Fraction, qz: RationalPoly, dp: RationalPoly, chain: _SturmChain, iv: RootInterval
) -> ResidueTerm:
    for _ in range(_MAX_SIGN_REFINEMENTS):
        if _free_of_roots(qz, iv) and _free_of_roots(dp, iv):
            break
        iv = chain.refine(iv)
    else:
        raise DomainError("could not certify the residue sign at an irrational pole")
    sign = _sign(_residue_at(C, qz, dp, iv.midpoint))
    fine = iv
    while fine.width > Fraction(1, 10**12) and not fine.exact:
        fine = chain.refine(fine)
    x = fine.midpoint
    approx = float(_residue_at(C, qz, dp, x))
    return ResidueTerm(iv, None, sign, approx)


# -- quasi-stability -------------------------------------------------------------


@dataclass(frozen=True)
class RouthCertificate:
    """Evidence behind a quasi-stability decision.

    Attributes:
        method: ``"routh"``, ``"routh_shifted"`` (array of ``f(z)(z + shift)``)
            or ``"symmetric_split"``.
        array: Routh rows, highest power first.
        sign_changes: Sign changes in the first column.
        zeros_at_origin: Power of ``z`` removed before the test.
        shift: Shift used by ``"routh_shifted"``.
        failing_row: First row with a sign change, if any.
        detail: Free-form note for the symmetric split.
    """

    method: Literal["routh", "routh_shifted", "symmetric_split"]
    array: tuple[tuple[Fraction, ...], ...] = ()
    sign_changes: int = 0
    zeros_at_origin: int = 0
    shift: int | None = None
    failing_row: int | None = None
    detail: str | None = None

    def to_dict(self) -> dict[str, object]:
        return {
            "method": self.method,
            "array": [[format_rational(x) for x in row] for row in self.array],
            "sign_changes": self.sign_changes,
            "zeros_at_origin": self.zeros_at_origin,
            "shift": self.shift,
            "failing_row": self.failing_row,
            "detail": self.detail,
        }


def _routh_array(f: RationalPoly) -> list[list[Fraction]] | None:
    """Routh array of ``f`` with the auxiliary-derivative rule; ``None`` on a zero pivot."""
    desc = list(reversed(f.coeffs))
    n = f.degree
    width = (n + 2) // 2
    first = desc[0::2] + [_ZERO] * (width - len(desc[0::2]))
    second = desc[1::2] + [_ZERO] * (width - len(desc[1::2]))
    rows = [first, second]

    def settle(index: int) -> bool:
        row = rows[index]
        if all(x == 0 for x in row):
            above = rows[index - 1]
            degree = n - index + 1
            rows[index] = [
                (degree - 2 * t) * above[t] if degree - 2 * t > 0 else _ZERO for t in range(width)
            ]
            logger.debug("zero row at s^%d replaced by auxiliary derivative", n - index)
        return rows[index][0] != 0

    while len(rows) < n + 1:
        if not settle(len(rows) - 1):
            return None
        prev2, prev = rows[-2], rows[-1]
        rows.append(
            [
                (prev[0] * prev2[t + 1] - prev2[0] * prev[t + 1]) / prev[0]
                for t in range(width - 1)
            ]
            + [_ZERO]
        )
    if not settle(len(rows) - 1):
        return None
    return rows[: n + 1]


def _sign_changes(rows: list[list[Fraction]]) -> tuple[int, int | None]:
    column = [row[0] for row in rows]
    changes = 0
    first_bad = None
    for index, (a, b) in enumerate(zip(column, column[1:])):
        if (a < 0) != (b < 0):
            changes += 1
            if first_bad is None:
                first_bad = index + 1
    return changes, first_bad


def _routh_decide(f: RationalPoly) -> tuple[bool, RouthCertificate] | None:
    if f.degree <= 0:
        return True, RouthCertificate("routh")
    rows = _routh_array(f)
    method: Literal["routh", "routh_shifted"] = "routh"
    shift: int | None = None
    if rows is None:
        for a in _ROUTH_SHIFTS:
            rows = _routh_array(f * RationalPoly.of(a, 1))
            if rows is not None:
                method, shift = "routh_shifted", a
                break
    if rows is None:
        return None
    changes, failing = _sign_changes(rows)
    cert = RouthCertificate(
        method,
        tuple(tuple(row) for row in rows),
        changes,
        shift=shift,
        failing_row=failing,
    )
    return changes == 0, cert


def _even_part_quasi_stable(g: RationalPoly) -> bool:
    """``g(z) = u(z^2)`` has no roots in the open right half-plane iff ``u``'s roots are real and ``<= 0``."""
    u = RationalPoly(g.coeffs[0::2])
    if u.degree <= 0:
        return True
    bound = u.root_bound()
    if sturm_isolate(u, 0, bound).distinct:
        return False
    return sturm_isolate(u, -bound - 1, 0).total == u.degree


def routh_quasi_stability(f: RationalPoly) -> tuple[bool, RouthCertificate]:
    """Decide whether ``f`` has no roots with positive real part.

    Roots on the imaginary axis, including the origin, are allowed. The Routh
    array handles all-zero rows by differentiating the auxiliary polynomial;
    a zero pivot in a nonzero row restarts the test on ``f(z)(z + a)``. If
    that keeps failing, ``f`` is split as ``g h`` with ``g = gcd(f(z), f(-z))``.

    Raises:
        DomainError: If ``f`` is the zero polynomial.
    """
    if f.is_zero:
        raise DomainError("quasi-stability is undefined for the zero polynomial")
    k, core = f.strip_z()
    if core.leading < 0:
        core = core.scale(-1)
    decided = _routh_decide(core)
    if decided is not None:
        stable, cert = decided
        return stable, RouthCertificate(
            cert.method, cert.array, cert.sign_changes, k, cert.shift, cert.failing_row
        )

    g = core.gcd(core.reflect())
    h = core.exquo(g)
    if h.leading < 0:
        h = h.scale(-1)
    h_decided = _routh_decide(h)
    if h_decided is None:
        raise DomainError("Routh test failed on the part without symmetric roots")
    h_stable, h_cert = h_decided
    g_stable = _even_part_quasi_stable(g)
    return h_stable and g_stable, RouthCertificate(
        "symmetric_split",
        h_cert.array,
        h_cert.sign_changes,
        k,
        failing_row=h_cert.failing_row,
        detail=f"symmetric factor of degree {g.degree} "
        + ("has roots only on the imaginary axis" if g_stable else "has roots off the axis"),
    )
