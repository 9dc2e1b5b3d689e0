"""Seeded instance generators for the harness suites.

Every generator takes a :class:`random.Random` and consumes it in a fixed
order, so a seed fixes the whole instance list. Chain values are rationals in
``(0, 8]`` with denominators from :data:`DENOMINATORS`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Literal

from ghurwitz.laurent import FactorSpec, LaurentWindow, StableFormSpec
from ghurwitz.realroots import RationalPoly

#: Denominators used for generated chain values.
DENOMINATORS: tuple[int, ...] = (1, 2, 3, 4, 8)
#: Longest zero/pole chain of a generated instance.
MAX_CHAIN = 5

Kind = Literal["zero", "pole"]
Mutation = Literal["swap", "relabel", "positive_root"]


def random_rational(rng: random.Random, top: int = 8) -> Fraction:
    """A rational in ``(0, top]``."""
    den = rng.choice(DENOMINATORS)
    return Fraction(rng.randint(1, top * den), den)


def distinct_values(rng: random.Random, count: int, top: int = 8) -> list[Fraction]:
    """``count`` distinct sorted rationals in ``(0, top]``."""
    values: set[Fraction] = set()
    while len(values) < count:
        values.add(random_rational(rng, top))
    return sorted(values)


def _linear(m: Fraction) -> RationalPoly:
    return RationalPoly.of(m, 1)


def _product(roots: list[Fraction], scale: Fraction) -> RationalPoly:
    """``scale * prod(z + m)``."""
    poly = RationalPoly.of(scale)
    for m in roots:
        poly = poly * _linear(m)
    return poly


# -- one-sided pairs -------------------------------------------------------------


@dataclass(frozen=True)
class PolyPairInstance:
    """Polynomials ``p`` and ``q`` with ``F = q/p`` and a known verdict.

    ``chain`` lists the magnitudes of the roots (``-m`` is the root) with
    their kind; a negative magnitude marks a root at ``+|m|``.
    """

    label: str
    p: RationalPoly
    q: RationalPoly
    expected: bool
    chain: tuple[tuple[Fraction, Kind], ...] = ()
    mutation: Mutation | None = None

    def to_dict(self) -> dict[str, object]:
        return {"label": self.label, "p": self.p.to_dict(), "q": self.q.to_dict(),
                "mutation": self.mutation}


def _pair_from_chain(
    label: str,
    chain: list[tuple[Fraction, Kind]],
    scales: tuple[Fraction, Fraction],
    expected: bool,
    mutation: Mutation | None = None,
) -> PolyPairInstance:
    q_roots = [m for m, kind in chain if kind == "zero"]
    p_roots = [m for m, kind in chain if kind == "pole"]
    return PolyPairInstance(
        label=label,
        p=_product(p_roots, scales[0]),
        q=_product(q_roots, scales[1]),
        expected=expected,
        chain=tuple(chain),
        mutation=mutation,
    )


def interlacing_chain(rng: random.Random, max_degree: int) -> list[tuple[Fraction, Kind]]:
    """Alternating chain zero, pole, zero, ... of increasing magnitudes."""
    length = rng.randint(1, max(1, min(MAX_CHAIN, max_degree)))
    values = distinct_values(rng, length)
    if rng.random() < 0.2:
        values = [Fraction(0), *values[: length - 1]]
    return [(m, "zero" if k % 2 == 0 else "pole") for k, m in enumerate(values)]


def interlacing_pair(rng: random.Random, index: int, max_degree: int) -> PolyPairInstance:
    """An interlacing pair: ``q/p`` is an S-function by construction."""
    chain = interlacing_chain(rng, max_degree)
    scales = (random_rational(rng, 4), random_rational(rng, 4))
    return _pair_from_chain(f"interlacing-{index}", chain, scales, expected=True)


def mutated_pair(rng: random.Random, index: int, max_degree: int) -> PolyPairInstance:
    """A pair whose zeros do not interlace, derived from an interlacing one.

    The mutation keeps ``p(0) != 0``: a zero at the origin is never moved
    into ``p``.
    """
    chain = interlacing_chain(rng, max_degree)
    scales = (random_rational(rng, 4), random_rational(rng, 4))
    has_origin = chain[0][0] == 0
    options: list[Mutation] = ["relabel", "positive_root"]
    if not has_origin:
        options.append("swap")
    mutation = rng.choice(options)
    label = f"mutant-{index}"
    if mutation == "swap":
        flipped: list[tuple[Fraction, Kind]] = [
            (m, "pole" if kind == "zero" else "zero") for m, kind in chain
        ]
        return _pair_from_chain(label, flipped, (scales[1], scales[0]), False, mutation)
    positions = [k for k, (m, _) in enumerate(chain) if m != 0]
    if not positions:
        # A lone zero at the origin: relabelling would put it in p.
        chain.append((chain[-1][0] + 1, "zero"))
        return _pair_from_chain(label, chain, scales, False, "relabel")
    pos = rng.choice(positions)
    m, kind = chain[pos]
    if mutation == "relabel":
        chain[pos] = (m, "pole" if kind == "zero" else "zero")
    else:
        chain[pos] = (-m, kind)
    return _pair_from_chain(label, chain, scales, False, mutation)


def named_pairs() -> list[PolyPairInstance]:
    """The two hand-checked instances every equivalence run starts with."""
    return [
        PolyPairInstance(
            "counterexample-3-4-1",
            RationalPoly.of(3, 4, 1),
            RationalPoly.of(2, 1),
            expected=False,
        ),
        PolyPairInstance(
            "interlacing-8-6-1",
            RationalPoly.of(8, 6, 1),
            RationalPoly.of(3, 4, 1),
            expected=True,
        ),
    ]


def geometric_windows(
    ratio: Fraction = Fraction(2), scale: Fraction = Fraction(3), lo: int = -3, hi: int = 3
) -> tuple[LaurentWindow, LaurentWindow]:
    """``a_k = ratio**k`` and ``b_k = scale * a_k`` on ``[lo, hi]`` (open on both sides)."""
    a = [ratio**k for k in range(lo, hi + 1)]
    p = LaurentWindow(lo, hi, tuple(a))
    q = LaurentWindow(lo, hi, tuple(scale * x for x in a))
    return p, q


# -- two-sided pairs ---------------------------------------------------------------


@dataclass(frozen=True)
class TwoSidedInstance:
    """Laurent polynomials ``p`` and ``q`` given as product forms."""

    label: str
    p: FactorSpec
    q: FactorSpec
    expected: bool


def two_sided_pair(rng: random.Random, index: int, mutate: bool = False) -> TwoSidedInstance:
    """Two-sided interlacing pair; ``mutate`` swaps the roles of ``p`` and ``q``.

    The smallest magnitudes become negative-side zeros ``1 + 1/(z beta)`` with
    ``1/beta`` equal to the magnitude. ``j`` is chosen so that no power of
    ``z`` is left over in ``q/p``.
    """
    n_neg = rng.randint(1, 2)
    n_pos = rng.randint(0, 3)
    values = distinct_values(rng, n_neg + n_pos)
    kinds: list[Kind] = ["zero" if k % 2 == 0 else "pole" for k in range(len(values))]
    sides = ["neg"] * n_neg + ["pos"] * n_pos

    def collect(kind: Kind, side: str) -> tuple[Fraction, ...]:
        picked = [m for m, k, s in zip(values, kinds, sides) if k == kind and s == side]
        return tuple(1 / m for m in picked) if side == "neg" else tuple(picked)

    q_neg = collect("zero", "neg")
    p_neg = collect("pole", "neg")
    p = FactorSpec(C=random_rational(rng, 4), pos_zeros=collect("pole", "pos"), neg_zeros=p_neg)
    q = FactorSpec(
        C=random_rational(rng, 4),
        j=len(q_neg) - len(p_neg),
        pos_zeros=collect("zero", "pos"),
        neg_zeros=q_neg,
    )
    if not mutate:
        return TwoSidedInstance(f"two-sided-{index}", p, q, expected=True)
    return TwoSidedInstance(
        f"two-sided-mutant-{index}", replace(q, j=0), replace(p, j=p.j - q.j), expected=False
    )


# -- quasi-stability ------------------------------------------------------------------


@dataclass(frozen=True)
class StablePolyInstance:
    """A polynomial with a known quasi-stability verdict."""

    label: str
    f: RationalPoly
    expected: bool
    factors: tuple[str, ...] = ()


def _quadratic(re: Fraction, modulus_sq: Fraction) -> RationalPoly:
    """``z^2 + 2 re z + modulus_sq``."""
    return RationalPoly.of(modulus_sq, 2 * re, 1)


def stable_factors(rng: random.Random, max_degree: int) -> tuple[RationalPoly, list[str]]:
    """Product of ``(z + xi)``, ``(z^2 + 2 Re(g) z + |g|^2)`` and boundary factors."""
    target = rng.randint(1, max_degree)
    poly = RationalPoly.of(random_rational(rng, 4))
    names: list[str] = []
    while poly.degree < target:
        room = target - poly.degree
        choice = rng.random()
        if room >= 2 and choice < 0.4:
            re, im = random_rational(rng, 4), random_rational(rng, 4)
            poly = poly * _quadratic(re, re * re + im * im)
            names.append(f"complex({re},{im})")
        elif room >= 2 and choice < 0.5:
            c = random_rational(rng, 4)
            poly = poly * RationalPoly.of(c * c, 0, 1)
            names.append(f"imaginary({c})")
        elif choice < 0.58:
            poly = poly * RationalPoly.of(0, 1)
            names.append("origin")
        else:
            xi = random_rational(rng)
            poly = poly * _linear(xi)
            names.append(f"real({xi})")
    return poly, names


def quasi_stable_polynomial(rng: random.Random, index: int, max_degree: int) -> StablePolyInstance:
    poly, names = stable_factors(rng, max_degree)
    return StablePolyInstance(f"stable-{index}", poly, True, tuple(names))


def unstable_polynomial(rng: random.Random, index: int, max_degree: int) -> StablePolyInstance:
    """A stable product times one factor with a root in the open right half-plane."""
    if max_degree >= 3 and rng.random() < 0.5:
        re, im = random_rational(rng, 2), random_rational(rng, 4)
        bad = _quadratic(-re, re * re + im * im)
        name = f"unstable-complex({re},{im})"
        room = max_degree - 2
    else:
        xi = random_rational(rng)
        bad = RationalPoly.of(-xi, 1)
        name = f"unstable-real({xi})"
        room = max_degree - 1
    if room >= 1:
        poly, names = stable_factors(rng, room)
    else:
        poly, names = RationalPoly.of(1), []
    return StablePolyInstance(f"unstable-{index}", poly * bad, False, (*names, name))


def named_polynomials() -> list[StablePolyInstance]:
    return [
        StablePolyInstance("cubic-z+1-z2+z+1", RationalPoly.of(1, 2, 2, 1), True),
        StablePolyInstance("z2-z+1", RationalPoly.of(1, -1, 1), False),
        StablePolyInstance("z3+z", RationalPoly.of(0, 1, 0, 1), True),
    ]


@dataclass(frozen=True)
class StableLaurentInstance:
    """A two-sided series of the quasi-stable product type (negative side finite)."""

    label: str
    spec: StableFormSpec


def stable_laurent(rng: random.Random, index: int) -> StableLaurentInstance:
    """Product with negative-side real and complex zeros and an optional ``e^{Bz}``.

    The negative-power side is a polynomial in ``1/z``, so the series is
    generated exactly.
    """
    neg_real = tuple(distinct_values(rng, rng.randint(0, 2), 4))
    neg_complex = tuple(
        (random_rational(rng, 3), random_rational(rng, 3)) for _ in range(rng.randint(0, 1))
    )
    if not neg_real and not neg_complex:
        neg_real = (random_rational(rng, 4),)
    g = FactorSpec(pos_zeros=(random_rational(rng, 4),)) if rng.random() < 0.3 else None
    spec = StableFormSpec(
        C=random_rational(rng, 4),
        r=rng.randint(-1, 1),
        B=random_rational(rng, 2) if rng.random() < 0.5 else Fraction(0),
        real_zeros=tuple(distinct_values(rng, rng.randint(0, 2), 4)),
        neg_real_zeros=neg_real,
        complex_zeros=tuple(
            (random_rational(rng, 3), random_rational(rng, 3)) for _ in range(rng.randint(0, 1))
        ),
        neg_complex_zeros=neg_complex,
        g=g,
    )
    return StableLaurentInstance(f"stable-laurent-{index}", spec)


# -- sector ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SectorInstance:
    """A Laurent polynomial checked against the sector ``|arg z| < pi/M``."""

    label: str
    f: LaurentWindow


def _window_of(poly: RationalPoly, lo: int = 0) -> LaurentWindow:
    return LaurentWindow.polynomial(poly.coeffs or (Fraction(0),), lo)


def sector_instance(rng: random.Random, index: int, max_degree: int) -> SectorInstance:
    """Product of negative real roots and wide complex pairs, sometimes a positive root."""
    poly = RationalPoly.of(1)
    degree = rng.randint(1, max_degree)
    while poly.degree < degree:
        if degree - poly.degree >= 2 and rng.random() < 0.3:
            re, im = random_rational(rng, 4), random_rational(rng, 1)
            poly = poly * _quadratic(re, re * re + im * im)
        else:
            poly = poly * _linear(random_rational(rng, 4))
    if rng.random() < 0.2:
        poly = poly * RationalPoly.of(-random_rational(rng, 4), 1)
    return SectorInstance(f"sector-{index}", _window_of(poly, rng.randint(-2, 0)))


def named_sector_instances() -> list[SectorInstance]:
    binomial = RationalPoly.of(1)
    for _ in range(6):
        binomial = binomial * RationalPoly.of(1, 1)
    return [
        SectorInstance("binomial-6", _window_of(binomial)),
        SectorInstance("z-1", _window_of(RationalPoly.of(-1, 1))),
        SectorInstance("z3+1", _window_of(RationalPoly.of(1, 0, 0, 1))),
        SectorInstance("monomial-z5", LaurentWindow.polynomial([1], 5)),
    ]
