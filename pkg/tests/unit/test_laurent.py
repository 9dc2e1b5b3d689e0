"""Unit tests for Laurent windows, their arithmetic and the product-form generators."""

import math
import random
from fractions import Fraction

import pytest

from ghurwitz.errors import DomainError, InsufficientDataError, OutsideWindowError, RangeError
from ghurwitz.laurent import (
    FactorSpec,
    LaurentWindow,
    StableFormSpec,
    generate_product_form,
    generate_stable_form,
    merge_m_way,
    pad_window,
    ratio_profile,
    restrict_window,
    split_even_odd,
    split_m_way,
    window_add,
    window_dilate,
    window_mul,
    window_shift,
)


def _values(w: LaurentWindow) -> list[Fraction]:
    return list(w.coeffs)


# -- windows -----------------------------------------------------------------------


class TestLaurentWindow:
    """Tests for the window type itself."""

    def test_from_coeffs_sets_range(self) -> None:
        w = LaurentWindow.from_coeffs([1, 2, 3], lo=-1)
        assert (w.lo, w.hi) == (-1, 1)
        assert w.exact
        assert not w.lower_closed and not w.upper_closed

    def test_polynomial_is_closed_with_zero_tail_mass(self) -> None:
        w = LaurentWindow.polynomial([3, 4, 1])
        assert w.finite_support
        assert w.tail_mass == 0.0

    def test_rationals_are_canonical(self) -> None:
        w = LaurentWindow.from_coeffs([Fraction(6, 8)])
        assert w.coeffs[0] == Fraction(3, 4)
        assert w.coeffs[0].denominator == 4

    def test_ill_ordered_range(self) -> None:
        with pytest.raises(RangeError):
            LaurentWindow(lo=2, hi=1, coeffs=())

    def test_length_mismatch(self) -> None:
        with pytest.raises(RangeError):
            LaurentWindow(lo=0, hi=2, coeffs=(Fraction(1),))

    def test_approximate_needs_tail_bound(self) -> None:
        with pytest.raises(DomainError):
            LaurentWindow(lo=0, hi=0, coeffs=(Fraction(1),), exact=False)

    def test_coefficient_outside_window_is_not_zero(self) -> None:
        w = LaurentWindow.polynomial([1, 1])
        with pytest.raises(OutsideWindowError) as excinfo:
            w.coefficient(5)
        assert excinfo.value.index == 5
        assert (excinfo.value.lo, excinfo.value.hi) == (0, 1)

    def test_known_value_respects_closed_sides(self) -> None:
        closed = LaurentWindow.polynomial([1, 1])
        open_ = LaurentWindow.from_coeffs([1, 1])
        assert closed.known_value(-3) == 0
        assert closed.known_value(7) == 0
        assert open_.known_value(-3) is None
        assert open_.known_value(1) == 1

    def test_is_zero(self) -> None:
        assert LaurentWindow.polynomial([0, 0]).is_zero
        assert not LaurentWindow.polynomial([0, 1]).is_zero

    def test_to_dict_uses_rational_strings(self) -> None:
        data = LaurentWindow.from_coeffs([Fraction(1, 2), 3], lo=-1).to_dict()
        assert data["coeffs"] == ["1/2", "3"]
        assert data["lo"] == -1
        assert data["exact"] is True


# -- arithmetic --------------------------------------------------------------------


class TestWindowAdd:
    """Tests for coefficientwise linear combinations."""

    def test_identity_case(self) -> None:
        one = LaurentWindow.from_coeffs([1])
        result = window_add(one, one, 1, 0)
        assert _values(result) == [1]

    def test_termwise_sum(self) -> None:
        exp_head = LaurentWindow.from_coeffs([1, 1, Fraction(1, 2)])
        linear = LaurentWindow.from_coeffs([1, 1, 0])
        assert _values(window_add(exp_head, linear)) == [2, 2, Fraction(1, 2)]

    def test_weighted_sum(self) -> None:
        p = LaurentWindow.from_coeffs([3, 4, 1])
        q = LaurentWindow.from_coeffs([2, 1, 0])
        assert _values(window_add(p, q, 1, 2)) == [7, 6, 1]

    def test_intersection_of_ranges(self) -> None:
        u = LaurentWindow.from_coeffs([1, 2, 3], lo=0)
        v = LaurentWindow.from_coeffs([10, 20, 30], lo=1)
        result = window_add(u, v)
        assert (result.lo, result.hi) == (1, 2)
        assert _values(result) == [12, 23]

    def test_disjoint_ranges(self) -> None:
        u = LaurentWindow.from_coeffs([1], lo=0)
        v = LaurentWindow.from_coeffs([1], lo=5)
        with pytest.raises(RangeError):
            window_add(u, v)

    def test_exactness_propagates(self) -> None:
        exact = LaurentWindow.from_coeffs([1, 1])
        approx = LaurentWindow(0, 1, (Fraction(1), Fraction(1)), exact=False, tail_bound=0.5)
        result = window_add(exact, approx, 1, 2)
        assert not result.exact
        assert result.tail_bound == pytest.approx(1.0)

    def test_linearity_on_random_windows(self) -> None:
        rng = random.Random(7)
        for _ in range(50):
            lo = rng.randint(-4, 4)
            u = LaurentWindow.from_coeffs([rng.randint(-9, 9) for _ in range(6)], lo)
            v = LaurentWindow.from_coeffs([rng.randint(-9, 9) for _ in range(6)], lo + rng.randint(-2, 2))
            alpha = Fraction(rng.randint(0, 6), rng.randint(1, 4))
            beta = Fraction(rng.randint(0, 6), rng.randint(1, 4))
            result = window_add(u, v, alpha, beta)
            for k, c in result.items():
                assert c == alpha * u.coefficient(k) + beta * v.coefficient(k)


class TestWindowShift:
    """Tests for multiplication by a power of z."""

    def test_unit_shift(self) -> None:
        result = window_shift(LaurentWindow.from_coeffs([1]))
        assert (result.lo, result.hi) == (1, 1)
        assert result.coefficient(1) == 1

    def test_polynomial_shift_keeps_values(self) -> None:
        result = window_shift(LaurentWindow.polynomial([3, 4, 1]))
        assert (result.lo, result.hi) == (1, 3)
        assert _values(result) == [3, 4, 1]
        assert result.finite_support

    def test_negative_index(self) -> None:
        result = window_shift(LaurentWindow.from_coeffs([Fraction(1, 2)], lo=-1))
        assert result.coefficient(0) == Fraction(1, 2)

    def test_shift_by_many(self) -> None:
        result = window_shift(LaurentWindow.from_coeffs([1, 2]), by=-3)
        assert (result.lo, result.hi) == (-3, -2)


class TestPadRestrict:
    """Tests for widening and narrowing windows."""

    def test_pad_closed_sides(self) -> None:
        padded = pad_window(LaurentWindow.polynomial([3, 4, 1]), -2, 4)
        assert (padded.lo, padded.hi) == (-2, 4)
        assert _values(padded) == [0, 0, 3, 4, 1, 0, 0]

    def test_pad_open_side_refused(self) -> None:
        w = LaurentWindow.from_coeffs([1, 1], lo=0)
        with pytest.raises(OutsideWindowError):
            pad_window(w, -1, 1)

    def test_pad_inside_is_identity(self) -> None:
        w = LaurentWindow.polynomial([1, 2, 3])
        assert pad_window(w, 0, 2) is w

    def test_restrict(self) -> None:
        w = LaurentWindow.polynomial([1, 2, 3, 4])
        result = restrict_window(w, 1, 2)
        assert _values(result) == [2, 3]
        assert not result.lower_closed
        assert not result.upper_closed

    def test_restrict_keeps_closed_side_over_zeros(self) -> None:
        w = LaurentWindow.polynomial([1, 2, 0])
        result = restrict_window(w, 0, 1)
        assert result.upper_closed

    def test_restrict_outside(self) -> None:
        with pytest.raises(OutsideWindowError):
            restrict_window(LaurentWindow.polynomial([1, 2]), 0, 3)

    def test_restrict_empty(self) -> None:
        with pytest.raises(RangeError):
            restrict_window(LaurentWindow.polynomial([1, 2]), 1, 0)


class TestWindowMul:
    """Tests for the Cauchy product."""

    def test_polynomial_times_geometric(self) -> None:
        linear = LaurentWindow.polynomial([1, 1])
        geometric = generate_product_form(FactorSpec(pos_poles=(Fraction(2),)), 0, 3)
        result = window_mul(linear, geometric, 0, 3)
        assert result.exact
        assert _values(result) == [1, Fraction(3, 2), Fraction(3, 4), Fraction(3, 8)]

    def test_identity_factor(self) -> None:
        one = LaurentWindow.polynomial([1])
        v = LaurentWindow.polynomial([5, Fraction(1, 3), 2], lo=-1)
        result = window_mul(one, v, -1, 1)
        assert _values(result) == _values(v)

    def test_binomial(self) -> None:
        linear = LaurentWindow.polynomial([1, 1])
        assert _values(window_mul(linear, linear, 0, 2)) == [1, 2, 1]

    def test_open_operands_without_tail_mass(self) -> None:
        u = LaurentWindow.from_coeffs([1, 1])
        v = LaurentWindow.from_coeffs([1, 1])
        with pytest.raises(InsufficientDataError):
            window_mul(u, v, 0, 2)

    def test_declared_tail_mass_gives_approximation(self) -> None:
        u = LaurentWindow.polynomial([1, 1])
        v = LaurentWindow(0, 2, (Fraction(1),) * 3, lower_closed=True, tail_mass=0.25)
        result = window_mul(u, v, 0, 3)
        assert not result.exact
        assert result.tail_bound is not None and result.tail_bound > 0

    def test_empty_output_range(self) -> None:
        one = LaurentWindow.polynomial([1])
        with pytest.raises(RangeError):
            window_mul(one, one, 2, 1)


def test_dilate() -> None:
    result = window_dilate(LaurentWindow.polynomial([1, 2, 3]), 2)
    assert (result.lo, result.hi) == (0, 4)
    assert _values(result) == [1, 0, 2, 0, 3]
    with pytest.raises(DomainError):
        window_dilate(LaurentWindow.polynomial([1]), 0)


# -- splits ----------------------------------------------------------------------


class TestSplits:
    """Tests for even/odd and M-way coefficient splits."""

    def test_even_odd(self) -> None:
        p, q = split_even_odd(LaurentWindow.polynomial([1, 2, 3, 4, 5]))
        assert _values(q) == [1, 3, 5]
        assert (q.lo, q.hi) == (0, 2)
        assert _values(p) == [2, 4]
        assert (p.lo, p.hi) == (0, 1)

    def test_even_odd_binomial(self) -> None:
        p, q = split_even_odd(LaurentWindow.polynomial([1, 2, 1]))
        assert _values(q) == [1, 1]
        assert _values(p) == [2]

    def test_even_odd_negative_index(self) -> None:
        p, q = split_even_odd(LaurentWindow.polynomial([7], lo=-3))
        assert p.coefficient(-2) == 7
        assert q.is_zero

    def test_m_way(self) -> None:
        parts = split_m_way(LaurentWindow.polynomial([1, 2, 3, 4, 5, 6]), 3)
        assert [_values(part) for part in parts] == [[1, 4], [2, 5], [3, 6]]

    def test_m_equals_one(self) -> None:
        f = LaurentWindow.polynomial([1, 2, 3], lo=-1)
        (only,) = split_m_way(f, 1)
        assert only == f

    def test_m_way_negative_index(self) -> None:
        parts = split_m_way(LaurentWindow.polynomial([1], lo=-4), 3)
        assert parts[2].coefficient(-2) == 1
        assert parts[0].is_zero and parts[1].is_zero

    def test_m_zero(self) -> None:
        with pytest.raises(DomainError):
            split_m_way(LaurentWindow.polynomial([1]), 0)

    def test_empty_component_of_open_window(self) -> None:
        with pytest.raises(InsufficientDataError):
            split_m_way(LaurentWindow.from_coeffs([1], lo=0), 3)

    def test_two_way_matches_even_odd(self) -> None:
        f = LaurentWindow.polynomial([5, 1, 4, 1, 3], lo=-2)
        p0, p1 = split_m_way(f, 2)
        p, q = split_even_odd(f)
        assert (q, p) == (p0, p1)

    def test_reassembly(self) -> None:
        rng = random.Random(11)
        for _ in range(60):
            M = rng.randint(1, 5)
            size = rng.randint(M, 12)
            lo = rng.randint(-6, 6)
            f = LaurentWindow.polynomial([rng.randint(-5, 5) for _ in range(size)], lo)
            merged = merge_m_way(split_m_way(f, M))
            assert (merged.lo, merged.hi, merged.coeffs) == (f.lo, f.hi, f.coeffs)

    def test_merge_needs_parts(self) -> None:
        with pytest.raises(DomainError):
            merge_m_way([])


# -- ratio profile -------------------------------------------------------------------


class TestRatioProfile:
    """Tests for successive coefficient ratios."""

    def test_exponential(self) -> None:
        profile = ratio_profile(LaurentWindow.from_coeffs([1, 1, Fraction(1, 2), Fraction(1, 6)]))
        assert [r for _, r in profile.ratios] == [1, 2, 3]
        assert profile.nondecreasing
        assert not profile.has_gaps

    def test_geometric(self) -> None:
        profile = ratio_profile(generate_product_form(FactorSpec(pos_poles=(Fraction(2),)), 0, 4))
        assert profile.inner == 2
        assert profile.outer == 2

    def test_gap(self) -> None:
        profile = ratio_profile(LaurentWindow.from_coeffs([1, 0, 1]))
        assert profile.gaps == (1,)
        assert profile.ratios[0] == (0, math.inf)

    def test_negative_coefficient(self) -> None:
        with pytest.raises(DomainError):
            ratio_profile(LaurentWindow.from_coeffs([1, -1]))

    def test_monotone_on_generated_products(self) -> None:
        rng = random.Random(3)
        for _ in range(25):
            spec = FactorSpec(
                C=Fraction(rng.randint(1, 5)),
                A=Fraction(rng.randint(0, 3), 2),
                pos_zeros=tuple(Fraction(rng.randint(1, 8), 2) for _ in range(rng.randint(0, 3))),
                pos_poles=tuple(Fraction(rng.randint(1, 8), 2) for _ in range(rng.randint(0, 2))),
            )
            window = generate_product_form(spec, 0, 8)
            assert window.exact
            assert all(c >= 0 for c in window.coeffs)
            assert ratio_profile(window).nondecreasing


# -- product forms -------------------------------------------------------------------


class TestProductForm:
    """Tests for generate_product_form."""

    def test_exponential(self) -> None:
        window = generate_product_form(FactorSpec(A=Fraction(1)), 0, 3)
        assert window.exact
        assert _values(window) == [1, 1, Fraction(1, 2), Fraction(1, 6)]

    def test_geometric(self) -> None:
        window = generate_product_form(FactorSpec(pos_poles=(Fraction(2),)), 0, 2)
        assert _values(window) == [1, Fraction(1, 2), Fraction(1, 4)]

    def test_zero_over_pole_matches_convolution(self) -> None:
        spec = FactorSpec(pos_zeros=(Fraction(1),), pos_poles=(Fraction(2),))
        window = generate_product_form(spec, 0, 3)
        assert _values(window) == [1, Fraction(3, 2), Fraction(3, 4), Fraction(3, 8)]

    def test_polynomial_is_closed(self) -> None:
        window = generate_product_form(FactorSpec(pos_zeros=(Fraction(1),)), -1, 3)
        assert _values(window) == [0, 1, 1, 0, 0]
        assert window.finite_support

    def test_shift_and_origin_zero(self) -> None:
        spec = FactorSpec(C=Fraction(2), j=1, zero_at_origin=True)
        window = generate_product_form(spec, 0, 3)
        assert _values(window) == [0, 0, 2, 0]

    def test_negative_side(self) -> None:
        window = generate_product_form(FactorSpec(neg_zeros=(Fraction(1, 2),)), -2, 1)
        assert _values(window) == [0, 2, 1, 0]

    def test_two_sided_exponential_is_approximate(self) -> None:
        window = generate_product_form(FactorSpec(A=Fraction(1), A0=Fraction(1)), -1, 1)
        assert not window.exact
        assert window.tail_bound is not None
        # f_0 = sum 1/(k!)^2 = I_0(2)
        assert float(window.coefficient(0)) == pytest.approx(2.2795853023360673, abs=1e-12)
        assert float(window.coefficient(-1)) == pytest.approx(float(window.coefficient(1)))

    def test_poles_on_both_sides(self) -> None:
        spec = FactorSpec(pos_poles=(Fraction(1, 2),), neg_poles=(Fraction(1, 2),))
        with pytest.raises(DomainError):
            generate_product_form(spec, 0, 2)

    def test_empty_range(self) -> None:
        with pytest.raises(RangeError):
            generate_product_form(FactorSpec(), 1, 0)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"pos_zeros": (Fraction(0),)},
            {"pos_poles": (Fraction(-1),)},
            {"C": Fraction(0)},
            {"A": Fraction(-1)},
        ],
    )
    def test_invalid_parameters(self, kwargs: dict[str, object]) -> None:
        with pytest.raises(DomainError):
            FactorSpec(**kwargs)  # type: ignore[arg-type]


class TestStableForm:
    """Tests for generate_stable_form."""

    def test_real_zero(self) -> None:
        window = generate_stable_form(StableFormSpec(C=Fraction(2), r=1, real_zeros=(Fraction(1),)), 0, 3)
        assert _values(window) == [0, 2, 2, 0]
        assert window.finite_support

    def test_complex_pair(self) -> None:
        spec = StableFormSpec(complex_zeros=((Fraction(1), Fraction(1)),))
        window = generate_stable_form(spec, 0, 2)
        assert _values(window) == [1, 1, Fraction(1, 2)]

    def test_dilated_factor(self) -> None:
        spec = StableFormSpec(g=FactorSpec(pos_zeros=(Fraction(1),)))
        window = generate_stable_form(spec, 0, 3)
        assert _values(window) == [1, 0, 1, 0]

    def test_approximant(self) -> None:
        spec = StableFormSpec(B=Fraction(1))
        window = generate_stable_form(spec, 0, 3, approximant_degree=2)
        assert _values(window) == [1, 1, Fraction(1, 4), 0]
        with pytest.raises(DomainError):
            generate_stable_form(spec, 0, 3, approximant_degree=0)

    def test_complex_zero_in_right_half_plane_rejected(self) -> None:
        with pytest.raises(DomainError):
            StableFormSpec(complex_zeros=((Fraction(-1), Fraction(1)),))
