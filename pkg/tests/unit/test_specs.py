"""Unit tests for JSON spec loading and matrix construction."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from ghurwitz.errors import OutsideWindowError, SpecError
from ghurwitz.laurent import FactorSpec, LaurentWindow
from ghurwitz.realroots import RationalPoly
from ghurwitz.specs import (
    ExplicitSeries,
    FactorSeries,
    MatrixSpec,
    StableSeries,
    factor_spec_from_dict,
    load_json,
    load_matrix_input,
    load_polynomial,
    load_series,
    matrix_from_dict,
    matrix_spec_from_dict,
    polynomial_from_dict,
    series_from_dict,
)
from ghurwitz.structmat import WindowMatrix


def _write(path: Path, data: object) -> Path:
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


# -- series --------------------------------------------------------------------


class TestSeriesFromDict:
    """Tests for series_from_dict."""

    def test_explicit_defaults_to_finite(self) -> None:
        series = series_from_dict({"coeffs": ["1/2", "3"], "lo": -1})
        assert isinstance(series, ExplicitSeries)
        assert series.window.finite_support
        assert series.window.coefficient(-1) == Fraction(1, 2)

    def test_explicit_open(self) -> None:
        series = series_from_dict({"kind": "explicit", "coeffs": ["1"], "finite": False})
        assert isinstance(series, ExplicitSeries)
        assert not series.window.lower_closed
        assert not series.window.upper_closed

    def test_explicit_one_side_closed(self) -> None:
        series = series_from_dict(
            {"kind": "explicit", "coeffs": ["1", "1"], "finite": False, "lower_closed": True}
        )
        assert isinstance(series, ExplicitSeries)
        assert series.window.lower_closed
        assert not series.window.upper_closed

    def test_factors(self) -> None:
        series = series_from_dict({"kind": "factors", "A": "1", "pos_poles": ["2"]})
        assert isinstance(series, FactorSeries)
        assert series.spec == FactorSpec(A=Fraction(1), pos_poles=(Fraction(2),))

    def test_stable(self) -> None:
        series = series_from_dict(
            {
                "kind": "stable",
                "B": "1",
                "complex_zeros": [["1", "1"]],
                "g": {"pos_zeros": ["1"]},
                "approximant_degree": 3,
            }
        )
        assert isinstance(series, StableSeries)
        assert series.approximant_degree == 3
        assert series.spec.g == FactorSpec(pos_zeros=(Fraction(1),))

    @pytest.mark.parametrize(
        "raw",
        [
            {"kind": "mystery", "coeffs": ["1"]},
            {"kind": "explicit"},
            {"kind": "explicit", "coeffs": []},
            {"kind": "explicit", "coeffs": [0.5]},
            {"kind": "explicit", "coeffs": ["1"], "lo": "0"},
            {"kind": "factors", "bogus": 1},
            {"kind": "stable", "complex_zeros": [["1"]]},
            {"kind": "stable", "approximant_degree": "3"},
            ["1", "2"],
        ],
    )
    def test_invalid(self, raw: object) -> None:
        with pytest.raises(SpecError):
            series_from_dict(raw)


def test_factor_spec_from_dict() -> None:
    spec = factor_spec_from_dict({"C": "2", "j": -1, "neg_zeros": ["1/2"], "zero_at_origin": True})
    assert spec.C == 2
    assert spec.j == -1
    assert spec.neg_zeros == (Fraction(1, 2),)
    assert spec.zero_at_origin


def test_polynomial_from_dict() -> None:
    assert polynomial_from_dict({"coeffs": ["1", "0", "1"]}) == RationalPoly.of(1, 0, 1)
    with pytest.raises(SpecError):
        polynomial_from_dict({"roots": []})


# -- matrices --------------------------------------------------------------------


class TestMatrixSpec:
    """Tests for building windows from matrix specs."""

    def test_hurwitz_type_needs_padding(
        self,
        counterexample_pair: tuple[LaurentWindow, LaurentWindow],
        counterexample_window: WindowMatrix,
    ) -> None:
        p, q = counterexample_pair
        spec = MatrixSpec("hurwitz_type", (ExplicitSeries(p), ExplicitSeries(q)))
        assert spec.build(1, 4, 1, 4, pad=True) == counterexample_window
        with pytest.raises(OutsideWindowError):
            spec.build(1, 4, 1, 4)

    def test_hurwitz_of_f_matches_split(self) -> None:
        f = LaurentWindow.polynomial([1, 2, 2, 1])
        split = MatrixSpec(
            "hurwitz_type",
            (ExplicitSeries(LaurentWindow.polynomial([2, 1])), ExplicitSeries(LaurentWindow.polynomial([1, 2]))),
        )
        whole = MatrixSpec("hurwitz_of_f", (ExplicitSeries(f),))
        assert whole.build(1, 3, 1, 3, pad=True) == split.build(1, 3, 1, 3, pad=True)

    def test_generalized_with_row_offset_is_hurwitz(self) -> None:
        f = ExplicitSeries(LaurentWindow.polynomial([1, 2, 2, 1]))
        generalized = MatrixSpec("generalized", (f,), M=2, row_offset=1)
        hurwitz = MatrixSpec("hurwitz_of_f", (f,))
        assert generalized.build(1, 4, 1, 4, pad=True).entries == hurwitz.build(1, 4, 1, 4, pad=True).entries

    def test_toeplitz_of_product_needs_no_padding(self) -> None:
        spec = MatrixSpec("toeplitz", (FactorSeries(FactorSpec(A=Fraction(1))),))
        window = spec.build(1, 3, 1, 3)
        assert window.entries[0] == (Fraction(1), Fraction(1), Fraction(1, 2))
        assert window.entries[2] == (Fraction(0), Fraction(0), Fraction(1))

    def test_wrong_series_count(self) -> None:
        series = ExplicitSeries(LaurentWindow.polynomial([1]))
        with pytest.raises(SpecError):
            MatrixSpec("hurwitz_type", (series,))
        with pytest.raises(SpecError):
            MatrixSpec("toeplitz", (series, series))

    def test_unknown_kind(self) -> None:
        with pytest.raises(SpecError):
            MatrixSpec("circulant", (ExplicitSeries(LaurentWindow.polynomial([1])),))  # type: ignore[arg-type]

    def test_from_dict(self) -> None:
        spec = matrix_spec_from_dict(
            {"kind": "generalized", "series": {"coeffs": ["1", "1"]}, "M": 3}
        )
        assert spec.kind == "generalized"
        assert spec.M == 3
        assert len(spec.series) == 1

    def test_from_dict_needs_series(self) -> None:
        with pytest.raises(SpecError):
            matrix_spec_from_dict({"kind": "toeplitz"})


def test_matrix_from_dict_round_trip(counterexample_window: WindowMatrix) -> None:
    assert matrix_from_dict(counterexample_window.to_dict()) == counterexample_window


def test_matrix_from_dict_size_mismatch() -> None:
    with pytest.raises(SpecError):
        matrix_from_dict({"entries": [["1"]], "row_hi": 3})


# -- files -------------------------------------------------------------------------


class TestFiles:
    """Tests for reading spec files."""

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(FileNotFoundError):
            load_json(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path: Path) -> None:
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(SpecError):
            load_json(path)

    def test_load_series(self, spec_files: dict[str, Path]) -> None:
        series = load_series(spec_files["p_counter"])
        assert isinstance(series, ExplicitSeries)
        assert series.window.coeffs == (Fraction(3), Fraction(4), Fraction(1))

    def test_load_polynomial(self, spec_files: dict[str, Path]) -> None:
        assert load_polynomial(spec_files["poly_p"]) == RationalPoly.of(2, 1)
        assert isinstance(load_polynomial(spec_files["exp"]), FactorSpec)

    def test_series_inputs_need_kind(self, spec_files: dict[str, Path]) -> None:
        with pytest.raises(SpecError):
            load_matrix_input([spec_files["p_counter"], spec_files["q_counter"]])

    def test_no_inputs(self) -> None:
        with pytest.raises(SpecError):
            load_matrix_input([])

    def test_series_inputs_with_kind(self, spec_files: dict[str, Path]) -> None:
        spec = load_matrix_input(
            [spec_files["p_counter"], spec_files["q_counter"]], kind="hurwitz_type"
        )
        assert isinstance(spec, MatrixSpec)
        assert spec.kind == "hurwitz_type"

    def test_stored_window(self, tmp_path: Path, counterexample_window: WindowMatrix) -> None:
        path = _write(tmp_path / "window.json", counterexample_window.to_dict())
        assert load_matrix_input([path]) == counterexample_window

    def test_matrix_spec_file(self, tmp_path: Path) -> None:
        path = _write(
            tmp_path / "matrix.json",
            {"kind": "toeplitz", "series": {"kind": "factors", "A": "1"}},
        )
        spec = load_matrix_input([path])
        assert isinstance(spec, MatrixSpec)
        assert spec.kind == "toeplitz"
