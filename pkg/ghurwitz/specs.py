"""Load series, matrix and polynomial descriptions from JSON.

A series is given either by explicit coefficients::

    {"kind": "explicit", "lo": -1, "coeffs": ["1/2", "3", "1"]}

or by a truncated product form::

    {"kind": "factors", "C": "1", "j": 0, "A": "1", "A0": "0",
     "pos_zeros": ["1"], "pos_poles": ["2"], "neg_zeros": [], "neg_poles": [],
     "zero_at_origin": false}

A ``"stable"`` kind describes the quasi-stable-type product (see
:class:`~ghurwitz.laurent.StableFormSpec`). A matrix wraps one or two series::

    {"kind": "hurwitz_type", "series": [P, Q]}
    {"kind": "generalized", "series": F, "M": 3, "row_offset": 0}

Explicit series are Laurent polynomials unless ``"finite": false`` (or one of
``"lower_closed"`` / ``"upper_closed"``) says otherwise.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Literal, Union

from ghurwitz.errors import SpecError
from ghurwitz.laurent import (
    DEFAULT_EXP_TRUNCATION,
    FactorSpec,
    LaurentWindow,
    StableFormSpec,
    generate_product_form,
    generate_stable_form,
    pad_window,
)
from ghurwitz.rational import parse_rational, parse_rational_list
from ghurwitz.realroots import RationalPoly
from ghurwitz.structmat import (
    GeneralizedHurwitzView,
    HurwitzTypeView,
    MatrixView,
    ToeplitzView,
    WindowMatrix,
    extract_window,
    generalized_range,
    hurwitz_ranges,
    hurwitz_view,
    toeplitz_range,
)

logger = logging.getLogger(__name__)

MatrixKind = Literal["toeplitz", "hurwitz_type", "hurwitz_of_f", "generalized"]

#: Matrix kinds accepted in a MatrixSpec.
MATRIX_KINDS: tuple[str, ...] = ("toeplitz", "hurwitz_type", "hurwitz_of_f", "generalized")

_FACTOR_KEYS = {
    "kind", "C", "j", "A", "A0", "pos_zeros", "pos_poles", "neg_zeros", "neg_poles",
    "zero_at_origin",
}
_STABLE_KEYS = {
    "kind", "C", "r", "B", "B0", "real_zeros", "neg_real_zeros", "complex_zeros",
    "neg_complex_zeros", "g", "approximant_degree",
}


# -- series --------------------------------------------------------------------


@dataclass(frozen=True)
class ExplicitSeries:
    """Stored coefficients; :meth:`materialize` pads closed sides on request."""

    window: LaurentWindow

    def materialize(
        self,
        lo: int,
        hi: int,
        *,
        pad: bool = False,
        exp_truncation: int = DEFAULT_EXP_TRUNCATION,
    ) -> LaurentWindow:
        if pad:
            return pad_window(self.window, lo, hi)
        return self.window


@dataclass(frozen=True)
class FactorSeries:
    """Product form generated on whatever range a matrix window needs."""

    spec: FactorSpec

    def materialize(
        self,
        lo: int,
        hi: int,
        *,
        pad: bool = False,
        exp_truncation: int = DEFAULT_EXP_TRUNCATION,
    ) -> LaurentWindow:
        return generate_product_form(self.spec, lo, hi, exp_truncation)


@dataclass(frozen=True)
class StableSeries:
    """Quasi-stable-type product generated on demand."""

    spec: StableFormSpec
    approximant_degree: int | None = None

    def materialize(
        self,
        lo: int,
        hi: int,
        *,
        pad: bool = False,
        exp_truncation: int = DEFAULT_EXP_TRUNCATION,
    ) -> LaurentWindow:
        return generate_stable_form(
            self.spec, lo, hi, exp_truncation, approximant_degree=self.approximant_degree
        )


SeriesSpec = Union[ExplicitSeries, FactorSeries, StableSeries]


def _require_object(raw: object, what: str) -> dict[str, Any]:
    if not isinstance(raw, dict):
        raise SpecError(f"{what} must be a JSON object")
    return raw


def _int_field(raw: dict[str, Any], key: str, default: int) -> int:
    value = raw.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise SpecError(f"'{key}' must be an integer")
    return value


def _bool_field(raw: dict[str, Any], key: str, default: bool) -> bool:
    value = raw.get(key, default)
    if not isinstance(value, bool):
        raise SpecError(f"'{key}' must be a boolean")
    return value


def _check_keys(raw: dict[str, Any], allowed: set[str], what: str) -> None:
    unknown = sorted(set(raw) - allowed)
    if unknown:
        raise SpecError(f"unknown {what} field(s): {', '.join(unknown)}")


def factor_spec_from_dict(raw: object) -> FactorSpec:
    """Parse a ``"factors"`` object into a :class:`FactorSpec`."""
    data = _require_object(raw, "factor spec")
    _check_keys(data, _FACTOR_KEYS, "factor spec")
    return FactorSpec(
        C=parse_rational(data.get("C", "1")),
        j=_int_field(data, "j", 0),
        A=parse_rational(data.get("A", "0")),
        A0=parse_rational(data.get("A0", "0")),
        pos_zeros=parse_rational_list(data.get("pos_zeros", []), "pos_zeros"),
        pos_poles=parse_rational_list(data.get("pos_poles", []), "pos_poles"),
        neg_zeros=parse_rational_list(data.get("neg_zeros", []), "neg_zeros"),
        neg_poles=parse_rational_list(data.get("neg_poles", []), "neg_poles"),
        zero_at_origin=_bool_field(data, "zero_at_origin", False),
    )


def _complex_pairs(raw: object, field: str) -> tuple[tuple[Fraction, Fraction], ...]:
    if not isinstance(raw, list):
        raise SpecError(f"'{field}' must be a list of [re, im] pairs")
    pairs = []
    for item in raw:
        if not isinstance(item, list) or len(item) != 2:
            raise SpecError(f"'{field}' entries must be [re, im] pairs")
        pairs.append((parse_rational(item[0]), parse_rational(item[1])))
    return tuple(pairs)


def _explicit_from_dict(data: dict[str, Any]) -> ExplicitSeries:
    if "coeffs" not in data:
        raise SpecError("explicit series needs 'coeffs'")
    coeffs = parse_rational_list(data["coeffs"], "coeffs")
    if not coeffs:
        raise SpecError("explicit series needs at least one coefficient")
    lo = _int_field(data, "lo", 0)
    finite = _bool_field(data, "finite", True)
    return ExplicitSeries(
        LaurentWindow(
            lo=lo,
            hi=lo + len(coeffs) - 1,
            coeffs=coeffs,
            lower_closed=_bool_field(data, "lower_closed", finite),
            upper_closed=_bool_field(data, "upper_closed", finite),
        )
    )


def series_from_dict(raw: object) -> SeriesSpec:
    """Parse a SeriesSpec object.

    Raises:
        SpecError: On an unknown kind or malformed fields.
    """
    data = _require_object(raw, "series spec")
    kind = data.get("kind", "explicit")
    if kind == "explicit":
        return _explicit_from_dict(data)
    if kind == "factors":
        return FactorSeries(factor_spec_from_dict(data))
    if kind == "stable":
        _check_keys(data, _STABLE_KEYS, "stable spec")
        degree = data.get("approximant_degree")
        if degree is not None and (isinstance(degree, bool) or not isinstance(degree, int)):
            raise SpecError("'approximant_degree' must be an integer")
        g = data.get("g")
        spec = StableFormSpec(
            C=parse_rational(data.get("C", "1")),
            r=_int_field(data, "r", 0),
            B=parse_rational(data.get("B", "0")),
            B0=parse_rational(data.get("B0", "0")),
            real_zeros=parse_rational_list(data.get("real_zeros", []), "real_zeros"),
            neg_real_zeros=parse_rational_list(data.get("neg_real_zeros", []), "neg_real_zeros"),
            complex_zeros=_complex_pairs(data.get("complex_zeros", []), "complex_zeros"),
            neg_complex_zeros=_complex_pairs(
                data.get("neg_complex_zeros", []), "neg_complex_zeros"
            ),
            g=None if g is None else factor_spec_from_dict({"kind": "factors", **g}),
        )
        return StableSeries(spec, degree)
    raise SpecError(f"unknown series kind {kind!r}; expected explicit, factors or stable")


def polynomial_from_dict(raw: object) -> RationalPoly:
    """Parse ``{"coeffs": [...]}`` (ascending) into a :class:`RationalPoly`."""
    data = _require_object(raw, "polynomial spec")
    if "coeffs" not in data:
        raise SpecError("polynomial spec needs 'coeffs'")
    return RationalPoly(parse_rational_list(data["coeffs"], "coeffs"))


# -- matrices --------------------------------------------------------------------


@dataclass(frozen=True)
class MatrixSpec:
    """A structured matrix kind with its backing series.

    Attributes:
        kind: ``toeplitz``, ``hurwitz_type``, ``hurwitz_of_f`` or ``generalized``.
        series: One series, or ``(p, q)`` for ``hurwitz_type``.
        M: Step of the generalized Hurwitz matrix.
        row_offset: Index convention of the generalized matrix.
    """

    kind: MatrixKind
    series: tuple[SeriesSpec, ...]
    M: int = 2
    row_offset: int = 0

    def __post_init__(self) -> None:
        if self.kind not in MATRIX_KINDS:
            raise SpecError(f"unknown matrix kind {self.kind!r}")
        expected = 2 if self.kind == "hurwitz_type" else 1
        if len(self.series) != expected:
            raise SpecError(f"matrix kind {self.kind!r} needs {expected} series, got {len(self.series)}")
        if self.kind == "generalized" and self.M < 1:
            raise SpecError(f"generalized Hurwitz step M must be positive, got {self.M}")

    def view(
        self,
        row_lo: int,
        row_hi: int,
        col_lo: int,
        col_hi: int,
        *,
        pad: bool = False,
        exp_truncation: int = DEFAULT_EXP_TRUNCATION,
    ) -> MatrixView:
        """Materialize the series on the ranges the window touches and wrap them."""
        options: dict[str, Any] = {"pad": pad, "exp_truncation": exp_truncation}
        if self.kind == "toeplitz":
            lo, hi = toeplitz_range(row_lo, row_hi, col_lo, col_hi)
            return ToeplitzView(self.series[0].materialize(lo, hi, **options))
        if self.kind == "generalized":
            lo, hi = generalized_range(self.M, row_lo, row_hi, col_lo, col_hi, self.row_offset)
            return GeneralizedHurwitzView(
                self.series[0].materialize(lo, hi, **options), self.M, self.row_offset
            )
        p_range, q_range = hurwitz_ranges(row_lo, row_hi, col_lo, col_hi)
        if self.kind == "hurwitz_type":
            p_spec, q_spec = self.series
            p = p_spec.materialize(*(p_range or q_range or (0, 0)), **options)
            q = q_spec.materialize(*(q_range or p_range or (0, 0)), **options)
            return HurwitzTypeView(p, q)
        bounds = [2 * k + 1 for k in p_range or ()] + [2 * k for k in q_range or ()]
        f = self.series[0].materialize(min(bounds), max(bounds), **options)
        return hurwitz_view(f)

    def build(
        self,
        row_lo: int,
        row_hi: int,
        col_lo: int,
        col_hi: int,
        *,
        pad: bool = False,
        exp_truncation: int = DEFAULT_EXP_TRUNCATION,
    ) -> WindowMatrix:
        """Extract the window ``rows x cols`` of the described matrix.

        Raises:
            OutsideWindowError: If an explicit series does not store a needed
                coefficient (and ``pad`` is off or the side is open).
        """
        view = self.view(row_lo, row_hi, col_lo, col_hi, pad=pad, exp_truncation=exp_truncation)
        logger.debug("building %s window rows %d..%d cols %d..%d",
                     self.kind, row_lo, row_hi, col_lo, col_hi)
        return extract_window(view, row_lo, row_hi, col_lo, col_hi)


def matrix_spec_from_dict(raw: object) -> MatrixSpec:
    """Parse a MatrixSpec object."""
    data = _require_object(raw, "matrix spec")
    kind = data.get("kind")
    if kind not in MATRIX_KINDS:
        raise SpecError(f"unknown matrix kind {kind!r}; expected one of {', '.join(MATRIX_KINDS)}")
    series_raw = data.get("series")
    if series_raw is None:
        raise SpecError("matrix spec needs 'series'")
    items = series_raw if isinstance(series_raw, list) else [series_raw]
    return MatrixSpec(
        kind=kind,
        series=tuple(series_from_dict(item) for item in items),
        M=_int_field(data, "M", 2),
        row_offset=_int_field(data, "row_offset", 0),
    )


def matrix_from_dict(raw: object) -> WindowMatrix:
    """Parse a serialized :class:`WindowMatrix`."""
    data = _require_object(raw, "window matrix")
    entries = data.get("entries")
    if not isinstance(entries, list) or not entries or not all(isinstance(r, list) for r in entries):
        raise SpecError("window matrix needs a non-empty 'entries' list of rows")
    rows = [list(parse_rational_list(row, "entries")) for row in entries]
    matrix = WindowMatrix.from_rows(
        rows,  # type: ignore[arg-type]
        row_lo=_int_field(data, "row_lo", 1),
        col_lo=_int_field(data, "col_lo", 1),
    )
    for key in ("row_hi", "col_hi"):
        if key in data and data[key] != getattr(matrix, key):
            raise SpecError(f"'{key}' does not match the size of 'entries'")
    return matrix


# -- files ------------------------------------------------------------------------------


def load_json(path: str | Path) -> Any:
    """Read a UTF-8 JSON file.

    Raises:
        FileNotFoundError: If ``path`` does not exist.
        SpecError: If the file is not valid JSON.
    """
    spec_path = Path(path)
    if not spec_path.is_file():
        raise FileNotFoundError(f"spec file not found: {spec_path}")
    try:
        return json.loads(spec_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec file is not valid JSON ({spec_path}): {exc}") from exc


def load_series(path: str | Path) -> SeriesSpec:
    return series_from_dict(load_json(path))


def load_polynomial(path: str | Path) -> RationalPoly | FactorSpec:
    """Load a polynomial or a ``"factors"`` series spec for the S-function checks."""
    data = load_json(path)
    if isinstance(data, dict) and data.get("kind") == "factors":
        return factor_spec_from_dict(data)
    return polynomial_from_dict(data)


def load_matrix_input(
    paths: list[Path], kind: str | None = None, M: int = 2, row_offset: int = 0
) -> MatrixSpec | WindowMatrix:
    """Resolve ``--input`` files into a matrix spec or a stored window.

    One file holding a MatrixSpec or a serialized window is used as is; otherwise
    the files are series specs combined under ``kind``.

    Raises:
        SpecError: If the inputs do not describe a matrix.
    """
    if not paths:
        raise SpecError("at least one --input file is required")
    if len(paths) == 1:
        data = load_json(paths[0])
        if isinstance(data, dict) and "entries" in data:
            return matrix_from_dict(data)
        if isinstance(data, dict) and data.get("kind") in MATRIX_KINDS:
            return matrix_spec_from_dict(data)
    if kind is None:
        raise SpecError("series inputs need --kind to say which matrix to build")
    series = tuple(load_series(path) for path in paths)
    return MatrixSpec(kind=kind, series=series, M=M, row_offset=row_offset)  # type: ignore[arg-type]
