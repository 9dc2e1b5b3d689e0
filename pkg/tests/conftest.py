"""Pytest configuration and fixtures."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from ghurwitz.laurent import LaurentWindow
from ghurwitz.realroots import RationalPoly
from ghurwitz.structmat import WindowMatrix


@pytest.fixture
def counterexample_pair() -> tuple[LaurentWindow, LaurentWindow]:
    """``p = 3 + 4z + z^2`` and ``q = 2 + z``: real zeros that do not interlace."""
    return LaurentWindow.polynomial([3, 4, 1]), LaurentWindow.polynomial([2, 1])


@pytest.fixture
def interlacing_pair() -> tuple[LaurentWindow, LaurentWindow]:
    """``p = 8 + 6z + z^2`` and ``q = 3 + 4z + z^2``: zeros -1, -2, -3, -4 interlace."""
    return LaurentWindow.polynomial([8, 6, 1]), LaurentWindow.polynomial([3, 4, 1])


@pytest.fixture
def counterexample_window() -> WindowMatrix:
    """Rows and columns 1..4 of ``H(p, q)`` for the counterexample pair."""
    return WindowMatrix.from_rows(
        [
            [3, 4, 1, 0],
            [2, 1, 0, 0],
            [0, 3, 4, 1],
            [0, 2, 1, 0],
        ]
    )


@pytest.fixture
def stable_cubic() -> RationalPoly:
    """``(z + 1)(z^2 + z + 1) = 1 + 2z + 2z^2 + z^3``."""
    return RationalPoly.of(1, 2, 2, 1)


@pytest.fixture
def half() -> Fraction:
    return Fraction(1, 2)


def _write(path: Path, data: object) -> Path:
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


@pytest.fixture
def spec_files(tmp_path: Path) -> dict[str, Path]:
    """Series and polynomial specs used by the CLI tests."""
    return {
        "p_counter": _write(tmp_path / "p_counter.json", {"kind": "explicit", "coeffs": ["3", "4", "1"]}),
        "q_counter": _write(tmp_path / "q_counter.json", {"kind": "explicit", "coeffs": ["2", "1"]}),
        "p_interlacing": _write(
            tmp_path / "p_interlacing.json", {"kind": "explicit", "coeffs": ["8", "6", "1"]}
        ),
        "q_interlacing": _write(
            tmp_path / "q_interlacing.json", {"kind": "explicit", "coeffs": ["3", "4", "1"]}
        ),
        "poly_p": _write(tmp_path / "poly_p.json", {"coeffs": ["2", "1"]}),
        "poly_q": _write(tmp_path / "poly_q.json", {"coeffs": ["1", "1"]}),
        "exp": _write(tmp_path / "exp.json", {"kind": "factors", "A": "1"}),
        "one": _write(tmp_path / "one.json", {"kind": "factors"}),
        "geometric_open": _write(
            tmp_path / "geometric_open.json",
            {"kind": "explicit", "coeffs": ["1", "1", "1"], "finite": False},
        ),
        "two_sided": _write(
            tmp_path / "two_sided.json",
            {"kind": "factors", "A": "1", "A0": "1"},
        ),
        "malformed": _write(tmp_path / "malformed.json", {"kind": "explicit", "coeffs": [0.5]}),
        "dir": tmp_path,
    }
