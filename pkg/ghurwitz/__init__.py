"""ghurwitz: exact total-nonnegativity checks for Hurwitz-type and Toeplitz matrices.

Laurent coefficient windows, structured matrix views, minor enumeration over
rationals, interlacing and quasi-stability tests, and sampled analytic checks.
"""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as _version

from ghurwitz.errors import (
    ConvergenceError,
    DomainError,
    GhurwitzError,
    InsufficientDataError,
    OutsideWindowError,
    RangeError,
    SamplingError,
    ShapeError,
    SpecError,
)
from ghurwitz.laurent import (
    FactorSpec,
    LaurentWindow,
    StableFormSpec,
    generate_product_form,
    generate_stable_form,
    split_even_odd,
    split_m_way,
    window_add,
    window_mul,
    window_shift,
)
from ghurwitz.realroots import (
    RationalPoly,
    SVerdict,
    check_interlacing,
    partial_fraction_residues,
    routh_quasi_stability,
)
from ghurwitz.structmat import (
    GeneralizedHurwitzView,
    HurwitzTypeView,
    ToeplitzView,
    WindowMatrix,
    extract_window,
)
from ghurwitz.tnn import MinorWitness, TnnVerdict, check_tnn, exact_det

try:
    __version__ = _version("ghurwitz")
except PackageNotFoundError:
    __version__ = "0.0.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "FactorSpec",
    "GeneralizedHurwitzView",
    "GhurwitzError",
    "HurwitzTypeView",
    "InsufficientDataError",
    "LaurentWindow",
    "MinorWitness",
    "OutsideWindowError",
    "RangeError",
    "RationalPoly",
    "SVerdict",
    "SamplingError",
    "ShapeError",
    "SpecError",
    "StableFormSpec",
    "TnnVerdict",
    "ToeplitzView",
    "WindowMatrix",
    "__version__",
    "check_interlacing",
    "check_tnn",
    "exact_det",
    "extract_window",
    "generate_product_form",
    "generate_stable_form",
    "partial_fraction_residues",
    "routh_quasi_stability",
    "split_even_odd",
    "split_m_way",
    "window_add",
    "window_mul",
    "window_shift",
]
