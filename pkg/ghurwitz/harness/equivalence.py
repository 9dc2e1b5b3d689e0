"""Equivalence suite: interlacing zeros, TNN Toeplitz combinations and TNN Hurwitz-type windows.

For every instance the exact interlacing verdict is compared with the
construction, the Hurwitz-type window ``H(p, q)`` is searched for negative
minors, and for interlacing instances the Toeplitz windows of ``Ap + Bq`` and
``Aq + Bzp`` are checked over the grid of weights. The factorization and
row-shift identities are verified on every one-sided instance.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Any, Union

from ghurwitz.analytic import ComplexSampler, RationalFunction, sample_im_nonneg
from ghurwitz.config import RunConfig
from ghurwitz.errors import GhurwitzError
from ghurwitz.generators.instances import (
    PolyPairInstance,
    TwoSidedInstance,
    geometric_windows,
    interlacing_pair,
    mutated_pair,
    named_pairs,
    two_sided_pair,
)
from ghurwitz.harness.common import (
    combination_window,
    hurwitz_window,
    ordered_map,
    poly_window,
    search_negative,
    toeplitz_window,
)
from ghurwitz.harness.report import HarnessReport, InstanceResult, Status
from ghurwitz.laurent import LaurentWindow, generate_product_form, pad_window, window_shift
from ghurwitz.rational import format_rational
from ghurwitz.realroots import check_interlacing, factor_ratio_verdict, partial_fraction_residues
from ghurwitz.structmat import (
    HurwitzTypeView,
    extract_window,
    factorization_check,
    hurwitz_ranges,
    row_shift_check,
)
from ghurwitz.tnn import check_tnn, detect_geometric_degeneracy, has_nonzero_minor_of_order

logger = logging.getLogger(__name__)

SUITE = "equivalence"

#: Side of the Toeplitz windows checked over the weight grid.
TOEPLITZ_SIZE = 6
#: Order of the Toeplitz checks.
TOEPLITZ_ORDER = 3
#: Rows of the windows on which the identities are verified.
IDENTITY_ROWS = 4


@dataclass(frozen=True)
class _Degenerate:
    label: str
    p: LaurentWindow
    q: LaurentWindow


Instance = Union[PolyPairInstance, TwoSidedInstance, _Degenerate]


def build_instances(config: RunConfig) -> list[Instance]:
    """Named instances first, then ``count`` interlacing and ``count`` mutated pairs.

    A quarter of each generated half uses two-sided product forms.
    """
    rng = random.Random(config.seed)
    instances: list[Instance] = list(named_pairs())
    instances.append(_Degenerate("geometric-2-3", *geometric_windows()))
    two_sided = config.count // 4
    for k in range(config.count):
        if k < two_sided:
            instances.append(two_sided_pair(rng, k))
        else:
            instances.append(interlacing_pair(rng, k, config.degree))
    for k in range(config.count):
        if k < two_sided:
            instances.append(two_sided_pair(rng, k, mutate=True))
        else:
            instances.append(mutated_pair(rng, k, config.degree))
    return instances


def _identity_checks(p: LaurentWindow, q: LaurentWindow, config: RunConfig) -> dict[str, bool]:
    """Factorization over the grid and the row shift on a small window."""
    cols = config.window
    reach = 2 * IDENTITY_ROWS + cols + 2
    p_wide = pad_window(p, -reach, reach)
    q_wide = pad_window(q, -reach, reach)
    factorization = all(
        factorization_check(p_wide, q_wide, A, B, 1, IDENTITY_ROWS, 1, cols)
        for A in config.grid
        for B in config.grid
    )
    return {
        "factorization": factorization,
        "row_shift": row_shift_check(p_wide, q_wide, 1, IDENTITY_ROWS, 1, cols),
    }


def _toeplitz_checks(
    p: LaurentWindow, q: LaurentWindow, config: RunConfig
) -> tuple[bool, dict[str, Any] | None]:
    """``T(Ap+Bq)`` and ``T(Aq+Bzp)`` over the grid; returns the first negative witness."""
    p_tilde = window_shift(p)
    for A in config.grid:
        for B in config.grid:
            for name, (u, v) in (("Ap+Bq", (p, q)), ("Aq+Bzp", (q, p_tilde))):
                window = combination_window(u, v, A, B, TOEPLITZ_SIZE)
                verdict = check_tnn(window, TOEPLITZ_ORDER)
                if not verdict.passed:
                    return False, {
                        "matrix": name,
                        "A": format_rational(A),
                        "B": format_rational(B),
                        **verdict.to_dict(),
                    }
    return True, None


def _hurwitz_checks(
    p: LaurentWindow,
    q: LaurentWindow,
    expected: bool,
    config: RunConfig,
    workers: int,
) -> tuple[Status, dict[str, Any], dict[str, Any] | None, str]:
    """Search ``H(p, q)``: returns status, checks, witness and note."""
    checks: dict[str, Any] = {}
    if expected:
        window = hurwitz_window(p, q, config.window)
        verdict = check_tnn(window, min(config.max_order, config.window), workers=workers)
        checks["hurwitz"] = verdict.to_dict()
        if not verdict.passed:
            return "fail", checks, verdict.to_dict(), "interlacing pair has a negative minor"
        nonzero = has_nonzero_minor_of_order(window, 2)
        checks["hurwitz_nonzero_order2"] = nonzero is not None
        if nonzero is None:
            return "fail", checks, None, "no nonzero minor of order 2 in the window"
        return "pass", checks, None, ""
    verdict, found = search_negative(
        lambda size: hurwitz_window(p, q, size),
        config.window,
        config.cap_window,
        config.cap_order,
        workers,
    )
    checks["hurwitz"] = verdict.to_dict()
    if not found:
        return "inconclusive", checks, None, (
            f"no negative minor up to {config.cap_window}x{config.cap_window}"
        )
    return "pass", checks, verdict.to_dict(), ""


def _evaluate_pair(inst: PolyPairInstance, index: int, config: RunConfig, workers: int) -> InstanceResult:
    checks: dict[str, Any] = {}
    s_verdict = check_interlacing(inst.p, inst.q)
    checks["interlacing"] = s_verdict.to_dict()
    if s_verdict.is_s_function != inst.expected:
        return InstanceResult(index, inst.label, "fail", inst.expected, checks,
                              s_verdict.to_dict(), "interlacing verdict disagrees with construction")
    sampler = ComplexSampler("upper", count=config.samples, seed=config.seed + index)
    sampled = sample_im_nonneg(RationalFunction(inst.q, inst.p), sampler, config.tol)
    checks["im_sampler"] = sampled.to_dict()

    p = poly_window(inst.p)
    q = poly_window(inst.q)
    identities = _identity_checks(p, q, config)
    checks.update(identities)
    if not all(identities.values()):
        return InstanceResult(index, inst.label, "fail", inst.expected, checks, None,
                              "structural identity does not hold")

    if inst.expected:
        if not sampled.passed:
            return InstanceResult(index, inst.label, "fail", True, checks, sampled.to_dict(),
                                  "Im z Im F(z) < 0 at a sample")
        residues = partial_fraction_residues(1, inst.q, inst.p)
        checks["residues"] = residues.to_dict()
        if not residues.all_positive:
            return InstanceResult(index, inst.label, "fail", True, checks, residues.to_dict(),
                                  "a partial-fraction coefficient is not positive")
        toeplitz_ok, witness = _toeplitz_checks(p, q, config)
        checks["toeplitz"] = toeplitz_ok
        if not toeplitz_ok:
            return InstanceResult(index, inst.label, "fail", True, checks, witness,
                                  "a Toeplitz combination has a negative minor")
        t_p = toeplitz_window(p, TOEPLITZ_SIZE)
        checks["toeplitz_p_nonzero_order2"] = has_nonzero_minor_of_order(t_p, 2) is not None

    status, hurwitz, witness, note = _hurwitz_checks(p, q, inst.expected, config, workers)
    checks.update(hurwitz)
    # H(p, q) with a nonzero order-2 minor and p != 0 forces one in T(p) too.
    if (
        status == "pass"
        and checks.get("hurwitz_nonzero_order2")
        and not p.is_zero
        and checks.get("toeplitz_p_nonzero_order2") is False
    ):
        return InstanceResult(index, inst.label, "fail", inst.expected, checks, None,
                              "T(p) has no nonzero minor of order 2")
    return InstanceResult(index, inst.label, status, inst.expected, checks, witness, note)


def _evaluate_two_sided(
    inst: TwoSidedInstance, index: int, config: RunConfig, workers: int
) -> InstanceResult:
    checks: dict[str, Any] = {}
    s_verdict = factor_ratio_verdict(inst.q, inst.p)
    checks["interlacing"] = s_verdict.to_dict()
    if s_verdict.is_s_function != inst.expected:
        return InstanceResult(index, inst.label, "fail", inst.expected, checks,
                              s_verdict.to_dict(), "two-sided chain verdict disagrees with construction")
    # Both sides are finite products, so the generated windows are exact Laurent polynomials.
    p = generate_product_form(inst.p, -config.cap_window, config.cap_window)
    q = generate_product_form(inst.q, -config.cap_window, config.cap_window)
    status, hurwitz, witness, note = _hurwitz_checks(p, q, inst.expected, config, workers)
    checks.update(hurwitz)
    return InstanceResult(index, inst.label, status, inst.expected, checks, witness, note)


def _evaluate_degenerate(inst: _Degenerate, index: int) -> InstanceResult:
    found = detect_geometric_degeneracy(inst.p, inst.q)
    checks: dict[str, Any] = {
        "degeneracy": None if found is None else [format_rational(x) for x in found]
    }
    p_range, q_range = hurwitz_ranges(1, 4, 1, 3)
    assert p_range is not None and q_range is not None
    if inst.p.lo <= p_range[0] and p_range[1] <= inst.p.hi:
        window = extract_window(HurwitzTypeView(inst.p, inst.q), 1, 4, 1, 3)
        checks["order2_all_zero"] = has_nonzero_minor_of_order(window, 2) is None
    return InstanceResult(index, inst.label, "skipped", None, checks, None,
                          "geometric coefficients: every order-2 minor vanishes")


def evaluate(inst: Instance, index: int, config: RunConfig, workers: int = 1) -> InstanceResult:
    """Run every check on one instance; input errors become failing results."""
    try:
        if isinstance(inst, _Degenerate):
            return _evaluate_degenerate(inst, index)
        if isinstance(inst, TwoSidedInstance):
            return _evaluate_two_sided(inst, index, config, workers)
        return _evaluate_pair(inst, index, config, workers)
    except GhurwitzError as exc:
        logger.debug("instance %s raised %s", inst.label, exc)
        return InstanceResult(index, inst.label, "inconclusive", getattr(inst, "expected", None),
                              note=f"{type(exc).__name__}: {exc}")


def run_equivalence_suite(config: RunConfig) -> HarnessReport:
    """Generate and check the equivalence instances.

    Instances are evaluated in parallel over ``config.threads`` workers; the
    report order is the instance order, so the result does not depend on the
    thread count.
    """
    instances = build_instances(config)
    logger.debug("equivalence suite: %d instances", len(instances))
    results = ordered_map(
        lambda item: evaluate(item[1], item[0], config),
        list(enumerate(instances)),
        config.threads,
    )
    return HarnessReport(SUITE, tuple(results), config.to_dict(), config.max_inconclusive)
