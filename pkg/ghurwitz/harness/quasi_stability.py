"""Quasi-stability suite: Routh verdicts against Hurwitz-matrix total nonnegativity.

Polynomials are built from known factors, so the expected verdict is known
before any check runs. The exact Routh decision must agree with it, a stable
polynomial must have a TNN Hurwitz window that also passes the sampled
modulus and right-half-plane checks, and an unstable one must show a
negative minor and a violating sample. Two-sided series of the stable product
type are checked on a window of their Hurwitz matrix.
"""

from __future__ import annotations

import logging
import random
from typing import Any, Union

import numpy as np

from ghurwitz.analytic import (
    ComplexSampler,
    SampleReport,
    as_function,
    check_modulus_inequality,
    check_rhp_mapping,
    right_half_plane_roots,
)
from ghurwitz.config import RunConfig
from ghurwitz.errors import GhurwitzError
from ghurwitz.generators.instances import (
    StableLaurentInstance,
    StablePolyInstance,
    named_polynomials,
    quasi_stable_polynomial,
    stable_laurent,
    unstable_polynomial,
)
from ghurwitz.harness.common import hurwitz_window, ordered_map, poly_window, search_negative
from ghurwitz.harness.report import HarnessReport, InstanceResult
from ghurwitz.realroots import RationalPoly, hurwitz_split, routh_quasi_stability
from ghurwitz.specs import MatrixSpec, StableSeries
from ghurwitz.tnn import check_tnn

logger = logging.getLogger(__name__)

SUITE = "quasi-stability"

#: One generated series of the two-sided stable type per this many polynomials.
LAURENT_EVERY = 5

#: Relative size below which |f(-z0)| counts as a root of the mirror.
MIRROR_TOL = 1e-8

Instance = Union[StablePolyInstance, StableLaurentInstance]


def build_instances(config: RunConfig) -> list[Instance]:
    """Named polynomials, then ``count`` generated ones (half stable) and the Laurent series."""
    rng = random.Random(config.seed)
    instances: list[Instance] = list(named_polynomials())
    stable = config.count // 2
    for k in range(config.count):
        if k < stable:
            instances.append(quasi_stable_polynomial(rng, k, config.degree))
        else:
            instances.append(unstable_polynomial(rng, k, config.degree))
    for k in range(max(1, config.count // LAURENT_EVERY)):
        instances.append(stable_laurent(rng, k))
    return instances


def _sampled_checks(
    inst: StablePolyInstance, index: int, config: RunConfig
) -> tuple[SampleReport, SampleReport]:
    anchors = right_half_plane_roots(inst.f)
    sampler = ComplexSampler("right", count=config.samples, seed=config.seed + index)
    p, q = hurwitz_split(inst.f)
    modulus = check_modulus_inequality(inst.f, sampler, config.tol, anchors)
    mapping = check_rhp_mapping(p, q, sampler, config.tol, anchors)
    return modulus, mapping


def _unmirrored_roots(f: RationalPoly) -> list[complex]:
    """Right-half-plane roots ``z0`` with ``f(-z0) != 0``.

    Only these make ``|f(-z)| > |f(z)|`` somewhere in ``Re z > 0``; a root
    paired with its mirror cancels out of the modulus ratio.
    """
    roots = right_half_plane_roots(f)
    if not roots:
        return []
    points = np.asarray(roots, dtype=np.complex128)
    values = np.abs(as_function(f)(-points))
    scale = np.polyval(np.abs([float(c) for c in reversed(f.coeffs)]), np.abs(points))
    return [r for r, v, s in zip(roots, values, scale) if v > MIRROR_TOL * max(float(s), 1.0)]


def _evaluate_polynomial(
    inst: StablePolyInstance, index: int, config: RunConfig, workers: int
) -> InstanceResult:
    checks: dict[str, Any] = {"factors": list(inst.factors)}
    stable, certificate = routh_quasi_stability(inst.f)
    checks["routh"] = {"stable": stable, **certificate.to_dict()}
    if stable != inst.expected:
        return InstanceResult(index, inst.label, "fail", inst.expected, checks,
                              certificate.to_dict(), "Routh verdict disagrees with construction")

    modulus, mapping = _sampled_checks(inst, index, config)
    checks["modulus"] = modulus.to_dict()
    checks["rhp_mapping"] = mapping.to_dict()

    p, q = (poly_window(part) for part in hurwitz_split(inst.f))
    if inst.expected:
        window = hurwitz_window(p, q, config.window)
        verdict = check_tnn(window, min(config.max_order, config.window), workers=workers)
        checks["hurwitz"] = verdict.to_dict()
        if not verdict.passed:
            return InstanceResult(index, inst.label, "fail", True, checks, verdict.to_dict(),
                                  "quasi-stable polynomial has a negative Hurwitz minor")
        for name, report in (("modulus", modulus), ("rhp_mapping", mapping)):
            if not report.passed:
                return InstanceResult(index, inst.label, "fail", True, checks, report.to_dict(),
                                      f"{name} check violated by a quasi-stable polynomial")
        return InstanceResult(index, inst.label, "pass", True, checks)

    verdict, found = search_negative(
        lambda size: hurwitz_window(p, q, size),
        config.window,
        config.cap_window,
        config.cap_order,
        workers,
    )
    checks["hurwitz"] = verdict.to_dict()
    if not found:
        return InstanceResult(index, inst.label, "inconclusive", False, checks, None,
                              f"no negative minor up to {config.cap_window}x{config.cap_window}")
    if modulus.passed and mapping.passed:
        if _unmirrored_roots(inst.f):
            return InstanceResult(index, inst.label, "fail", False, checks, verdict.to_dict(),
                                  "sampled checks missed a right-half-plane root")
        return InstanceResult(index, inst.label, "inconclusive", False, checks, verdict.to_dict(),
                              "every right-half-plane root is mirrored by a root of h(-z)")
    return InstanceResult(index, inst.label, "pass", False, checks, verdict.to_dict())


def _evaluate_laurent(
    inst: StableLaurentInstance, index: int, config: RunConfig, workers: int
) -> InstanceResult:
    size = config.window
    matrix = MatrixSpec("hurwitz_of_f", (StableSeries(inst.spec),)).build(
        1, size, 1, size, exp_truncation=config.exp_truncation
    )
    verdict = check_tnn(matrix, min(config.max_order, size), workers=workers)
    checks: dict[str, Any] = {"hurwitz": verdict.to_dict()}
    if not verdict.passed:
        return InstanceResult(index, inst.label, "fail", True, checks, verdict.to_dict(),
                              "stable-type series has a negative Hurwitz minor")
    return InstanceResult(index, inst.label, "pass", True, checks)


def evaluate(inst: Instance, index: int, config: RunConfig, workers: int = 1) -> InstanceResult:
    try:
        if isinstance(inst, StableLaurentInstance):
            return _evaluate_laurent(inst, index, config, workers)
        return _evaluate_polynomial(inst, index, config, workers)
    except GhurwitzError as exc:
        logger.debug("instance %s raised %s", inst.label, exc)
        expected = inst.expected if isinstance(inst, StablePolyInstance) else True
        return InstanceResult(index, inst.label, "inconclusive", expected,
                              note=f"{type(exc).__name__}: {exc}")


def run_quasi_stability_suite(config: RunConfig) -> HarnessReport:
    """Generate and check the quasi-stability instances."""
    instances = build_instances(config)
    logger.debug("quasi-stability suite: %d instances", len(instances))
    results = ordered_map(
        lambda item: evaluate(item[1], item[0], config),
        list(enumerate(instances)),
        config.threads,
    )
    return HarnessReport(SUITE, tuple(results), config.to_dict(), config.max_inconclusive)
