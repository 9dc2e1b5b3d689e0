"""Sector suite: zero-free sectors from TNN Hurwitz-type matrices of the M-way split.

A Laurent polynomial ``f(z) = sum_{n<M} z^n p_n(z^M)`` whose matrices
``H(p_m, p_n)`` are TNN for every ``n < m`` has no zeros in ``|arg z| < pi/M``.
Instances satisfying the premise are asserted; the others are recorded with
their sector verdict so counterexamples to the converse stay visible.
"""

from __future__ import annotations

import logging
import random
from typing import Any

from ghurwitz.analytic import ComplexSampler, check_split_argument_bound, sector_check
from ghurwitz.config import RunConfig
from ghurwitz.errors import GhurwitzError, SpecError
from ghurwitz.generators.instances import SectorInstance, named_sector_instances, sector_instance
from ghurwitz.harness.common import hurwitz_window, ordered_map
from ghurwitz.harness.report import HarnessReport, InstanceResult
from ghurwitz.laurent import LaurentWindow, split_m_way
from ghurwitz.tnn import check_tnn, first_negative_contiguous_minor, has_nonzero_minor_of_order

logger = logging.getLogger(__name__)

SUITE = "sector"


def build_instances(config: RunConfig) -> list[SectorInstance]:
    rng = random.Random(config.seed)
    instances = named_sector_instances()
    instances.extend(sector_instance(rng, k, config.degree) for k in range(config.count))
    return instances


def _is_monomial(f: LaurentWindow) -> bool:
    return sum(1 for c in f.coeffs if c) == 1


def _premise(
    parts: list[LaurentWindow], config: RunConfig, workers: int
) -> tuple[bool, dict[str, Any], dict[str, Any] | None]:
    """Check every ``H(p_m, p_n)`` window; returns the verdict, per-pair checks and a witness."""
    checks: dict[str, Any] = {}
    size = config.window
    order = min(config.max_order, size)
    nonzero = False
    for m in range(len(parts)):
        for n in range(m):
            window = hurwitz_window(parts[m], parts[n], size)
            verdict = check_tnn(window, order, workers=workers)
            key = f"H(p{m},p{n})"
            checks[key] = verdict.to_dict()
            if not verdict.passed:
                return False, checks, {"pair": [m, n], **verdict.to_dict()}
            witness = first_negative_contiguous_minor(window, size)
            if witness is not None:
                return False, checks, {"pair": [m, n], "witness": witness.to_dict()}
            nonzero = nonzero or has_nonzero_minor_of_order(window, 2) is not None
    checks["nonzero_order2"] = nonzero
    return nonzero, checks, None


def evaluate(inst: SectorInstance, index: int, config: RunConfig, workers: int = 1) -> InstanceResult:
    """Check the premise on the split and the sector verdict on the roots."""
    if _is_monomial(inst.f):
        return InstanceResult(index, inst.label, "skipped", None,
                              note="monomial: no zeros off the origin")
    try:
        parts = split_m_way(inst.f, config.M)
        sector = sector_check(inst.f, config.M)
        checks: dict[str, Any] = {"sector": sector.to_dict()}
        # zero components take part in the premise like any other
        checks["degenerate"] = any(part.is_zero for part in parts)
        premise, premise_checks, witness = _premise(parts, config, workers)
        checks["premise"] = premise_checks
        if not premise:
            return InstanceResult(index, inst.label, "recorded", None, checks, witness,
                                  "premise fails; sector verdict recorded only")
        if not sector.passed:
            return InstanceResult(index, inst.label, "fail", True, checks, sector.to_dict(),
                                  "a root lies inside the sector")
        sampler = ComplexSampler("wedge", count=config.samples, seed=config.seed + index)
        bound = check_split_argument_bound(inst.f, config.M, sampler, config.tol)
        checks["argument_bound"] = bound.to_dict()
        if not bound.passed:
            return InstanceResult(index, inst.label, "fail", True, checks, bound.to_dict(),
                                  "argument bound of the split is violated")
        return InstanceResult(index, inst.label, "pass", True, checks)
    except GhurwitzError as exc:
        logger.debug("instance %s raised %s", inst.label, exc)
        return InstanceResult(index, inst.label, "inconclusive", None,
                              note=f"{type(exc).__name__}: {exc}")


def run_sector_suite(config: RunConfig) -> HarnessReport:
    """Generate and check the sector instances.

    Raises:
        SpecError: If ``config.M < 2``.
    """
    if config.M < 2:
        raise SpecError(f"the sector suite needs M >= 2, got {config.M}")
    instances = build_instances(config)
    logger.debug("sector suite: %d instances, M = %d", len(instances), config.M)
    results = ordered_map(
        lambda item: evaluate(item[1], item[0], config),
        list(enumerate(instances)),
        config.threads,
    )
    return HarnessReport(SUITE, tuple(results), config.to_dict(), config.max_inconclusive)
