"""Seeded instance generators for the harness suites."""

from ghurwitz.generators.instances import (
    PolyPairInstance,
    SectorInstance,
    StableLaurentInstance,
    StablePolyInstance,
    TwoSidedInstance,
    interlacing_pair,
    mutated_pair,
    named_pairs,
    named_polynomials,
    named_sector_instances,
    quasi_stable_polynomial,
    sector_instance,
    stable_laurent,
    two_sided_pair,
    unstable_polynomial,
)

__all__ = [
    "PolyPairInstance",
    "SectorInstance",
    "StableLaurentInstance",
    "StablePolyInstance",
    "TwoSidedInstance",
    "interlacing_pair",
    "mutated_pair",
    "named_pairs",
    "named_polynomials",
    "named_sector_instances",
    "quasi_stable_polynomial",
    "sector_instance",
    "stable_laurent",
    "two_sided_pair",
    "unstable_polynomial",
]
