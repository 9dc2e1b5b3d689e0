"""Property harnesses checking the TNN equivalences on generated instances."""

from ghurwitz.harness.equivalence import run_equivalence_suite
from ghurwitz.harness.quasi_stability import run_quasi_stability_suite
from ghurwitz.harness.report import HarnessReport, InstanceResult, Status
from ghurwitz.harness.sector import run_sector_suite

__all__ = [
    "HarnessReport",
    "InstanceResult",
    "Status",
    "run_equivalence_suite",
    "run_quasi_stability_suite",
    "run_sector_suite",
]
