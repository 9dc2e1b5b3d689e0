"""Unit tests for the property harnesses."""

import json
from dataclasses import replace

import pytest

from ghurwitz.analytic import SampleReport
from ghurwitz.config import RunConfig
from ghurwitz.errors import SpecError
from ghurwitz.generators.instances import StablePolyInstance, named_pairs, named_sector_instances
from ghurwitz.harness import (
    HarnessReport,
    InstanceResult,
    equivalence,
    quasi_stability,
    run_equivalence_suite,
    run_quasi_stability_suite,
    run_sector_suite,
    sector,
)
from ghurwitz.harness.common import ordered_map, search_negative
from ghurwitz.harness.equivalence import build_instances
from ghurwitz.realroots import RationalPoly
from ghurwitz.structmat import WindowMatrix


@pytest.fixture
def small_config() -> RunConfig:
    """A run small enough for unit tests."""
    return RunConfig(count=2, degree=3, window=6, cap_window=8, samples=100, seed=1)


def _by_label(report: HarnessReport) -> dict[str, InstanceResult]:
    return {result.label: result for result in report.instances}


# -- report --------------------------------------------------------------------------


class TestHarnessReport:
    """Tests for the suite aggregate."""

    def _report(self, *statuses: str, max_inconclusive: float = 0.02) -> HarnessReport:
        results = tuple(
            InstanceResult(k, f"case-{k}", status)  # type: ignore[arg-type]
            for k, status in enumerate(statuses)
        )
        return HarnessReport("equivalence", results, {"seed": 0}, max_inconclusive)

    def test_all_pass(self) -> None:
        report = self._report("pass", "pass", "skipped", "recorded")
        assert report.passed
        assert report.summary() == {
            "pass": 2, "fail": 0, "inconclusive": 0, "skipped": 1, "recorded": 1,
        }

    def test_failure_fails_the_run(self) -> None:
        report = self._report("pass", "fail")
        assert not report.passed
        assert [r.label for r in report.failures] == ["case-1"]

    def test_inconclusive_share_ignores_skipped(self) -> None:
        report = self._report("pass", "inconclusive", "skipped", "skipped")
        assert report.inconclusive_share == pytest.approx(0.5)
        assert not report.passed
        assert self._report("pass", "inconclusive", max_inconclusive=0.5).passed

    def test_empty_report(self) -> None:
        report = self._report()
        assert report.inconclusive_share == 0.0
        assert report.passed

    def test_json_is_canonical(self) -> None:
        data = json.loads(self._report("pass").to_json())
        assert data["suite"] == "equivalence"
        assert data["pass"] is True
        assert data["instances"][0]["label"] == "case-0"
        assert set(data) == {"suite", "pass", "summary", "inconclusive_share", "config", "instances"}


# -- common ------------------------------------------------------------------------


def test_ordered_map_keeps_order() -> None:
    items = list(range(20))
    assert ordered_map(lambda x: x * x, items, 4) == [x * x for x in items]
    assert ordered_map(lambda x: x * x, items, 1) == [x * x for x in items]


def test_search_negative_grows_to_cap() -> None:
    sizes: list[int] = []

    def build(size: int) -> WindowMatrix:
        sizes.append(size)
        return WindowMatrix.from_rows([[1 if i == j else 0 for j in range(size)] for i in range(size)])

    verdict, found = search_negative(build, 2, 9, 2)
    assert not found
    assert verdict.passed
    assert sizes == [2, 6, 9]


def test_search_negative_stops_at_first_witness(counterexample_window: WindowMatrix) -> None:
    verdict, found = search_negative(lambda size: counterexample_window, 4, 12, 2)
    assert found
    assert verdict.witness is not None
    assert verdict.witness.value == -5


# -- equivalence -------------------------------------------------------------------


@pytest.mark.slow
class TestEquivalenceSuite:
    """Tests for run_equivalence_suite."""

    def test_instance_order(self, small_config: RunConfig) -> None:
        labels = [inst.label for inst in build_instances(small_config)]
        assert labels[:3] == ["counterexample-3-4-1", "interlacing-8-6-1", "geometric-2-3"]
        assert labels[3:] == ["interlacing-0", "interlacing-1", "mutant-0", "mutant-1"]

    def test_two_sided_share(self) -> None:
        labels = [inst.label for inst in build_instances(RunConfig(count=4))]
        assert "two-sided-0" in labels
        assert "two-sided-mutant-0" in labels
        assert "two-sided-1" not in labels

    def test_named_instances(self, small_config: RunConfig) -> None:
        results = _by_label(run_equivalence_suite(small_config))
        counterexample = results["counterexample-3-4-1"]
        assert counterexample.status == "pass"
        assert counterexample.witness is not None
        assert counterexample.witness["rows"] == [1, 2]
        assert counterexample.witness["cols"] == [1, 2]
        assert counterexample.witness["value"] == "-5"
        assert results["interlacing-8-6-1"].status == "pass"
        assert results["interlacing-8-6-1"].checks["toeplitz_p_nonzero_order2"] is True
        assert results["geometric-2-3"].status == "skipped"
        assert results["geometric-2-3"].checks["order2_all_zero"] is True

    def test_no_failures(self, small_config: RunConfig) -> None:
        report = run_equivalence_suite(small_config)
        assert report.count("fail") == 0
        assert report.config["seed"] == 1

    def test_threads_do_not_change_the_report(self, small_config: RunConfig) -> None:
        single = run_equivalence_suite(small_config)
        threaded = run_equivalence_suite(replace(small_config, threads=2))
        assert single.to_json() == threaded.to_json()

    def test_full_scale(self) -> None:
        config = RunConfig(count=50, degree=5, window=8, cap_window=16, cap_order=3)
        report = run_equivalence_suite(config)
        assert report.count("fail") == 0
        assert all(r.status == "pass" for r in report.instances if r.label.startswith("interlacing-"))
        mutants = [r for r in report.instances if "mutant" in r.label]
        assert len(mutants) == 50
        inconclusive = [r for r in mutants if r.status == "inconclusive"]
        assert len(inconclusive) <= 0.02 * len(mutants)
        for result in mutants:
            if result.status == "pass":
                assert result.witness is not None
                assert len(result.witness["rows"]) <= 3
                assert result.witness["window"]["row_hi"] <= 16


def test_flat_toeplitz_of_p_fails_the_pair(
    small_config: RunConfig, monkeypatch: pytest.MonkeyPatch
) -> None:
    """H(p, q) has a nonzero minor of order 2, so T(p) must have one as well."""
    monkeypatch.setattr(
        equivalence,
        "toeplitz_window",
        lambda f, size: WindowMatrix.from_rows([[0] * size for _ in range(size)]),
    )
    inst = named_pairs()[1]
    result = equivalence.evaluate(inst, 1, small_config)
    assert result.status == "fail"
    assert result.checks["hurwitz_nonzero_order2"] is True
    assert result.checks["toeplitz_p_nonzero_order2"] is False
    assert result.note == "T(p) has no nonzero minor of order 2"


# -- quasi-stability ---------------------------------------------------------------


@pytest.mark.slow
class TestQuasiStabilitySuite:
    """Tests for run_quasi_stability_suite."""

    def test_named_polynomials(self, small_config: RunConfig) -> None:
        results = _by_label(run_quasi_stability_suite(small_config))
        assert results["cubic-z+1-z2+z+1"].status == "pass"
        assert results["z3+z"].status == "pass"
        unstable = results["z2-z+1"]
        assert unstable.status == "pass"
        assert unstable.expected is False
        assert unstable.witness is not None
        assert not (unstable.checks["modulus"]["pass"] and unstable.checks["rhp_mapping"]["pass"])

    def test_layout(self, small_config: RunConfig) -> None:
        report = run_quasi_stability_suite(small_config)
        labels = [result.label for result in report.instances]
        assert labels[3:] == ["stable-0", "unstable-1", "stable-laurent-0"]
        assert report.count("fail") == 0

    def test_deterministic(self, small_config: RunConfig) -> None:
        assert (
            run_quasi_stability_suite(small_config).to_json()
            == run_quasi_stability_suite(small_config).to_json()
        )

    def test_full_scale(self) -> None:
        config = RunConfig(
            command="quasi-stability", count=100, degree=8, window=10, max_order=4, samples=1000
        )
        report = run_quasi_stability_suite(config)
        assert report.count("fail") == 0
        generated = [r for r in report.instances if r.label.startswith(("stable-", "unstable-"))]
        assert len(generated) == 100 + 100 // quasi_stability.LAURENT_EVERY


class TestMissedViolation:
    """An unstable polynomial whose samples show no violation is not a pass."""

    @pytest.fixture
    def quiet_sampler(self, monkeypatch: pytest.MonkeyPatch) -> None:
        report = SampleReport(True, 0j, 0j, 1.0, 1, 0, 1e-9)
        monkeypatch.setattr(quasi_stability, "check_modulus_inequality", lambda *a, **k: report)
        monkeypatch.setattr(quasi_stability, "check_rhp_mapping", lambda *a, **k: report)

    @pytest.mark.usefixtures("quiet_sampler")
    def test_unmirrored_root_fails(self, small_config: RunConfig) -> None:
        inst = StablePolyInstance("z2-z+1", RationalPoly.of(1, -1, 1), False)
        result = quasi_stability.evaluate(inst, 0, small_config)
        assert result.status == "fail"
        assert result.witness is not None
        assert "missed" in result.note

    @pytest.mark.usefixtures("quiet_sampler")
    def test_mirrored_roots_are_inconclusive(self, small_config: RunConfig) -> None:
        inst = StablePolyInstance("mirrored", RationalPoly.from_roots([2, -2, -1]), False)
        result = quasi_stability.evaluate(inst, 0, small_config)
        assert result.status == "inconclusive"
        assert "mirrored" in result.note

    def test_unmirrored_roots(self) -> None:
        assert quasi_stability._unmirrored_roots(RationalPoly.from_roots([2, -2, -1])) == []
        assert len(quasi_stability._unmirrored_roots(RationalPoly.of(1, -1, 1))) == 2
        assert quasi_stability._unmirrored_roots(RationalPoly.from_roots([-1, -3])) == []


# -- sector ------------------------------------------------------------------------


@pytest.mark.slow
class TestSectorSuite:
    """Tests for run_sector_suite."""

    def test_named_instances(self) -> None:
        config = RunConfig(command="sector", count=2, degree=4, window=6, samples=100, M=3)
        results = _by_label(run_sector_suite(config))
        assert results["z-1"].status == "recorded"
        assert results["z3+1"].status == "pass"
        assert results["monomial-z5"].status == "skipped"

    def test_no_failures(self) -> None:
        config = RunConfig(command="sector", count=4, degree=4, window=6, samples=100, M=2)
        report = run_sector_suite(config)
        assert report.count("fail") == 0
        assert report.suite == "sector"

    def test_vanishing_components_enter_the_premise(self) -> None:
        config = RunConfig(command="sector", count=2, degree=4, window=6, samples=100, M=3)
        named = {inst.label: inst for inst in named_sector_instances()}
        cube = sector.evaluate(named["z3+1"], 2, config)
        assert cube.status == "pass"
        assert cube.checks["degenerate"] is True
        assert cube.checks["premise"]["nonzero_order2"] is True
        assert {"H(p1,p0)", "H(p2,p0)", "H(p2,p1)"} <= set(cube.checks["premise"])
        linear = sector.evaluate(named["z-1"], 1, config)
        assert linear.status == "recorded"
        assert linear.checks["degenerate"] is True
        assert linear.witness is not None
        assert linear.witness["pair"] == [1, 0]

    def test_needs_two_components(self) -> None:
        with pytest.raises(SpecError):
            run_sector_suite(RunConfig(command="sector", M=1))
