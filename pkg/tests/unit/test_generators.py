"""Unit tests for the seeded instance generators."""

import random
from fractions import Fraction

import pytest

from ghurwitz.generators.instances import (
    DENOMINATORS,
    distinct_values,
    geometric_windows,
    interlacing_chain,
    interlacing_pair,
    mutated_pair,
    named_pairs,
    named_polynomials,
    named_sector_instances,
    quasi_stable_polynomial,
    random_rational,
    sector_instance,
    stable_laurent,
    two_sided_pair,
    unstable_polynomial,
)
from ghurwitz.realroots import check_interlacing, routh_quasi_stability

# -- values ------------------------------------------------------------------------


def test_random_rational_range() -> None:
    rng = random.Random(0)
    for _ in range(200):
        value = random_rational(rng)
        assert 0 < value <= 8
        assert value.denominator in DENOMINATORS


def test_distinct_values_sorted() -> None:
    values = distinct_values(random.Random(1), 5)
    assert len(set(values)) == 5
    assert values == sorted(values)


# -- pairs -------------------------------------------------------------------------


class TestInterlacingPairs:
    """Tests for the interlacing and mutated pair generators."""

    def test_chain_alternates(self) -> None:
        rng = random.Random(2)
        for _ in range(50):
            chain = interlacing_chain(rng, 5)
            kinds = [kind for _, kind in chain]
            assert kinds == ["zero" if k % 2 == 0 else "pole" for k in range(len(chain))]
            magnitudes = [m for m, _ in chain]
            assert magnitudes == sorted(magnitudes)

    def test_seed_fixes_the_instance(self) -> None:
        assert interlacing_pair(random.Random(9), 0, 4) == interlacing_pair(random.Random(9), 0, 4)

    def test_degree_respects_limit(self) -> None:
        rng = random.Random(3)
        for index in range(60):
            instance = interlacing_pair(rng, index, 3)
            assert instance.label == f"interlacing-{index}"
            assert instance.expected
            assert len(instance.chain) <= 3

    def test_generated_pairs_are_s_functions(self) -> None:
        rng = random.Random(5)
        for index in range(40):
            instance = interlacing_pair(rng, index, 4)
            assert check_interlacing(instance.p, instance.q).is_s_function

    def test_mutants_cover_every_mutation(self) -> None:
        rng = random.Random(6)
        mutations = set()
        for index in range(80):
            instance = mutated_pair(rng, index, 4)
            assert instance.label == f"mutant-{index}"
            assert not instance.expected
            assert instance.p.coeffs[0] != 0
            mutations.add(instance.mutation)
        assert mutations == {"swap", "relabel", "positive_root"}

    def test_to_dict(self) -> None:
        data = mutated_pair(random.Random(1), 3, 4).to_dict()
        assert data["label"] == "mutant-3"
        assert set(data) == {"label", "p", "q", "mutation"}


def test_named_pairs() -> None:
    counterexample, interlacing = named_pairs()
    assert counterexample.label == "counterexample-3-4-1"
    assert not counterexample.expected
    assert interlacing.expected
    assert check_interlacing(interlacing.p, interlacing.q).is_s_function
    assert not check_interlacing(counterexample.p, counterexample.q).is_s_function


def test_geometric_windows() -> None:
    p, q = geometric_windows()
    assert (p.lo, p.hi) == (-3, 3)
    assert p.coefficient(-3) == Fraction(1, 8)
    assert q.coefficient(2) == 12
    assert not p.lower_closed
    assert not q.upper_closed


class TestTwoSidedPairs:
    """Tests for two_sided_pair."""

    def test_labels(self) -> None:
        rng = random.Random(7)
        assert two_sided_pair(rng, 0).label == "two-sided-0"
        mutant = two_sided_pair(rng, 1, mutate=True)
        assert mutant.label == "two-sided-mutant-1"
        assert not mutant.expected

    def test_negative_side_present(self) -> None:
        rng = random.Random(8)
        for index in range(30):
            instance = two_sided_pair(rng, index)
            assert instance.q.neg_zeros
            assert all(v > 0 for v in instance.p.neg_zeros + instance.q.neg_zeros)


# -- quasi-stability ----------------------------------------------------------------


class TestPolynomials:
    """Tests for the quasi-stability generators."""

    def test_stable_polynomials_pass_routh(self) -> None:
        rng = random.Random(11)
        for index in range(40):
            instance = quasi_stable_polynomial(rng, index, 6)
            assert instance.label == f"stable-{index}"
            assert 1 <= instance.f.degree <= 6
            assert routh_quasi_stability(instance.f)[0]

    def test_unstable_polynomials_fail_routh(self) -> None:
        rng = random.Random(12)
        for index in range(40):
            instance = unstable_polynomial(rng, index, 6)
            assert instance.label == f"unstable-{index}"
            assert instance.factors[-1].startswith("unstable-")
            assert not routh_quasi_stability(instance.f)[0]

    def test_unstable_degree_one(self) -> None:
        instance = unstable_polynomial(random.Random(0), 0, 1)
        assert instance.f.degree == 1
        assert instance.f.coeffs[0] < 0

    @pytest.mark.parametrize("instance", named_polynomials(), ids=lambda i: i.label)
    def test_named(self, instance: object) -> None:
        assert routh_quasi_stability(instance.f)[0] is instance.expected  # type: ignore[attr-defined]


def test_stable_laurent_has_negative_side() -> None:
    rng = random.Random(13)
    for index in range(30):
        instance = stable_laurent(rng, index)
        assert instance.label == f"stable-laurent-{index}"
        assert instance.spec.neg_real_zeros or instance.spec.neg_complex_zeros
        assert -1 <= instance.spec.r <= 1


# -- sector ---------------------------------------------------------------------------


def test_sector_instances() -> None:
    rng = random.Random(14)
    for index in range(30):
        instance = sector_instance(rng, index, 5)
        assert instance.label == f"sector-{index}"
        assert -2 <= instance.f.lo <= 0
        assert instance.f.finite_support


def test_named_sector_instances() -> None:
    labels = [instance.label for instance in named_sector_instances()]
    assert labels == ["binomial-6", "z-1", "z3+1", "monomial-z5"]
    binomial = named_sector_instances()[0].f
    assert binomial.coefficient(3) == 20
