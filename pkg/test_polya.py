"""
Polya-sequence counting, projection, clamping and the genericity experiments
"""

from fractions import Fraction

import pytest

from core.errors import (CertificateError, DomainError, EnumerationTooLargeError, PreconditionError)
from family import Family, PolyaSequence, dependence_coefficients, polya_check
from polya import (ExperimentConfig, MultTuple, bounded_ceiling, bounded_degree, bounded_sequence_count, catalan,
                   clamp_exponents, clamp_sequence, count_polya, dependent_max_exponent_bound,
                   distinct_exponent_count, distinct_shift_probability, enumerate_polya, f_bound,
                   finite_shifted_power_bound, fixed_sequence_bound, genericity_sweep, monte_carlo_independence,
                   project_sequence, refined_sweep_bound, relation_bound_violations, require_relation_bound,
                   sample_shifts, sweep_bound)
from polya import experiments
from polya.experiments import bounded_sequences


class TestCounting:
    def test_known_counts(self):
        assert count_polya(3, 3) == 5
        assert count_polya(2, 2) == 2
        assert count_polya(1, 4) == 4

    @pytest.mark.parametrize("n", range(1, 11))
    def test_catalan_diagonal(self, n):
        assert count_polya(n, n) == catalan(n)

    @pytest.mark.parametrize("d", range(1, 9))
    def test_enumeration_matches_count(self, d):
        for s in range(1, d + 1):
            tuples = list(enumerate_polya(s, d))
            assert len(tuples) == count_polya(s, d)
            assert len(set(tuples)) == len(tuples)
            assert [t.m for t in tuples] == sorted((t.m for t in tuples), reverse=True)
            assert all(t.s == s and t.d == d and polya_check(t.to_sequence()) for t in tuples)

    def test_enumeration_order(self):
        assert [t.m for t in enumerate_polya(2, 2)] == [(1, 1), (0, 2)]

    def test_distinct_exponents(self):
        distinct = [t for t in enumerate_polya(3, 5) if t.to_sequence().has_distinct_exponents()]
        assert len(distinct) == distinct_exponent_count(3, 5) == 10

    def test_mult_tuple(self):
        e = PolyaSequence([2, 2, 0])
        mt = MultTuple.from_sequence(e, 3)
        assert mt.m == (1, 0, 2)
        assert mt.to_sequence() == e
        with pytest.raises(DomainError):
            MultTuple((2, 0))
        with pytest.raises(DomainError):
            MultTuple.from_sequence(e, 2)

    def test_range(self):
        with pytest.raises(DomainError):
            count_polya(4, 3)
        with pytest.raises(DomainError):
            list(enumerate_polya(0, 3))


class TestSequences:
    def test_bounded_degree(self):
        assert bounded_ceiling(4) == 6
        assert bounded_degree(4) == 7
        assert bounded_degree(3) == 3

    def test_projection(self):
        assert project_sequence(PolyaSequence([2, 2, 0])).exps == (1, 1)
        assert project_sequence(PolyaSequence([3, 2, 1, 0])).exps == (2, 1, 0)
        with pytest.raises(PreconditionError):
            project_sequence(PolyaSequence([5]))
        with pytest.raises(PreconditionError):
            project_sequence(PolyaSequence([1, 1, 1]))

    def test_clamp(self):
        assert clamp_sequence(PolyaSequence([100, 3, 2, 1])).exps == (6, 3, 2, 1)
        assert clamp_exponents([3, 9, 9, 0]) == [3, 6, 6, 0]

    def test_clamp_with_shifts(self):
        out = clamp_exponents([9, 9, 6, 0], shifts=[0, 0, 0, 1])
        assert out == [5, 4, 6, 0]
        assert clamp_exponents([9, 9, 6, 0], shifts=[0, 1, 0, 1]) == [5, 6, 6, 0]
        with pytest.raises(PreconditionError):
            clamp_exponents([9, 9, 6, 0], shifts=[2, 2, 2, 2])

    def test_clamp_keeps_small_sequences(self):
        assert clamp_exponents([6, 3, 2, 0]) == [6, 3, 2, 0]


class TestGenericity:
    def test_f_bound(self):
        assert f_bound(2) == 0
        assert f_bound(3) == 40
        assert f_bound(4) == 1980
        with pytest.raises(DomainError):
            f_bound(1)

    def test_bounds(self):
        assert fixed_sequence_bound(3, 100) == Fraction(94, 100)
        assert sweep_bound(4, 1980) == 0
        assert bounded_sequence_count(2) == 0
        assert bounded_sequence_count(4) == 165
        assert refined_sweep_bound(3, 100) == 1 - Fraction(4 * 6, 100)

    def test_dependent_max_exponent(self, dependent_triple):
        assert dependent_max_exponent_bound(dependent_triple)
        with pytest.raises(PreconditionError):
            dependent_max_exponent_bound(Family.from_pairs([(0, 1), (1, 1)]))

    def test_relation_bound(self, dependent_triple):
        assert relation_bound_violations([2, 2, 1], dependence_coefficients(dependent_triple)) == []
        assert relation_bound_violations([3, 3], [[1, -1]]) == [[0, 1]]
        require_relation_bound([2, 2, 1], [[1, -1, -4]])
        with pytest.raises(CertificateError):
            require_relation_bound([3, 3], [[1, -1]])

    def test_finite_shifted_powers(self):
        F = Family.from_pairs([(0, 2), (0, 1)])
        report = finite_shifted_power_bound(F, 2, [0, 1, 2, Fraction(1, 2)])
        assert report.members == [0]
        assert report.holds
        assert report.limit == 3
        with pytest.raises(PreconditionError):
            finite_shifted_power_bound(Family.from_pairs([(0, 0), (1, 1)]), 1, [0])


class TestExperiments:
    def test_dependent_trials_are_checked(self, monkeypatch):
        seen = []
        monkeypatch.setattr(experiments, 'require_relation_bound',
                            lambda exps, relations: seen.append((list(exps), len(relations))))
        cfg = ExperimentConfig(s=3, set_size=10, trials=20, seed=0)
        report = monte_carlo_independence(PolyaSequence([1, 1, 1]), cfg)
        assert report.independent == 0
        assert seen
        assert all(entry == ([1, 1, 1], 1) for entry in seen)

    def test_dependent_trials_respect_the_bound(self):
        cfg = ExperimentConfig(s=3, set_size=10, trials=20, seed=3)
        assert monte_carlo_independence(PolyaSequence([1, 1, 1]), cfg).independent == 0

    def test_sampling_is_reproducible(self):
        assert sample_shifts(7, 3, 4, 100) == sample_shifts(7, 3, 4, 100)
        assert all(0 <= a < 100 for a in sample_shifts(7, 3, 4, 100))

    def test_distinct_shift_probability(self):
        assert distinct_shift_probability(2, 10) == Fraction(9, 10)
        assert distinct_shift_probability(3, 2) == 0

    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_fixed_sequence(self, seed):
        cfg = ExperimentConfig(s=3, set_size=100, trials=2000, seed=seed)
        report = monte_carlo_independence(PolyaSequence([2, 2, 0]), cfg)
        assert report.passed
        assert report.frequency >= 0.94 - 3 * report.sigma
        data = report.to_dict()
        assert data['bound_exact'] == "47/50"
        assert data['exps'] == [2, 2, 0]

    def test_fixed_sequence_is_deterministic(self):
        cfg = ExperimentConfig(s=3, set_size=20, trials=100, seed=11)
        first = monte_carlo_independence(PolyaSequence([2, 2, 0]), cfg)
        second = monte_carlo_independence(PolyaSequence([2, 2, 0]), cfg)
        assert first.independent == second.independent

    def test_length_mismatch(self):
        cfg = ExperimentConfig(s=2, set_size=100, trials=10, seed=0)
        with pytest.raises(DomainError):
            monte_carlo_independence(PolyaSequence([2, 2, 0]), cfg)

    def test_config_validation(self):
        with pytest.raises(DomainError):
            ExperimentConfig(s=3, set_size=100, trials=0, seed=0)
        with pytest.raises(DomainError):
            ExperimentConfig(s=3, set_size=100, trials=10, seed=-1)

    def test_sweep_s2_is_vacuous(self):
        report = genericity_sweep(2, ExperimentConfig(s=2, set_size=100, trials=50, seed=0))
        assert report.frequency == 1.0
        assert report.passed
        assert report.to_dict()['checked_sequences'] == 0

    def test_sweep_s3(self):
        report = genericity_sweep(3, ExperimentConfig(s=3, set_size=100, trials=300, seed=5))
        assert report.sequences == 5
        assert report.extra['checked_sequences'] == 4
        assert report.passed

    def test_sweep_s4_is_vacuous_for_small_sets(self):
        report = genericity_sweep(4, ExperimentConfig(s=4, set_size=100, trials=5, seed=0))
        assert report.vacuous
        assert report.passed

    def test_sweep_limit(self):
        assert len(bounded_sequences(4, 200)) == 165 - 35
        with pytest.raises(EnumerationTooLargeError):
            bounded_sequences(5, 1000)
