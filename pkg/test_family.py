"""
Families of shifted powers: span, exponent conditions and witnesses
"""

from fractions import Fraction

import pytest

from algebra.polynomials import Poly
from core.errors import DomainError, DuplicateNodeError, PreconditionError
from family import (Family, PolyaSequence, ShiftedPower, atkinson_sharma_condition, big_exponent_conditions,
                    complex_polya_lower_bound, dependence_coefficients, dimension, gmk_condition, is_independent,
                    jordan_condition, jordan_family, max_independent_subfamily, odd_sequences, polya_check,
                    real_halfplus_witness, real_top_exponent_witness, sqrt_witness, wronskian)


class TestSpan:
    def test_dependent_triple(self, dependent_triple):
        assert dimension(dependent_triple) == 2
        assert not is_independent(dependent_triple)
        assert dependence_coefficients(dependent_triple) == [[1, -1, -4]]

    def test_max_independent_subfamily(self, dependent_triple):
        sub = max_independent_subfamily(dependent_triple)
        assert sub.s == 2
        assert is_independent(sub)
        assert sub.terms == dependent_triple.terms[:2]

    def test_monomials(self):
        F = Family.from_pairs([(0, e) for e in range(5)])
        assert is_independent(F)
        assert wronskian(F) != Poly.zero()

    def test_wronskian(self, dependent_triple):
        F = Family.from_pairs([(0, 0), (0, 1), (0, 2)])
        assert wronskian(F) == Poly.constant(2)
        assert wronskian(dependent_triple) == Poly.zero()

    def test_duplicate_terms(self):
        with pytest.raises(DuplicateNodeError):
            Family.from_pairs([(1, 2), (Fraction(2, 2), 2)])

    def test_invalid_terms(self):
        with pytest.raises(DomainError):
            Family([])
        with pytest.raises(DomainError):
            Family([ShiftedPower(0, -1)])

    def test_translation_keeps_dimension(self, dependent_triple):
        assert dimension(dependent_triple.translate(Fraction(7, 3))) == 2

    def test_cyclotomic_shifts(self, q4):
        xi = q4.gen()
        F = Family([ShiftedPower(xi, 2), ShiftedPower(-xi, 2), ShiftedPower(0, 1)], q4)
        assert dimension(F) == 2
        assert not F.has_rational_shifts()
        with pytest.raises(PreconditionError):
            F.require_rational_shifts("test")


class TestExponentConditions:
    def test_polya(self):
        assert polya_check(PolyaSequence([2, 2, 0]))
        assert polya_check(PolyaSequence([1, 1]))
        assert not polya_check(PolyaSequence([1, 1, 1]))
        assert not polya_check(PolyaSequence([0, 0]))

    def test_counts(self):
        e = PolyaSequence([3, 0, 3, 1])
        assert e.exps == (3, 3, 1, 0)
        assert [e.n(i) for i in range(1, 6)] == [1, 2, 2, 4, 4]
        assert PolyaSequence.from_mults(e.mults) == e

    def test_gmk(self):
        assert not gmk_condition(PolyaSequence([4, 4, 3, 1]))
        assert gmk_condition(PolyaSequence([3, 3]))

    def test_atkinson_sharma(self):
        assert atkinson_sharma_condition(Family.from_pairs([(0, 0), (0, 1), (0, 2)]))
        assert atkinson_sharma_condition(Family.from_pairs([(0, 1), (1, 1)]))
        assert not atkinson_sharma_condition(Family.from_pairs([(0, 0), (1, 0)]))

    def test_odd_sequences(self, polya_cubes):
        records = odd_sequences(polya_cubes)
        assert [(r.min, r.max) for r in records] == [(0, 0), (3, 3), (3, 3), (3, 3)]

    def test_jordan(self):
        towers = [(0, 2), (1, 3)]
        assert jordan_condition(3, towers)
        F = jordan_family(3, towers)
        assert F.s == 3
        assert is_independent(F)
        with pytest.raises(DuplicateNodeError):
            jordan_condition(3, [(0, 2), (0, 3)])
        with pytest.raises(DomainError):
            jordan_family(3, [(0, 4)])

    def test_big_exponents(self):
        F = Family.from_pairs([(0, 2), (1, 2), (2, 2)])
        report = big_exponent_conditions(F)
        assert report.real_rule
        assert not report.complex_rule
        assert report.independence_asserted
        assert report.dimension_lower_bound == 3
        assert is_independent(F)

    def test_complex_polya_lower_bound(self):
        assert complex_polya_lower_bound(1) == 0
        assert complex_polya_lower_bound(5) == 2


class TestWitnesses:
    def test_sqrt(self, polya_cubes):
        witness = sqrt_witness(polya_cubes)
        assert witness.s == 3
        assert is_independent(witness)

    def test_top_exponent(self, polya_cubes):
        witness = real_top_exponent_witness(polya_cubes)
        assert witness.s == 2
        assert witness.exponents == [3, 3]

    def test_halfplus(self, polya_cubes):
        witness = real_halfplus_witness(polya_cubes)
        assert witness.s >= polya_cubes.s // 2 + 1
        assert is_independent(witness)

    def test_needs_polya(self):
        F = Family.from_pairs([(0, 1), (1, 1), (2, 1)])
        with pytest.raises(PreconditionError):
            sqrt_witness(F)

    def test_needs_real_shifts(self, q4):
        F = Family([ShiftedPower(q4.gen(), 1), ShiftedPower(0, 1)], q4)
        with pytest.raises(PreconditionError):
            real_halfplus_witness(F)
        with pytest.raises(PreconditionError):
            atkinson_sharma_condition(F)
