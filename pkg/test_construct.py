"""
Explicit dependent and low-dimensional families, and the counterexample probes
"""

from fractions import Fraction

import pytest

from algebra.polynomials import Poly
from core.errors import CertificateError, DomainError, PreconditionError
from core.serialization import certificate_from_json, certificate_to_json
from construct import (DependenceCertificate, ProbeParams, conjecture_probe, lowdim_family, lowdim_report,
                       pairing_identity_check, sample_family, shift_grid, unity_dependence_certificate,
                       unity_dependence_family, unity_identity)
from construct import probes
from family import Family, dimension, gmk_condition, polya_check


class TestUnityIdentity:
    def test_k2_d3(self):
        certificate = unity_identity(2, 3)
        assert certificate.target == Poly(certificate.family.field, [2, 0, 6])

    def test_k1_is_a_single_power(self):
        certificate = unity_identity(1, 4, 3)
        assert certificate.family.s == 1
        assert certificate.verify()

    @pytest.mark.parametrize("mu", [1, Fraction(1, 2), -2])
    @pytest.mark.parametrize("k", range(2, 5))
    def test_identity_small(self, k, mu):
        for d in range(0, 9):
            assert unity_identity(k, d, mu).verify()

    @pytest.mark.slow
    @pytest.mark.parametrize("mu", [1, Fraction(1, 2), -2])
    @pytest.mark.parametrize("k", range(1, 7))
    def test_identity_full_range(self, k, mu):
        for d in range(0, 21):
            assert unity_identity(k, d, mu).verify()

    def test_rejects_zero_mu(self):
        with pytest.raises(DomainError):
            unity_identity(3, 4, 0)


class TestUnityFamily:
    @pytest.mark.parametrize("k, d", [(3, 9), (4, 16)])
    def test_dependent_gmk_families(self, k, d):
        certificate = unity_dependence_certificate(k, d)
        F = certificate.family
        assert certificate.is_relation
        assert dimension(F) < F.s
        assert gmk_condition(F.polya_sequence())

    def test_d4_breaks_gmk(self):
        F = unity_dependence_family(2, 4)
        assert sorted(F.exponents, reverse=True) == [4, 4, 3, 1]
        assert not gmk_condition(F.polya_sequence())
        assert dimension(F) < F.s

    def test_needs_two_roots(self):
        with pytest.raises(DomainError):
            unity_dependence_certificate(1, 4)

    def test_certificate_round_trip(self):
        certificate = unity_dependence_certificate(3, 5)
        restored = certificate_from_json(certificate_to_json(certificate))
        assert restored.family == certificate.family
        assert restored.is_relation


class TestCertificates:
    def test_wrong_coefficients(self, dependent_triple):
        with pytest.raises(CertificateError):
            DependenceCertificate(dependent_triple, [1, 1, -4])
        with pytest.raises(CertificateError):
            DependenceCertificate(dependent_triple, [1, -1])

    def test_relation(self, dependent_triple):
        certificate = DependenceCertificate(dependent_triple, [1, -1, -4])
        assert certificate.is_relation
        assert not certificate.combination()


class TestLowDimensional:
    @pytest.mark.parametrize("d, dim", [(2, 2), (6, 5), (10, 8), (14, 11)])
    def test_dimensions(self, d, dim):
        F, expected = lowdim_family(d)
        assert expected == dim
        assert dimension(F) == dim
        assert polya_check(F.polya_sequence())

    def test_report(self):
        report = lowdim_report(6)
        assert report['matches']
        assert report['size'] == 7
        assert report['pairing_identities'] == {4: True, 6: True}

    def test_pairing_identities(self):
        assert pairing_identity_check(2, 2)
        assert pairing_identity_check(6, 4)
        with pytest.raises(PreconditionError):
            pairing_identity_check(6, 3)
        with pytest.raises(PreconditionError):
            pairing_identity_check(6, 2)

    def test_rejects_other_degrees(self):
        with pytest.raises(DomainError):
            lowdim_family(4)


class TestConjectureSearch:
    def test_dependent_samples_meet_the_exponent_bound(self, dependent_triple, monkeypatch):
        assert probes._dependent(dependent_triple)
        assert not probes._dependent(Family.from_pairs([(0, 1), (1, 1)]))

        def reject(exps, relations):
            raise CertificateError("rejected", exps=exps)

        monkeypatch.setattr(probes, 'require_relation_bound', reject)
        with pytest.raises(CertificateError):
            probes._dependent(dependent_triple)

    def test_grid(self):
        assert len(shift_grid(1)) == 9
        assert len(shift_grid(3)) == 1 + 3 * 3

    def test_sampling_is_reproducible(self):
        params = ProbeParams(s=3)
        assert sample_family("bigexp", params, 4, 10) == sample_family("bigexp", params, 4, 10)

    def test_bigexp_search_is_deterministic(self):
        params = ProbeParams(s=3, samples=25)
        first = conjecture_probe("bigexp", params, seed=7)
        second = conjecture_probe("bigexp", params, seed=7)
        assert first.to_dict() == second.to_dict()
        assert first.checked + first.skipped == 25

    def test_gmk_search(self):
        report = conjecture_probe("gmk", ProbeParams(s=2, d=3, samples=20), seed=1)
        assert report.checked + report.skipped == 20
        if report.counterexample is not None:
            assert report.counterexample.is_relation
        assert report.to_dict()['note'] == "experimental evidence, not a proof"

    def test_cyclotomic_search(self):
        report = conjecture_probe("bigexp", ProbeParams(s=2, conductor=3, samples=10), seed=0)
        assert report.status in ("counterexample found", "no counterexample found")

    def test_known_witness(self):
        report = conjecture_probe("bigexp", ProbeParams(s=4, a=1, b=-2, samples=5), seed=0)
        assert report.known_witness['d'] == 1

    def test_invalid_requests(self):
        with pytest.raises(DomainError):
            conjecture_probe("other", ProbeParams(s=2), seed=0)
        with pytest.raises(DomainError):
            conjecture_probe("gmk", ProbeParams(s=5, d=4), seed=0)
        with pytest.raises(DomainError):
            ProbeParams(s=6)
        with pytest.raises(DomainError):
            ProbeParams(s=2, conductor=9)
