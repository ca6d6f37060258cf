"""
Waring rank of binary forms and the H polynomials
"""

import random
from fractions import Fraction

import pytest

from algebra.polynomials import Poly, count_real_roots, expand_shifted_power
from algebra.scalars import QQ
from core.errors import DomainError, RootIsolationError
from waring import (binary_squarefree, extract_Z, h_form, h_polynomial, hankel_rank_bound, hilbert_like_matrix,
                    legendre_kernel_identity, real_decomposition, real_decomposition_residual, shifted_legendre,
                    waring_rank)
from waring.legendre import isolate_roots


def test_h_polynomial():
    assert h_polynomial(0).coeffs == (1, 2)
    assert h_polynomial(1) == h_form(3)
    assert h_polynomial(3).degree == 7


def test_catalecticant_profile():
    profile = extract_Z(expand_shifted_power(1, 3))
    assert profile.Z == (1, -1, 1, -1)
    M = hilbert_like_matrix(extract_Z(h_polynomial(2)), 2)
    assert M.shape == (4, 3)
    with pytest.raises(DomainError):
        hilbert_like_matrix(profile, 2)


def test_shifted_legendre():
    assert shifted_legendre(1).coeffs == (Fraction(-1, 2), 1)
    assert shifted_legendre(2).coeffs == (Fraction(1, 6), -1, 1)
    for n in range(1, 8):
        assert shifted_legendre(n).is_squarefree()


@pytest.mark.parametrize("d", range(1, 7))
def test_legendre_kernel(d):
    assert legendre_kernel_identity(d)


@pytest.mark.parametrize("d", range(1, 7))
def test_h_polynomial_rank(d):
    certificate = waring_rank(h_polynomial(d))
    assert certificate.rank == d + 1
    assert certificate.squarefree
    assert certificate.real_roots_exact
    assert hankel_rank_bound(extract_Z(h_polynomial(d)))[0] == d + 1


@pytest.mark.parametrize("d", range(1, 6))
def test_even_degree_rank(d):
    assert waring_rank(h_form(2 * d)).rank == d + 1


def test_pure_powers():
    for f in (expand_shifted_power(1, 5), Poly.monomial(5)):
        certificate = waring_rank(f)
        assert certificate.rank == 1
    assert waring_rank(Poly.monomial(5)).root_at_infinity is False


def test_binary_squarefree():
    # degree below r - 1 means a double root at infinity
    assert not binary_squarefree(Poly.constant(1), 2)
    assert binary_squarefree(Poly.monomial(1), 1)
    assert not binary_squarefree(expand_shifted_power(1, 2), 2)


def test_rank_rejects_constants():
    with pytest.raises(DomainError):
        waring_rank(Poly.constant(3))


@pytest.mark.parametrize("d", range(1, 5))
def test_real_decomposition(d):
    decomposition = real_decomposition(d)
    assert len(decomposition.roots) == d + 1
    assert all(0 < t < 1 for t in decomposition.roots)
    assert real_decomposition_residual(d) <= 1e-8


@pytest.mark.parametrize("seed", range(6))
def test_pure_power_at_random_shift(seed):
    rng = random.Random(seed)
    a = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
    certificate = waring_rank(expand_shifted_power(a, rng.randint(1, 7)))
    assert certificate.rank == 1
    assert not certificate.root_at_infinity


@pytest.mark.parametrize("seed", range(6))
def test_rank_is_translation_invariant(seed):
    rng = random.Random(50 + seed)
    D = rng.randint(2, 6)
    f = Poly.zero()
    while f.degree != D:
        f = Poly.zero()
        for _ in range(rng.randint(1, 3)):
            f = f + expand_shifted_power(rng.randint(-4, 4), D).scale(rng.choice([-2, -1, 1, 3]))
    c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    assert waring_rank(f.translate(c)).rank == waring_rank(f).rank


def test_root_at_infinity_with_wide_kernel():
    # x^3 + x^2: the kernel at r = 3 has dimension 3 and forms of full degree
    certificate = waring_rank(Poly(QQ, [0, 0, 1, 1]))
    assert certificate.rank == 3
    assert certificate.kernel_dimension == 3
    assert certificate.root_at_infinity is False
    assert certificate.certificate_poly[-1] != 0


def test_root_at_infinity_is_forced():
    # x^5 + 1 needs the constant summand
    certificate = waring_rank(Poly.monomial(5) + Poly.constant(1))
    assert certificate.rank == 2
    assert certificate.root_at_infinity is True
    assert certificate.requires_pure_power


@pytest.mark.parametrize("n", range(1, 9))
def test_shifted_legendre_roots_in_unit_interval(n):
    assert count_real_roots(shifted_legendre(n), 0, 1) == n


def test_isolate_roots():
    roots = isolate_roots(shifted_legendre(3), 0.0, 1.0, 3, 1e-12)
    assert len(roots) == 3
    assert abs(roots[1] - 0.5) < 1e-10
    with pytest.raises(RootIsolationError):
        isolate_roots(shifted_legendre(3), 0.0, 1.0, 4, 1e-12)
