"""
Explicit families with exact dependence and dimension certificates
"""

import logging
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Sequence, Tuple

from algebra.polynomials import Poly, expand_shifted_power
from algebra.scalars import QQ, Scalar, cyclotomic_field
from core.errors import CertificateError, DomainError, PreconditionError
from family.polya_sequence import polya_check
from family.shifted_powers import Family, ShiftedPower, dimension

logger = logging.getLogger(__name__)


class DependenceCertificate:
    """sum coefficients_i (x - a_i)^(e_i) = target, re-verified whenever one is built"""

    def __init__(self, family: Family, coefficients: Sequence[Scalar], target: Poly = None):
        if len(coefficients) != family.s:
            raise CertificateError(f"{len(coefficients)} coefficients for {family.s} terms")
        self.family = family
        self.coefficients = [family.field.coerce(c) for c in coefficients]
        self.target = target if target is not None else Poly.zero(family.field)
        if not self.verify():
            raise CertificateError("Linear combination does not equal the stated target", s=family.s)

    def combination(self) -> Poly:
        total = Poly.zero(self.family.field)
        for c, f in zip(self.coefficients, self.family.expansions):
            if c:
                total = total + f.scale(c)
        return total

    def verify(self) -> bool:
        return self.combination() == self.target

    @property
    def is_relation(self) -> bool:
        """Nontrivial combination summing to zero"""
        return not self.target and any(self.coefficients)

    def __repr__(self) -> str:
        return f"DependenceCertificate(s={self.family.s}, target={self.target})"


def _unity_monomial_indices(k: int, d: int) -> List[int]:
    return [i for i in range(d + 1) if (i + 1) % k == 0]


def unity_identity(k: int, d: int, mu=1) -> DependenceCertificate:
    """sum_j xi^j (x + xi^j mu)^d = sum over i = -1 mod k of k binom(d, i) mu^i x^(d-i), over Q(xi_k)"""
    if k < 1 or d < 0:
        raise DomainError(f"Need k >= 1 and d >= 0, got k={k}, d={d}")
    mu = Fraction(mu)
    if not mu:
        raise DomainError("mu must be nonzero")
    field_ = cyclotomic_field(k)
    roots = [field_.root_power(j) for j in range(1, k + 1)]
    # x + xi^j mu is x - a with a = -xi^j mu
    family = Family([ShiftedPower(-r * mu, d) for r in roots], field_)
    target = Poly.zero(field_)
    for i in _unity_monomial_indices(k, d):
        target = target + Poly.monomial(d - i, k * comb(d, i) * mu ** i, field_)
    certificate = DependenceCertificate(family, roots, target)
    logger.debug(f"Roots-of-unity identity verified for k={k}, d={d}, mu={mu}")
    return certificate


def unity_dependence_family(k: int, d: int, mu=1) -> Family:
    """The k powers (x + xi^j mu)^d together with the monomials on the right-hand side"""
    return unity_dependence_certificate(k, d, mu).family


def unity_dependence_certificate(k: int, d: int, mu=1) -> DependenceCertificate:
    if k < 2:
        raise DomainError(f"Need k >= 2 for a dependent family, got {k}")
    identity = unity_identity(k, d, mu)
    field_ = identity.family.field
    mu = Fraction(mu)
    terms = list(identity.family.terms)
    coefficients = list(identity.coefficients)
    for i in _unity_monomial_indices(k, d):
        terms.append(ShiftedPower(field_.zero(), d - i))
        coefficients.append(field_.coerce(-k * comb(d, i) * mu ** i))
    family = Family(terms, field_)
    certificate = DependenceCertificate(family, coefficients)
    if dimension(family) >= family.s:
        raise CertificateError("Roots-of-unity family came out independent", k=k, d=d)
    return certificate


def lowdim_family(d: int) -> Tuple[Family, int]:
    """Odd monomials below d with the pairs (x +- 1)^i for even i in [(d+2)/2, d]; spans (3d+2)/4"""
    if d < 2 or d % 4 != 2:
        raise DomainError(f"Need d = 2 mod 4, got {d}", d=d)
    terms = [ShiftedPower(Fraction(0), i) for i in range(1, d, 2)]
    for i in range((d + 2) // 2, d + 1):
        if i % 2 == 0:
            terms.append(ShiftedPower(Fraction(-1), i))
            terms.append(ShiftedPower(Fraction(1), i))
    return Family(terms, QQ), (3 * d + 2) // 4


def pairing_identity_check(d: int, i: int) -> bool:
    """(x+1)^i - (x-1)^i = sum over odd j < i of 2 binom(i, j) x^j"""
    if i % 2 or not d + 2 <= 2 * i <= 2 * d:
        raise PreconditionError(f"Need i even with (d+2)/2 <= i <= d, got i={i}, d={d}", d=d, i=i)
    lhs = expand_shifted_power(-1, i) - expand_shifted_power(1, i)
    rhs = Poly.zero(QQ)
    for j in range(1, i, 2):
        rhs = rhs + Poly.monomial(j, 2 * comb(i, j))
    return lhs == rhs


def lowdim_report(d: int) -> Dict[str, Any]:
    family, expected = lowdim_family(d)
    dim = dimension(family)
    pairings = {i: pairing_identity_check(d, i) for i in range((d + 2) // 2, d + 1) if i % 2 == 0}
    return {
        'd': d,
        'size': family.s,
        'dim': dim,
        'expected_dim': expected,
        'matches': dim == expected,
        'polya': polya_check(family.polya_sequence()),
        'pairing_identities': pairings,
    }
