"""
Normalized coefficients of a binary form and the Hankel matrices built from them
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Tuple

from algebra.polynomials import Poly, expand_shifted_power
from algebra.scalars import QQ
from core.errors import DomainError, FieldMismatchError
from linalg.matrix import Matrix, rank

logger = logging.getLogger(__name__)


def h_form(D: int) -> Poly:
    """(x + 1)^(D+1) - x^(D+1), of degree D"""
    if D < 0:
        raise DomainError(f"Degree must be non-negative, got {D}")
    return expand_shifted_power(-1, D + 1) - expand_shifted_power(0, D + 1)


def h_polynomial(d: int) -> Poly:
    """H_(2d+1) = (x + 1)^(2d+2) - x^(2d+2)"""
    if d < 0:
        raise DomainError(f"d must be non-negative, got {d}")
    return h_form(2 * d + 1)


@dataclass(frozen=True)
class CatalecticantProfile:
    """Z_i = coeff(x^(D-i) y^i) / binom(D, i) of the degree-D homogenization"""
    degree: int
    Z: Tuple[Fraction, ...]

    def hankel(self, r: int) -> Matrix:
        """(D - r + 1) x (r + 1) matrix with entry (i, j) = Z_(i+j)"""
        if not 0 <= r <= self.degree:
            raise DomainError(f"Hankel order {r} outside 0..{self.degree}")
        rows = [[self.Z[i + j] for j in range(r + 1)] for i in range(self.degree - r + 1)]
        return Matrix(rows, QQ)


def extract_Z(f: Poly) -> CatalecticantProfile:
    if not f:
        raise DomainError("The zero polynomial has no catalecticant profile")
    if f.field != QQ:
        raise FieldMismatchError("Catalecticant profiles are computed over the rationals")
    D = f.degree
    Z = tuple(Fraction(f.coeff(D - i)) / comb(D, i) for i in range(D + 1))
    return CatalecticantProfile(D, Z)


def hilbert_like_matrix(profile: CatalecticantProfile, d: int) -> Matrix:
    """The (d+2) x (d+1) matrix (Z_(i+j)) of a degree 2d+1 profile"""
    if profile.degree != 2 * d + 1:
        raise DomainError(f"Profile degree {profile.degree} is not 2d+1 = {2 * d + 1}")
    return profile.hankel(d)


def hankel_rank_bound(profile: CatalecticantProfile) -> Tuple[int, List[int]]:
    """Rank r0 of the middle catalecticant and the two possible Waring ranks {r0, D + 2 - r0}"""
    r0 = rank(profile.hankel(profile.degree // 2))
    return r0, sorted({r0, profile.degree + 2 - r0})
