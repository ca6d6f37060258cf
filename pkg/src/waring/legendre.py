"""
Shifted Legendre polynomials and the real decomposition of H_(2d+1)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List

import numpy as np
import sympy as sp

from algebra.polynomials import Poly, count_real_roots
from algebra.scalars import QQ
from core.errors import DomainError, RootIsolationError
from linalg.matrix import normalize, nullspace
from .catalecticant import extract_Z, h_polynomial, hilbert_like_matrix

logger = logging.getLogger(__name__)


def shifted_legendre(n: int) -> Poly:
    """Monic degree-n polynomial orthogonal to 1, x, ..., x^(n-1) on [0, 1]"""
    if n < 0:
        raise DomainError(f"Degree must be non-negative, got {n}")
    coeffs = [Fraction((-1) ** (n + k) * comb(n, k) * comb(n + k, k)) for k in range(n + 1)]
    return Poly(QQ, coeffs).monic()


def legendre_kernel_identity(d: int) -> bool:
    """The transposed Hilbert-like matrix of H_(2d+1) has kernel spanned by shifted_legendre(d+1), which is squarefree"""
    if d < 0:
        raise DomainError(f"d must be non-negative, got {d}")
    M = hilbert_like_matrix(extract_Z(h_polynomial(d)), d)
    kernel = nullspace(M.transpose())
    F = shifted_legendre(d + 1)
    if len(kernel) != 1:
        logger.warning(f"Kernel of dimension {len(kernel)} for d={d}")
        return False
    return kernel[0] == normalize(list(F.coeffs)) and F.is_squarefree()


def _sympy_rational(value) -> sp.Rational:
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def isolate_roots(f: Poly, lo: float, hi: float, expected: int, precision: float) -> List[float]:
    """Roots in (lo, hi): exact Sturm count, then sympy's isolating intervals refined below precision"""
    found = count_real_roots(f, lo, hi)
    if found < expected:
        raise RootIsolationError(
            f"Found {found} real roots, expected {expected}", found=found, expected=expected)
    intervals = f.as_sympy().intervals(eps=_sympy_rational(precision), inf=_sympy_rational(lo),
                                       sup=_sympy_rational(hi))
    roots = sorted(float((a + b) / 2) for (a, b), _ in intervals)
    return [t for t in roots if lo < t < hi]


@dataclass
class RealDecomposition:
    """H_(2d+1) ~ sum weights_i (x + roots_i)^(2d+1) in floating point"""
    d: int
    roots: List[float]
    weights: List[float]
    residual: float


def real_decomposition(d: int, precision: float = 1e-14) -> RealDecomposition:
    if d < 0:
        raise DomainError(f"d must be non-negative, got {d}")
    D = 2 * d + 1
    roots = isolate_roots(shifted_legendre(d + 1), 0.0, 1.0, d + 1, precision)
    # column i holds the coefficients of (x + t_i)^D, low to high
    A = np.array([[comb(D, j) * t ** (D - j) for t in roots] for j in range(D + 1)], dtype=float)
    target = np.array([float(c) for c in h_polynomial(d).coeffs], dtype=float)
    weights, *_ = np.linalg.lstsq(A, target, rcond=None)
    residual = float(np.max(np.abs(A @ weights - target)))
    logger.debug(f"Real decomposition of H_{D}: residual {residual:.3e}")
    return RealDecomposition(d, roots, [float(w) for w in weights], residual)


def real_decomposition_residual(d: int, precision: float = 1e-14) -> float:
    """Max-norm coefficient residual of the floating-point decomposition; diagnostic only"""
    return real_decomposition(d, precision).residual
