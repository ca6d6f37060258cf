"""
Waring rank of a univariate polynomial through its binary homogenization

Sylvester's criterion: the rank is the smallest r for which the kernel of the
catalecticant with r + 1 columns holds a squarefree binary form g. A kernel vector
(g_0, ..., g_r) is read as g(v) = sum g_j v^j; each root t gives a summand (x + t)^D,
and a missing top coefficient (deg g = r - 1) is the root at infinity, which
contributes a constant (pure y^D) summand.
"""

import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np

from algebra.polynomials import Poly, count_real_roots
from algebra.scalars import QQ
from core.errors import CertificateError, DomainError
from linalg.matrix import nullspace
from .catalecticant import extract_Z, hankel_rank_bound

logger = logging.getLogger(__name__)

DEFAULT_ATTEMPTS = 64
DEFAULT_SEED = 0
COMBINATION_RANGE = 3


@dataclass
class WaringCertificate:
    rank: int
    certificate_poly: List[Fraction]
    squarefree: bool
    root_at_infinity: bool
    real_roots_numeric: bool
    real_roots_exact: bool
    catalecticant_rank: int
    candidate_ranks: List[int]
    kernel_dimension: int
    residual: Optional[float] = None
    roots: List[float] = field(default_factory=list)

    @property
    def requires_pure_power(self) -> bool:
        return self.root_at_infinity

    def to_dict(self) -> Dict[str, Any]:
        payload = asdict(self)
        payload['certificate_poly'] = [str(c) for c in self.certificate_poly]
        payload['requires_pure_power'] = self.requires_pure_power
        return payload


def binary_squarefree(g: Poly, r: int) -> bool:
    """The degree-r binary form with dehomogenization g has r distinct roots on the projective line"""
    if not g or g.degree < r - 1:
        return False
    return g.degree == 0 or g.is_squarefree()


def _cauchy_bound(g: Poly) -> Fraction:
    lead = abs(g.leading())
    return 1 + max((abs(c) / lead for c in g.coeffs[:-1]), default=Fraction(0))


def _real_root_flags(g: Poly, tolerance: float = 1e-9) -> Dict[str, Any]:
    if g.degree < 1:
        return {'real_roots_numeric': True, 'real_roots_exact': True, 'roots': []}
    bound = _cauchy_bound(g)
    exact = count_real_roots(g, -bound, bound) == g.degree
    approx = np.roots([float(c) for c in reversed(g.coeffs)])
    numeric = bool(np.all(np.abs(approx.imag) <= tolerance * max(1.0, float(np.max(np.abs(approx))))))
    roots = sorted(float(z.real) for z in approx) if numeric else []
    return {'real_roots_numeric': numeric, 'real_roots_exact': exact, 'roots': roots}


def _squarefree_in_kernel(kernel: List[List[Fraction]], r: int, attempts: int,
                          rng: np.random.Generator, full_degree: bool) -> Optional[Poly]:
    """A squarefree kernel form, of degree exactly r when full_degree and one is found"""
    fallback = None

    def accept(g: Poly) -> bool:
        nonlocal fallback
        if not binary_squarefree(g, r):
            return False
        if not full_degree or g.degree == r:
            return True
        fallback = fallback or g
        return False

    for vector in kernel:
        g = Poly(QQ, vector)
        if accept(g):
            return g
    if len(kernel) < 2:
        return fallback
    for _ in range(attempts):
        weights = rng.integers(-COMBINATION_RANGE, COMBINATION_RANGE + 1, size=len(kernel))
        if not weights.any():
            continue
        combined = [sum(int(w) * v[j] for w, v in zip(weights, kernel)) for j in range(r + 1)]
        g = Poly(QQ, combined)
        if accept(g):
            return g
    return fallback


def waring_rank(f: Poly, attempts: int = DEFAULT_ATTEMPTS, seed: int = DEFAULT_SEED) -> WaringCertificate:
    """Smallest r whose catalecticant kernel contains a squarefree form, with that form as certificate"""
    if f.field != QQ:
        raise DomainError("Waring rank is computed for rational polynomials")
    if not f or f.degree < 1:
        raise DomainError("Waring rank needs a polynomial of degree at least 1", degree=str(f.degree))
    profile = extract_Z(f)
    D = profile.degree
    r0, candidates = hankel_rank_bound(profile)
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))

    for r in range(1, D + 1):
        kernel = nullspace(profile.hankel(r))
        if not kernel:
            continue
        # the root at infinity is forced only when no kernel form reaches degree r
        at_infinity = all(not v[r] for v in kernel)
        g = _squarefree_in_kernel(kernel, r, attempts, rng, full_degree=not at_infinity)
        if g is None:
            logger.debug(f"Kernel of dimension {len(kernel)} at r={r} has no squarefree form found")
            continue
        flags = _real_root_flags(g)
        logger.info(f"Waring rank {r} for degree {D} (catalecticant rank {r0})")
        return WaringCertificate(
            rank=r, certificate_poly=list(g.coeffs) + [Fraction(0)] * (r + 1 - len(g.coeffs)),
            squarefree=True, root_at_infinity=at_infinity,
            catalecticant_rank=r0, candidate_ranks=candidates, kernel_dimension=len(kernel), **flags)
    raise CertificateError(f"No squarefree catalecticant form found up to r={D}", degree=D)
