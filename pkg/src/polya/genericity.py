"""
Exact bounds behind the genericity of independent shifted-power families
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Sequence

from algebra.polynomials import Poly, expand_shifted_power
from algebra.scalars import Scalar
from core.errors import CertificateError, DomainError, PreconditionError
from family.shifted_powers import Family, dependence_coefficients, dimension
from linalg.matrix import Matrix, rank
from .counting import count_polya, distinct_exponent_count
from .sequences import bounded_degree

logger = logging.getLogger(__name__)


def bounded_sequence_count(s: int) -> int:
    """|P'_s|, zero when s exceeds the bounding degree (s = 1, 2)"""
    d = bounded_degree(s)
    return count_polya(s, d) if 1 <= s <= d else 0


def bounded_distinct_count(s: int) -> int:
    d = bounded_degree(s)
    return distinct_exponent_count(s, d) if 1 <= s <= d else 0


def f_bound(s: int) -> int:
    """binom(s + floor(s^2/2) - 1, s) (s - 1)(s - 2)"""
    if s < 2:
        raise DomainError(f"f(s) is defined for s >= 2, got {s}", s=s)
    return comb(s + s * s // 2 - 1, s) * (s - 1) * (s - 2)


def fixed_sequence_bound(s: int, set_size: int) -> Fraction:
    """1 - s(s-1)/|S| for one fixed Polya sequence"""
    return 1 - Fraction(s * (s - 1), set_size)


def sweep_bound(s: int, set_size: int) -> Fraction:
    return 1 - Fraction(f_bound(s), set_size)


def refined_sweep_bound(s: int, set_size: int) -> Fraction:
    """Union bound over P'_s without the sequences of distinct exponents, which never fail"""
    if s < 2:
        raise DomainError(f"Sweep bound is defined for s >= 2, got {s}", s=s)
    risky = bounded_sequence_count(s) - bounded_distinct_count(s)
    return 1 - Fraction(risky * s * (s - 1), set_size)


def relation_bound_violations(exps: Sequence[int], relations: Sequence[Sequence]) -> List[List[int]]:
    """Supports T of the given relations whose top exponent reaches |T|^2/2 - 1"""
    violations = []
    for vector in relations:
        support = [i for i, c in enumerate(vector) if c]
        top = max(exps[i] for i in support)
        if not 2 * top < len(support) ** 2 - 2:
            violations.append(support)
    return violations


def require_relation_bound(exps: Sequence[int], relations: Sequence[Sequence]):
    """Raises CertificateError when a found dependency breaks the exponent bound"""
    violations = relation_bound_violations(exps, relations)
    if violations:
        raise CertificateError("Dependent family exceeds the exponent bound |T|^2/2 - 1",
                               exps=list(exps), supports=violations)


def dependent_max_exponent_bound(F: Family) -> bool:
    """Each basic relation of F with support T keeps its exponents below |T|^2/2 - 1"""
    if dimension(F) == F.s:
        raise PreconditionError("The family is independent", s=F.s)
    exps = [t.exponent for t in F]
    violations = relation_bound_violations(exps, dependence_coefficients(F))
    for support in violations:
        logger.warning(f"Relation on {len(support)} terms reaches exponent {max(exps[i] for i in support)}")
    return not violations


def _span_rank(polys: Sequence[Poly]) -> int:
    field_ = polys[0].field
    width = max(len(p.coeffs) for p in polys)
    rows = [list(p.coeffs) + [field_.zero()] * (width - len(p.coeffs)) for p in polys]
    return rank(Matrix(rows, field_, cols=width))


@dataclass
class FiniteShiftedPowerReport:
    s: int
    exponent: int
    limit: int
    members: List[Scalar] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def holds(self) -> bool:
        return self.count <= self.limit

    def to_dict(self) -> Dict[str, Any]:
        return {'s': self.s, 'exponent': self.exponent, 'count': self.count, 'limit': self.limit,
                'members': [str(a) for a in self.members], 'holds': self.holds}


def finite_shifted_power_bound(F: Family, e: int, candidates: Sequence[Scalar]) -> FiniteShiftedPowerReport:
    """Which (x - a)^e, a among the candidates, lie in the span of F; at most 2s - 1 when 1 is outside it"""
    if e < 0:
        raise DomainError(f"Exponent must be non-negative, got {e}")
    base = F.expansions
    r = _span_rank(base)
    if _span_rank(base + [Poly.constant(1, F.field)]) == r:
        raise PreconditionError("The constant 1 lies in the span of the family", s=F.s)
    report = FiniteShiftedPowerReport(F.s, e, 2 * F.s - 1)
    for a in candidates:
        if _span_rank(base + [expand_shifted_power(a, e, F.field)]) == r:
            report.members.append(F.field.coerce(a))
    logger.debug(f"{report.count} of {len(candidates)} candidate powers of degree {e} lie in the span")
    return report
