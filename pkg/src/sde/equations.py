"""
Shifted differential equations sum P_i f^(i) = 0 annihilating a family

Unknowns are the coefficients lambda_{i,j} of P_i = sum_j lambda_{i,j} x^j, laid out
i ascending then j ascending, with j <= i + l below t and j <= l from t on.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from algebra.polynomials import Poly
from algebra.scalars import Field
from core.errors import CertificateError, DomainError
from family.shifted_powers import Family
from linalg.matrix import Matrix, nullspace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SdeParams:
    t: int
    k: int
    l: int

    def __post_init__(self):
        if min(self.t, self.k, self.l) < 0:
            raise DomainError(f"SDE parameters must be non-negative, got {self}")

    def degree_bound(self, i: int) -> int:
        return i + self.l if i < self.t else self.l

    def columns(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(self.k + 1) for j in range(self.degree_bound(i) + 1)]

    def unknowns(self) -> int:
        return len(self.columns())


class Sde:
    """An equation with parameters (t, k, l) whose top coefficient P_k is nonzero"""

    def __init__(self, params: SdeParams, coefficients: Sequence[Poly]):
        if len(coefficients) != params.k + 1:
            raise DomainError(
                f"Expected {params.k + 1} coefficients for order {params.k}, got {len(coefficients)}")
        if not coefficients[-1]:
            raise DomainError("Top coefficient of an SDE must be nonzero")
        self.params = params
        self.coefficients = tuple(coefficients)

    @property
    def order(self) -> int:
        return self.params.k

    @property
    def field(self) -> Field:
        return self.coefficients[0].field

    def top(self) -> Poly:
        return self.coefficients[-1]

    def apply(self, f: Poly) -> Poly:
        """sum P_i f^(i)"""
        total = Poly.zero(f.field)
        for i, P in enumerate(self.coefficients):
            if P:
                total = total + P * f.derivative(i)
        return total

    def degree_bounds_hold(self) -> bool:
        return all(P.degree <= self.params.degree_bound(i) for i, P in enumerate(self.coefficients))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Sde):
            return NotImplemented
        return self.params == other.params and self.coefficients == other.coefficients

    def __repr__(self) -> str:
        terms = " + ".join(f"[{P}] f^({i})" for i, P in enumerate(self.coefficients) if P)
        return f"Sde(t={self.params.t}, k={self.params.k}, l={self.params.l}: {terms} = 0)"


def feasible(s: int, p: SdeParams) -> bool:
    """s(l + k + 1) < (k + 1)(l + 1) + t(t - 1)/2, decided over the integers"""
    return 2 * s * (p.l + p.k + 1) < 2 * (p.k + 1) * (p.l + 1) + p.t * (p.t - 1)


def build_system(F: Family, p: SdeParams) -> Matrix:
    """One row per monomial x^m of each identity E_r, rows grouped by term and ascending in m"""
    columns = p.columns()
    rows = []
    zero = F.field.zero()
    for f in F.expansions:
        derivatives = [f.derivative(i) for i in range(p.k + 1)]
        height = max((len(derivatives[i].coeffs) + j for i, j in columns if derivatives[i]), default=0)
        block = [[zero] * len(columns) for _ in range(height)]
        for col, (i, j) in enumerate(columns):
            for m, c in enumerate(derivatives[i].coeffs):
                block[m + j][col] = c
        rows.extend(block)
    logger.debug(f"SDE system for s={F.s}, {p}: {len(rows)} equations in {len(columns)} unknowns")
    return Matrix(rows, F.field, cols=len(columns))


def assemble(F: Family, p: SdeParams, solution: Sequence) -> Sde:
    """Read P_i off a kernel vector and drop zero coefficients from the top"""
    coeffs = [[] for _ in range(p.k + 1)]
    for (i, j), value in zip(p.columns(), solution):
        coeffs[i].append(value)
    polys = [Poly(F.field, c) for c in coeffs]
    order = p.k
    while order > 0 and not polys[order]:
        order -= 1
    return Sde(SdeParams(p.t, order, p.l), polys[:order + 1])


def find_sde(F: Family, p: SdeParams) -> Optional[Sde]:
    """First canonical kernel vector of the system, or None when only the zero equation exists"""
    kernel = nullspace(build_system(F, p))
    if not kernel:
        logger.debug(f"No SDE with {p} for s={F.s}")
        return None
    equation = assemble(F, p, kernel[0])
    logger.debug(f"Found SDE of effective order {equation.order} with {p}")
    return equation


def small_params(s: int) -> SdeParams:
    """t = s, k = l = ceil((1 + sqrt(2)/2) s)"""
    c = 0
    while 2 * c * c < s * s:
        c += 1
    return SdeParams(s, s + c, s + c)


def find_small_sde(F: Family) -> Sde:
    p = small_params(F.s)
    equation = find_sde(F, p)
    if equation is None:
        # the counting inequality guarantees a nonzero kernel
        raise CertificateError(f"No SDE found with guaranteed-feasible parameters {p}", s=F.s)
    return equation


def parameter_order(s: int, max_total: int, t: Optional[int] = None) -> Iterator[SdeParams]:
    """t = s unless given, (k, l) by increasing k + l then increasing k"""
    t = s if t is None else t
    for total in range(2, max_total + 1):
        for k in range(1, total + 1):
            yield SdeParams(t, k, total - k)


def search_parameters(F: Family, max_total: Optional[int] = None,
                      t: Optional[int] = None) -> Optional[Tuple[SdeParams, Sde]]:
    """First feasible parameters in search order whose system has a nonzero solution"""
    max_total = max_total or 2 * small_params(F.s).k
    for p in parameter_order(F.s, max_total, t):
        if not feasible(F.s, p):
            continue
        equation = find_sde(F, p)
        if equation is not None:
            logger.info(f"Parameter search settled on {p}")
            return p, equation
    return None


def verify_sde(E: Sde, f: Poly) -> bool:
    return not E.apply(f)
