"""
Where the nodes of a family show up among the roots of an annihilating equation's coefficients
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

from algebra.polynomials import Poly, expand_shifted_power
from algebra.scalars import Scalar
from core.errors import PreconditionError
from family.shifted_powers import Family, ShiftedPower
from .equations import Sde, verify_sde

logger = logging.getLogger(__name__)


def _linear(a: Scalar, field) -> Poly:
    return expand_shifted_power(a, 1, field)


def _require_annihilated(E: Sde, terms: Sequence[ShiftedPower], field):
    for term in terms:
        if not verify_sde(E, term.expand(field)):
            raise PreconditionError(f"{term} does not satisfy the equation", term=str(term))


def node_product(F: Family) -> Poly:
    """prod (x - a_i) over all terms, repeated nodes counted with multiplicity"""
    product = Poly.constant(1, F.field)
    for a in F.shifts:
        product = product * _linear(a, F.field)
    return product


def check_root_divisibility(E: Sde, F: Family) -> bool:
    """prod (x - a_i) divides the top coefficient when every e_i >= order"""
    low = [t for t in F if t.exponent < E.order]
    if low:
        raise PreconditionError(
            f"Exponent below the order {E.order}", term=str(low[0]), order=E.order)
    _require_annihilated(E, F.terms, F.field)
    return node_product(F).divides(E.top())


def check_multiplicity_ladder(E: Sde, node: Scalar, exps: Sequence[int]) -> bool:
    """(x - a)^(n-m) divides P_(k-m) for m = 0..n-1"""
    k, n = E.order, len(exps)
    if any(a <= b for a, b in zip(exps, exps[1:])):
        raise PreconditionError("Ladder exponents must be strictly decreasing", exps=list(exps))
    if n == 0 or n > k:
        raise PreconditionError(f"Ladder length {n} must lie in 1..{k}", length=n, order=k)
    if min(exps) < k - n + 1:
        raise PreconditionError(
            f"Smallest exponent {min(exps)} below k - n + 1 = {k - n + 1}", exps=list(exps))
    field_ = E.field
    _require_annihilated(E, [ShiftedPower(node, e) for e in exps], field_)
    linear = _linear(node, field_)
    for m in range(n):
        if not (linear ** (n - m)).divides(E.coefficients[k - m]):
            logger.debug(f"(x - {node})^{n - m} does not divide P_{k - m}")
            return False
    return True


@dataclass
class RootCover:
    """Coefficient index j assigned to each term, and whether (x - a) divides P_j"""
    indices: Dict[ShiftedPower, int] = field(default_factory=dict)
    divides: Dict[ShiftedPower, bool] = field(default_factory=dict)
    product_divides: bool = False

    @property
    def holds(self) -> bool:
        return self.product_divides and all(self.divides.values())


def coefficient_root_cover(E: Sde, F: Family) -> RootCover:
    """For each term, j = max{p in I : p <= e} where I indexes the nonzero coefficients"""
    if not E.coefficients[0]:
        raise PreconditionError("Root cover needs a nonzero P_0")
    _require_annihilated(E, F.terms, F.field)
    support: List[int] = [i for i, P in enumerate(E.coefficients) if P]
    cover = RootCover()
    for term in F:
        j = max(p for p in support if p <= term.exponent)
        cover.indices[term] = j
        cover.divides[term] = _linear(term.shift, F.field).divides(E.coefficients[j])
    product = Poly.constant(1, F.field)
    for i in support:
        product = product * E.coefficients[i]
    cover.product_divides = node_product(F).divides(product)
    return cover
