"""
Sufficient conditions for independence read off the shape of a family
"""

import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Any, Dict, List, Sequence, Tuple

from algebra.scalars import Scalar, common_field
from core.errors import DomainError, DuplicateNodeError
from .polya_sequence import polya_check
from .shifted_powers import Family, ShiftedPower

logger = logging.getLogger(__name__)


def _check_towers(d: int, towers: Sequence[Tuple[Scalar, int]]):
    nodes = [a for a, _ in towers]
    for i, a in enumerate(nodes):
        if a in nodes[:i]:
            raise DuplicateNodeError(f"Node {a} appears in more than one tower", node=a)
    for a, e in towers:
        if not 1 <= e <= d:
            raise DomainError(f"Tower start {e} at node {a} must lie in 1..{d}", node=a, start=e)


def jordan_family(d: int, towers: Sequence[Tuple[Scalar, int]]) -> Family:
    """Union over towers (a, e) of (x - a)^e, ..., (x - a)^d"""
    _check_towers(d, towers)
    field_ = common_field([a for a, _ in towers])
    terms = [ShiftedPower(a, j) for a, e in towers for j in range(e, d + 1)]
    return Family(terms, field_)


def jordan_condition(d: int, towers: Sequence[Tuple[Scalar, int]]) -> bool:
    _check_towers(d, towers)
    return sum(d + 1 - e for _, e in towers) <= d + 1


@dataclass(frozen=True)
class OddSequenceRecord:
    node: Scalar
    min: int
    max: int
    parity: int

    @property
    def size(self) -> int:
        return self.max - self.min + 1


def exponent_intervals(F: Family) -> List[OddSequenceRecord]:
    """Every maximal run of consecutive exponents at each node, nodes in order of first appearance"""
    out = []
    for node in F.nodes():
        exps = sorted(t.exponent for t in F if t.shift == node)
        start = prev = exps[0]
        for e in exps[1:] + [None]:
            if e is not None and e == prev + 1:
                prev = e
                continue
            out.append(OddSequenceRecord(node, start, prev, (prev - start + 1) % 2))
            if e is not None:
                start = prev = e
    return out


def odd_sequences(F: Family) -> List[OddSequenceRecord]:
    """Maximal intervals of odd length, by minimum then by node order"""
    odd = [r for r in exponent_intervals(F) if r.parity == 1]
    # sorted() is stable, so equal minima keep node order
    return sorted(odd, key=lambda r: r.min)


def atkinson_sharma_condition(F: Family) -> bool:
    """Polya condition holds and every odd sequence reaches d; real (rational) shifts only"""
    F.require_rational_shifts("atkinson_sharma_condition")
    if not polya_check(F.polya_sequence()):
        return False
    d = F.max_exponent
    return all(r.max == d for r in odd_sequences(F))


def largest_integer_below_gap(alpha: Fraction, p: int) -> int:
    """Largest integer T with T <= (1 + alpha - sqrt(alpha^2 + 1)) p"""
    top = (1 + alpha) * p
    T = int(top // 1)
    while T > 0:
        slack = top - T
        # T <= top - sqrt(alpha^2 + 1) p  iff  slack >= 0 and slack^2 >= (alpha^2 + 1) p^2
        if slack >= 0 and slack * slack >= (alpha * alpha + 1) * p * p:
            return T
        T -= 1
    return 0


def complex_polya_lower_bound(s: int) -> int:
    """Smallest integer c with c >= (1 - sqrt(2)/2)(s - 1)"""
    c = 0
    while True:
        gap = (s - 1) - c
        # (s-1) - c <= (sqrt(2)/2)(s-1)  iff  gap <= 0 or 2 gap^2 <= (s-1)^2
        if gap <= 0 or 2 * gap * gap <= (s - 1) * (s - 1):
            return c
        c += 1


def ceil_sqrt(n: int) -> int:
    root = isqrt(n)
    return root if root * root == n else root + 1


@dataclass
class BigExponentReport:
    s: int
    min_exponent: int
    alpha: Fraction
    real_rule: bool
    complex_rule: bool
    rational_shifts: bool
    polya: bool
    independence_asserted: bool
    gap_threshold: int
    dimension_lower_bound: int
    bounds: Dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        payload = asdict(self)
        payload['alpha'] = str(self.alpha)
        return payload


def big_exponent_conditions(F: Family) -> BigExponentReport:
    """Which exponent-profile conditions F meets and the dimension bound they imply"""
    s = F.s
    min_e = min(F.exponents)
    alpha = Fraction(min_e, s)
    rational = F.has_rational_shifts()
    polya = polya_check(F.polya_sequence())
    real_rule = min_e >= max(1, 2 * s - 4)
    complex_rule = 2 * min_e >= s * (s - 1)
    asserted = complex_rule or (real_rule and rational)

    threshold = largest_integer_below_gap(alpha, s)
    bounds = {'big_exponent': threshold + 1}
    if polya:
        bounds['sqrt'] = ceil_sqrt(s)
        bounds['complex_polya'] = complex_polya_lower_bound(s)
        if rational:
            bounds['real_top_exponent'] = (s + 4) // 3
            bounds['real_halfplus'] = s // 2 + 1
    if asserted:
        bounds['independent'] = s
    lower = max(bounds.values())

    logger.debug(f"Exponent profile of s={s}: min e={min_e}, bounds {bounds}")
    return BigExponentReport(
        s=s, min_exponent=min_e, alpha=alpha, real_rule=real_rule, complex_rule=complex_rule,
        rational_shifts=rational, polya=polya, independence_asserted=asserted,
        gap_threshold=threshold, dimension_lower_bound=lower, bounds=bounds)

