"""
Families of shifted powers (x - a)^e and their span
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

from algebra.polynomials import Poly, expand_shifted_power
from algebra.scalars import Field, Scalar, common_field, rational_value
from core.errors import DomainError, DuplicateNodeError, PreconditionError
from linalg.matrix import Matrix, left_nullspace, pivot_columns, rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShiftedPower:
    """The polynomial (x - shift)^exponent"""
    shift: Scalar
    exponent: int

    def expand(self, field: Optional[Field] = None) -> Poly:
        return expand_shifted_power(self.shift, self.exponent, field)

    def __str__(self) -> str:
        return f"(x - ({self.shift}))^{self.exponent}"


class Family:
    """Ordered shifted powers over one field with pairwise-distinct (shift, exponent) pairs"""

    def __init__(self, terms: Iterable[ShiftedPower], field: Optional[Field] = None):
        terms = list(terms)
        if not terms:
            raise DomainError("A family needs at least one shifted power")
        self.field = field or common_field([t.shift for t in terms])
        seen = set()
        normalized = []
        for term in terms:
            if not isinstance(term.exponent, int) or isinstance(term.exponent, bool) or term.exponent < 0:
                raise DomainError(f"Exponent must be a non-negative integer, got {term.exponent!r}")
            shift = self.field.coerce(term.shift)
            key = (shift, term.exponent)
            if key in seen:
                raise DuplicateNodeError(
                    f"Repeated term (x - {shift})^{term.exponent}", shift=shift, exponent=term.exponent)
            seen.add(key)
            normalized.append(ShiftedPower(shift, term.exponent))
        self.terms: Tuple[ShiftedPower, ...] = tuple(normalized)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Scalar, int]], field: Optional[Field] = None) -> "Family":
        return cls([ShiftedPower(a, e) for a, e in pairs], field)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, index: int) -> ShiftedPower:
        return self.terms[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __repr__(self) -> str:
        return f"Family({', '.join(str(t) for t in self.terms)})"

    @property
    def s(self) -> int:
        return len(self.terms)

    @property
    def exponents(self) -> List[int]:
        return [t.exponent for t in self.terms]

    @property
    def shifts(self) -> List[Scalar]:
        return [t.shift for t in self.terms]

    @property
    def max_exponent(self) -> int:
        return max(self.exponents)

    @cached_property
    def expansions(self) -> List[Poly]:
        return [t.expand(self.field) for t in self.terms]

    def subfamily(self, indices: Sequence[int]) -> "Family":
        return Family([self.terms[i] for i in indices], self.field)

    def without(self, terms: Iterable[ShiftedPower]) -> "Family":
        drop = set(terms)
        return Family([t for t in self.terms if t not in drop], self.field)

    def translate(self, c) -> "Family":
        """Replace every shift a by a + c"""
        return Family([ShiftedPower(t.shift + c, t.exponent) for t in self.terms], self.field)

    def has_rational_shifts(self) -> bool:
        return all(rational_value(a) is not None for a in self.shifts)

    def require_rational_shifts(self, operation: str):
        if not self.has_rational_shifts():
            offending = [str(a) for a in self.shifts if rational_value(a) is None]
            raise PreconditionError(
                f"{operation} needs real (rational) shifts", operation=operation, shifts=offending)

    def nodes(self) -> List[Scalar]:
        """Distinct shifts in order of first appearance"""
        out: List[Scalar] = []
        for a in self.shifts:
            if a not in out:
                out.append(a)
        return out

    def polya_sequence(self):
        from .polya_sequence import PolyaSequence

        return PolyaSequence(self.exponents)

    def coefficient_matrix(self) -> Matrix:
        """s x (maxdeg + 1) matrix whose row r holds the coefficients of term r"""
        width = self.max_exponent + 1
        rows = []
        for poly in self.expansions:
            coeffs = list(poly.coeffs) + [self.field.zero()] * (width - len(poly.coeffs))
            rows.append(coeffs)
        return Matrix(rows, self.field, cols=width)


def dimension(F: Family) -> int:
    return rank(F.coefficient_matrix())


def is_independent(F: Family) -> bool:
    return dimension(F) == F.s


def dependence_coefficients(F: Family) -> List[List[Scalar]]:
    """Basis of the relations sum alpha_r (x - a_r)^{e_r} = 0"""
    return left_nullspace(F.coefficient_matrix())


def max_independent_subfamily(F: Family) -> Family:
    """Greedy left-to-right scan keeping each term that raises the rank"""
    keep = pivot_columns(F.coefficient_matrix().transpose())
    logger.debug(f"Independent subfamily keeps indices {keep}")
    return F.subfamily(keep)


def wronskian(F: Family) -> Poly:
    """det (f_j^(i)) for 0 <= i < s, by fraction-free elimination over the polynomial ring"""
    s = F.s
    m = [[f.derivative(i) for f in F.expansions] for i in range(s)]
    sign = 1
    prev = Poly.constant(1, F.field)
    for c in range(s - 1):
        pivot_row = next((r for r in range(c, s) if m[r][c]), None)
        if pivot_row is None:
            return Poly.zero(F.field)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            sign = -sign
        pivot = m[c][c]
        for r in range(c + 1, s):
            for j in range(c + 1, s):
                m[r][j] = (pivot * m[r][j] - m[r][c] * m[c][j]).exact_divide(prev)
            m[r][c] = Poly.zero(F.field)
        prev = pivot
    det = m[s - 1][s - 1]
    return det if sign > 0 else -det

