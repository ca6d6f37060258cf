"""
Dense univariate polynomials over an exact scalar field
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import List, Optional, Sequence, Tuple

import sympy as sp

from core.errors import FieldMismatchError, InexactDivisionError, ScalarDivisionError
from .scalars import QQ, X, CycloElement, Field, common_field, field_of, inverse

logger = logging.getLogger(__name__)

# degree of the zero polynomial
DEGREE_OF_ZERO = float("-inf")


class Poly:
    """Immutable dense polynomial, coefficients indexed low-to-high with no trailing zeros"""

    __slots__ = ('field', 'coeffs')

    def __init__(self, field: Field, coeffs: Sequence = ()):
        values = [field.coerce(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'coeffs', tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.field, self.coeffs))

    @classmethod
    def from_sympy(cls, field: Field, poly: sp.Poly) -> "Poly":
        return cls(field, [field.from_domain(c) for c in reversed(poly.rep.to_list())])

    def as_sympy(self, field: Optional[Field] = None) -> sp.Poly:
        """This polynomial as a sympy Poly in x over the domain of field (default: its own)"""
        field = field or self.field
        return sp.Poly.from_list([field.to_domain(c) for c in reversed(self.coeffs)], X, domain=field.domain)

    @classmethod
    def zero(cls, field: Field = QQ) -> "Poly":
        return cls(field, ())

    @classmethod
    def constant(cls, value, field: Optional[Field] = None) -> "Poly":
        field = field or field_of(value)
        return cls(field, (value,))

    @classmethod
    def monomial(cls, degree: int, coeff=1, field: Field = QQ) -> "Poly":
        return cls(field, [0] * degree + [coeff])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else DEGREE_OF_ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading(self):
        if not self.coeffs:
            return self.field.zero()
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def _check(self, other: "Poly") -> Field:
        if self.field == other.field:
            return self.field
        # a rational polynomial embeds into any cyclotomic field
        if self.field == QQ:
            return other.field
        if other.field == QQ:
            return self.field
        raise FieldMismatchError(f"Cannot combine polynomials over {self.field!r} and {other.field!r}")

    def change_field(self, field: Field) -> "Poly":
        return Poly(field, self.coeffs)

    def _lift(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction, CycloElement)):
            return Poly.constant(other, common_field([other]) if isinstance(other, CycloElement) else self.field)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        field = self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        if isinstance(c, CycloElement) and self.field == QQ:
            return Poly(c.field, [c * a for a in self.coeffs])
        return Poly(self.field, [a * c for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloElement)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        field = self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly(field, ())
        out = [field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Poly(field, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        result = Poly.constant(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        field = self._check(other)
        if not other.coeffs:
            raise ScalarDivisionError("Polynomial division by zero")
        quotient, remainder = self.as_sympy(field).div(other.as_sympy(field))
        return Poly.from_sympy(field, quotient), Poly.from_sympy(field, remainder)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def exact_divide(self, other: "Poly") -> "Poly":
        quotient, remainder = self.divmod(other)
        if remainder:
            raise InexactDivisionError(
                f"Division leaves remainder of degree {remainder.degree}",
                remainder_degree=remainder.degree)
        return quotient

    def divides(self, other: "Poly") -> bool:
        """True when self divides other exactly"""
        if not self.coeffs:
            return not other.coeffs
        return not other.divmod(self)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(inverse(self.coeffs[-1]))

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd (zero only when both inputs are zero)"""
        field = self._check(other)
        return Poly.from_sympy(field, self.as_sympy(field).gcd(other.as_sympy(field))).monic()

    def __call__(self, point):
        """Horner evaluation"""
        acc = self.field.zero() if not isinstance(point, CycloElement) else point.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    evaluate = __call__

    def derivative(self, order: int = 1) -> "Poly":
        if order < 0:
            raise ValueError("Derivative order must be non-negative")
        if order == 0:
            return self
        coeffs = [c * falling_factorial(i, order) for i, c in enumerate(self.coeffs)][order:]
        return Poly(self.field, coeffs)

    def translate(self, c) -> "Poly":
        """f(x + c) by a Taylor shift"""
        field = common_field([c]) if isinstance(c, CycloElement) else self.field
        if self.field != QQ and self.field != field:
            raise FieldMismatchError(f"Cannot translate a polynomial over {self.field!r} by {c}")
        return Poly.from_sympy(field, self.as_sympy(field).shift(field.to_domain(c)))

    def is_squarefree(self) -> bool:
        if not self.coeffs:
            return False
        return self.as_sympy().is_sqf

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other, QQ)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(f"({c})")
            elif i == 1:
                terms.append(f"({c})*x")
            else:
                terms.append(f"({c})*x^{i}")
        return " + ".join(terms)


def falling_factorial(x: int, i: int) -> int:
    """x(x-1)...(x-i+1); 1 when i = 0 and 0 when 0 <= x < i"""
    if i < 0:
        raise ValueError("Falling factorial order must be non-negative")
    result = 1
    for j in range(i):
        result *= x - j
        if not result:
            break
    return result


def expand_shifted_power(a, e: int, field: Optional[Field] = None) -> Poly:
    """Dense expansion of (x - a)^e by the binomial theorem"""
    if e < 0:
        raise ValueError(f"Exponent must be non-negative, got {e}")
    field = field or field_of(a)
    a = field.coerce(a)
    neg = -a
    coeffs = [field.zero()] * (e + 1)
    power = field.one()
    # coefficient of x^j is binom(e, j) * (-a)^(e - j)
    for j in range(e, -1, -1):
        coeffs[j] = power * comb(e, j)
        power = power * neg
    return Poly(field, coeffs)


def derivative(f: Poly, order: int) -> Poly:
    return f.derivative(order)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    return f.gcd(g)


@lru_cache(maxsize=128)
def cyclotomic_polynomial(k: int) -> Poly:
    if k < 1:
        raise ValueError(f"Cyclotomic index must be positive, got {k}")
    return Poly.from_sympy(QQ, sp.Poly(sp.cyclotomic_poly(k, X), X, domain=sp.QQ))


def sturm_sequence(f: Poly) -> List[Poly]:
    """Sturm chain of the squarefree part of f over Q"""
    if f.field != QQ:
        raise FieldMismatchError("Sturm sequences need a rational polynomial")
    return [p for p in (Poly.from_sympy(QQ, s) for s in f.as_sympy().sturm()) if p]


def sign_changes(values: Sequence[Fraction]) -> int:
    nonzero = [v for v in values if v != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))


def count_real_roots(f: Poly, lo, hi) -> int:
    """Distinct real roots of f in (lo, hi] by Sturm's theorem"""
    sequence = sturm_sequence(f)
    lo, hi = Fraction(lo), Fraction(hi)
    return sign_changes([p(lo) for p in sequence]) - sign_changes([p(hi) for p in sequence])
