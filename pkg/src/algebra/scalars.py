"""
Exact scalar fields: the rationals and cyclotomic number fields Q(xi_k)
"""

import logging
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional, Sequence, Tuple, Union

import sympy as sp

from core.errors import FieldMismatchError, ScalarDivisionError

logger = logging.getLogger(__name__)

# generator used for every sympy polynomial built from our coefficient lists
X = sp.Symbol("x")

Rational = Fraction
Scalar = Union[Fraction, "CycloElement"]


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Cannot interpret {value!r} as a rational")


def _from_domain_rational(value) -> Fraction:
    """sympy ZZ/QQ domain element (int, mpz, PythonMPQ, mpq) to a Fraction"""
    return Fraction(int(value.numerator), int(value.denominator))


def _qq(value: Fraction):
    return sp.QQ(value.numerator, value.denominator)


class RationalField:
    """The field of rational numbers; scalars are plain Fractions"""

    name = "rational"
    conductor = None
    degree = 1
    domain = sp.QQ

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, CycloElement):
            rational = value.rational_value()
            if rational is None:
                raise FieldMismatchError(f"{value} is not a rational number")
            return rational
        return _to_fraction(value)

    def to_domain(self, value):
        return _qq(self.coerce(value))

    def from_domain(self, value) -> Fraction:
        return _from_domain_rational(value)

    def contains(self, value) -> bool:
        return isinstance(value, (int, Fraction))

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "QQ"

    def __reduce__(self):
        return (_rational_field, ())


QQ = RationalField()


def _rational_field() -> RationalField:
    return QQ


def euler_totient(k: int) -> int:
    return int(sp.totient(k))


def _rational_poly(coeffs: Sequence[Fraction]) -> sp.Poly:
    """sympy polynomial over QQ from low-to-high Fractions"""
    return sp.Poly.from_list([_qq(c) for c in reversed(coeffs)], X, domain=sp.QQ)


def _rational_coeffs(poly: sp.Poly) -> list:
    return [_from_domain_rational(c) for c in reversed(poly.rep.to_list())]


class CycloField:
    """Q(xi_k) represented as Q[x] / Phi_k(x)"""

    name = "cyclotomic"

    def __init__(self, k: int):
        if k < 1:
            raise ValueError(f"Conductor must be positive, got {k}")
        from .polynomials import cyclotomic_polynomial

        self.conductor = k
        self.modulus = cyclotomic_polynomial(k)
        self.degree = self.modulus.degree
        self._modulus_poly = _rational_poly(self.modulus.coeffs)
        logger.debug(f"Built Q(xi_{k}) of degree {self.degree}")

    @cached_property
    def domain(self):
        """sympy domain for matrices and polynomials over this field"""
        if self.degree == 1:
            return sp.QQ
        K = sp.QQ.algebraic_field(sp.exp(2 * sp.pi * sp.I / self.conductor))
        minpoly = [_from_domain_rational(c) for c in reversed(K.mod.to_list())]
        if minpoly != list(self.modulus.coeffs):
            raise FieldMismatchError(f"sympy generator of {self!r} has minimal polynomial {minpoly}")
        return K

    def to_domain(self, value):
        element = self.coerce(value)
        if self.degree == 1:
            return _qq(element.coeffs[0])
        coeffs = list(element.coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        return self.domain.new([_qq(c) for c in reversed(coeffs)])

    def from_domain(self, value) -> "CycloElement":
        if self.degree == 1:
            return CycloElement(self, (_from_domain_rational(value),))
        return self.element([_from_domain_rational(c) for c in reversed(value.to_list())])

    def zero(self) -> "CycloElement":
        return CycloElement(self, (Fraction(0),) * self.degree)

    def one(self) -> "CycloElement":
        return self.coerce(1)

    def gen(self) -> "CycloElement":
        """The canonical primitive root xi (the class of x)"""
        if self.degree == 1:
            # Phi_1 = x - 1, Phi_2 = x + 1
            return self.coerce(-self.modulus.coeffs[0])
        coeffs = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return CycloElement(self, tuple(coeffs))

    def root_power(self, j: int) -> "CycloElement":
        return self.gen() ** (j % self.conductor)

    def coerce(self, value) -> "CycloElement":
        if isinstance(value, CycloElement):
            if value.field != self:
                raise FieldMismatchError(
                    f"Element of {value.field!r} used in {self!r}")
            return value
        coeffs = [Fraction(0)] * self.degree
        coeffs[0] = _to_fraction(value)
        return CycloElement(self, tuple(coeffs))

    def element(self, coeffs: Sequence) -> "CycloElement":
        """Build sum coeffs[j] * xi^j, reducing when more than degree terms are given"""
        values = [_to_fraction(c) for c in coeffs]
        if len(values) <= self.degree:
            values += [Fraction(0)] * (self.degree - len(values))
            return CycloElement(self, tuple(values))
        return self.reduce(values)

    def reduce(self, values: Sequence[Fraction]) -> "CycloElement":
        remainder = _rational_coeffs(_rational_poly(values).rem(self._modulus_poly))
        return CycloElement(self, tuple(remainder + [Fraction(0)] * (self.degree - len(remainder))))

    def contains(self, value) -> bool:
        return isinstance(value, CycloElement) and value.field == self

    def __eq__(self, other) -> bool:
        return isinstance(other, CycloField) and other.conductor == self.conductor

    def __hash__(self) -> int:
        return hash(("cyclo", self.conductor))

    def __repr__(self) -> str:
        return f"QQ(xi_{self.conductor})"

    def __reduce__(self):
        return (cyclotomic_field, (self.conductor,))


@lru_cache(maxsize=64)
def cyclotomic_field(k: int) -> CycloField:
    return CycloField(k)


Field = Union[RationalField, CycloField]


def field_from_tag(tag: str) -> Field:
    """Parse the command-line and config spelling: rational or cyclotomic:k"""
    text = str(tag).strip().lower()
    if text in ("rational", "qq"):
        return QQ
    name, _, conductor = text.partition(":")
    if name == "cyclotomic" and conductor.isdigit() and int(conductor) >= 1:
        return cyclotomic_field(int(conductor))
    raise FieldMismatchError(f"Unknown field {tag!r}; expected rational or cyclotomic:k", tag=str(tag))


def field_tag(field: Field) -> str:
    return "rational" if field.conductor is None else f"cyclotomic:{field.conductor}"


class CycloElement:
    """Immutable element sum coeffs[j] * xi^j of Q(xi_k), canonical modulo Phi_k"""

    __slots__ = ('field', 'coeffs')

    def __init__(self, field: CycloField, coeffs: Tuple[Fraction, ...]):
        object.__setattr__(self, 'field', field)
        object.__setattr__(self, 'coeffs', coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CycloElement is immutable")

    def __reduce__(self):
        return (CycloElement, (self.field, self.coeffs))

    def _lift(self, other) -> Optional["CycloElement"]:
        if isinstance(other, CycloElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"Cannot mix {self.field!r} and {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return None

    def as_poly(self) -> sp.Poly:
        """The representative as a sympy polynomial in x over QQ"""
        return _rational_poly(self.coeffs)

    def rational_value(self) -> Optional[Fraction]:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def is_rational(self) -> bool:
        return self.rational_value() is not None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return CycloElement(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return CycloElement(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.field, tuple(a * other for a in self.coeffs))
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not self or not other:
            return self.field.zero()
        return self.field.reduce(_rational_coeffs(self.as_poly() * other.as_poly()))

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        """Inverse of the representative modulo Phi_k"""
        if not self:
            raise ScalarDivisionError(f"Inverse of zero in {self.field!r}")
        # Phi_k is irreducible, so every nonzero representative is invertible
        return self.field.element(_rational_coeffs(self.as_poly().invert(self.field._modulus_poly)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ScalarDivisionError("Division by zero")
            return CycloElement(self.field, tuple(a / other for a in self.coeffs))
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"Cannot compare {self.field!r} and {other.field!r}")
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.rational_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        rational = self.rational_value()
        if rational is not None:
            return hash(rational)
        return hash((self.field.conductor, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                power = "xi" if j == 1 else f"xi^{j}"
                terms.append(power if c == 1 else f"{c}*{power}")
        return " + ".join(terms) if terms else "0"


def field_of(value) -> Field:
    if isinstance(value, CycloElement):
        return value.field
    return QQ


def common_field(values: Sequence) -> Field:
    """The single field all values live in; rationals embed into any cyclotomic field"""
    found: Field = QQ
    for v in values:
        if isinstance(v, CycloElement):
            if isinstance(found, CycloField) and found != v.field:
                raise FieldMismatchError(f"Mixed fields {found!r} and {v.field!r}")
            found = v.field
    return found


def rational_value(value) -> Optional[Fraction]:
    if isinstance(value, CycloElement):
        return value.rational_value()
    return _to_fraction(value)


def inverse(value):
    if isinstance(value, CycloElement):
        return value.inverse()
    value = _to_fraction(value)
    if not value:
        raise ScalarDivisionError("Inverse of zero")
    return 1 / value
