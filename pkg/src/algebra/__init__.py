"""Exact scalars and univariate polynomials"""

from .scalars import (QQ, CycloElement, CycloField, Rational, RationalField, common_field,
                      cyclotomic_field, euler_totient, field_from_tag, field_of, field_tag, inverse,
                      rational_value)
from .polynomials import (DEGREE_OF_ZERO, Poly, count_real_roots, cyclotomic_polynomial, derivative,
                          expand_shifted_power, falling_factorial, poly_gcd, sturm_sequence)
