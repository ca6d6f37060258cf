"""
Explicit independent subfamilies certifying dimension lower bounds
"""

import logging
from collections import OrderedDict
from math import ceil
from typing import List

from core.errors import CertificateError, PreconditionError
from .conditions import ceil_sqrt, odd_sequences
from .polya_sequence import polya_check
from .shifted_powers import Family, ShiftedPower, is_independent

logger = logging.getLogger(__name__)


def _require_polya(F: Family, operation: str):
    if not polya_check(F.polya_sequence()):
        raise PreconditionError(
            f"{operation} needs a family satisfying the Polya condition",
            operation=operation, exponents=F.exponents)


def _certify(witness: Family, operation: str) -> Family:
    if not is_independent(witness):
        raise CertificateError(f"{operation} produced a dependent subfamily", size=witness.s)
    return witness


def sqrt_witness(F: Family) -> Family:
    """Largest equal-exponent class if it has at least ceil(sqrt s) terms, otherwise one term per exponent"""
    _require_polya(F, "sqrt_witness")
    classes: "OrderedDict[int, List[ShiftedPower]]" = OrderedDict()
    for term in F:
        classes.setdefault(term.exponent, []).append(term)
    largest = max(classes.values(), key=len)
    if len(largest) >= ceil_sqrt(F.s):
        witness = Family(largest, F.field)
    else:
        witness = Family([terms[0] for terms in classes.values()], F.field)
    logger.debug(f"sqrt witness of size {witness.s} for s={F.s}")
    return _certify(witness, "sqrt_witness")


def real_top_exponent_witness(F: Family) -> Family:
    """The floor((s+4)/3) terms of largest exponent"""
    F.require_rational_shifts("real_top_exponent_witness")
    _require_polya(F, "real_top_exponent_witness")
    t = (F.s + 4) // 3
    order = sorted(range(F.s), key=lambda i: -F.terms[i].exponent)
    witness = F.subfamily(sorted(order[:min(t, F.s)]))
    return _certify(witness, "real_top_exponent_witness")


def _halfplus_terms(F: Family) -> List[ShiftedPower]:
    if F.s == 1:
        return list(F.terms)
    d = F.max_exponent
    top = [t for t in F if t.exponent == d]
    if len(top) == 1:
        rest = _halfplus_terms(F.without(top))
        return rest + top
    short = [r for r in odd_sequences(F) if r.max != d]
    k = len(short)
    drop = {ShiftedPower(r.node, r.min) for r in short[:ceil(k / 2)]}
    logger.debug(f"Removing {len(drop)} of {k} odd sequences below d={d}")
    return [t for t in F if t not in drop]


def real_halfplus_witness(F: Family) -> Family:
    """Independent subfamily of size at least floor(s/2) + 1 over real (rational) shifts"""
    F.require_rational_shifts("real_halfplus_witness")
    _require_polya(F, "real_halfplus_witness")
    keep = set(_halfplus_terms(F))
    witness = Family([t for t in F if t in keep], F.field)
    if witness.s < F.s // 2 + 1:
        raise CertificateError(f"Witness of size {witness.s} below floor(s/2)+1 for s={F.s}")
    return _certify(witness, "real_halfplus_witness")
