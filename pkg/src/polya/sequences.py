"""
Projection and clamping of Polya sequences
"""

import logging
from typing import Dict, List, Optional, Sequence, Set

from algebra.scalars import Scalar
from core.errors import CertificateError, PreconditionError
from family.polya_sequence import PolyaSequence, polya_check

logger = logging.getLogger(__name__)


def bounded_ceiling(s: int) -> int:
    """Largest exponent allowed in P'_s: floor(s^2/2) - 2"""
    return s * s // 2 - 2


def bounded_degree(s: int) -> int:
    """P'_s = P_(s,d) for this d"""
    return s * s // 2 - 1


def project_sequence(e: PolyaSequence) -> PolyaSequence:
    """Drop the smallest exponent and lower the others by one"""
    if e.s < 2:
        raise PreconditionError("Projection needs at least two exponents", s=e.s)
    if not polya_check(e):
        raise PreconditionError("Projection needs a Polya sequence", exps=list(e.exps))
    projected = PolyaSequence([x - 1 for x in e.exps[:-1]])
    if not polya_check(projected):
        raise CertificateError("Projected sequence lost the Polya condition", exps=list(projected.exps))
    return projected


def clamp_exponents(exps: Sequence[int], shifts: Optional[Sequence[Scalar]] = None) -> List[int]:
    """Bring every exponent above floor(s^2/2) - 2 into [floor(s^2/2) - s, floor(s^2/2) - 2]

    Without shifts each large exponent becomes the ceiling. With shifts, large exponents
    are handled highest first and take the largest free value of the interval that no
    other term at the same shift already uses. Output order follows the input.
    """
    s = len(exps)
    if s < 2:
        raise PreconditionError("Clamping needs s >= 2", s=s)
    if not polya_check(PolyaSequence(exps)):
        raise PreconditionError("Clamping needs a Polya sequence", exps=list(exps))
    if shifts is not None and len(shifts) != s:
        raise PreconditionError(f"Got {len(shifts)} shifts for {s} exponents")
    ceiling, floor_ = bounded_ceiling(s), s * s // 2 - s
    large = sorted((i for i, e in enumerate(exps) if e > ceiling), key=lambda i: -exps[i])
    out = list(exps)
    if not large:
        return out
    if shifts is None:
        for i in large:
            out[i] = ceiling
        return out
    if len(set(shifts)) == 1:
        raise PreconditionError("All shifts coincide; no collision-free clamp is defined", s=s)

    used: Dict[Scalar, Set[int]] = {}
    for i, e in enumerate(exps):
        if e <= ceiling:
            used.setdefault(shifts[i], set()).add(e)
    for i in large:
        taken = used.setdefault(shifts[i], set())
        value = next((v for v in range(ceiling, floor_ - 1, -1) if v not in taken), None)
        if value is None:
            raise PreconditionError(
                f"No free exponent in [{floor_}, {ceiling}] at shift {shifts[i]}", shift=str(shifts[i]))
        taken.add(value)
        out[i] = value
    logger.debug(f"Clamped {list(exps)} to {out}")
    return out


def clamp_sequence(e: PolyaSequence, shifts: Optional[Sequence[Scalar]] = None) -> PolyaSequence:
    """Clamp into P'_s; shifts, when given, align with e.exps"""
    clamped = PolyaSequence(clamp_exponents(e.exps, shifts))
    if not polya_check(clamped) or clamped.d > bounded_ceiling(e.s):
        raise CertificateError("Clamped sequence left P'_s", exps=list(clamped.exps))
    return clamped
