"""
Exponent sequences, the Polya condition and the exponent-profile independence test
"""

import logging
from dataclasses import dataclass, field
from typing import Sequence, Tuple

from core.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolyaSequence:
    """Exponents stored non-increasing, with counts n_i = |{j : e_j < i}| and mults m_i = |{j : e_j = i-1}| for i = 1..d+1"""

    exps: Tuple[int, ...]
    counts: Tuple[int, ...] = field(init=False, repr=False)
    mults: Tuple[int, ...] = field(init=False, repr=False)

    def __init__(self, exps: Sequence[int]):
        exps = tuple(sorted((int(e) for e in exps), reverse=True))
        if not exps:
            raise DomainError("An exponent sequence needs at least one entry")
        if exps[-1] < 0:
            raise DomainError(f"Exponents must be non-negative, got {exps[-1]}")
        d = exps[0]
        mults = [0] * (d + 1)
        for e in exps:
            mults[e] += 1
        counts = []
        running = 0
        for m in mults:
            running += m
            counts.append(running)
        object.__setattr__(self, 'exps', exps)
        object.__setattr__(self, 'mults', tuple(mults))
        object.__setattr__(self, 'counts', tuple(counts))

    @classmethod
    def from_mults(cls, mults: Sequence[int]) -> "PolyaSequence":
        """Inverse of the multiplicity view: mults[i] copies of exponent i"""
        return cls([i for i, m in enumerate(mults) for _ in range(m)])

    @property
    def s(self) -> int:
        return len(self.exps)

    @property
    def d(self) -> int:
        return self.exps[0]

    def n(self, i: int) -> int:
        """n_i for any i >= 1"""
        if i < 1:
            raise DomainError(f"Count index starts at 1, got {i}")
        if i > len(self.counts):
            return self.s
        return self.counts[i - 1]

    def has_distinct_exponents(self) -> bool:
        return len(set(self.exps)) == self.s


def polya_check(e: PolyaSequence) -> bool:
    """n_i <= i for every i >= 1"""
    return all(e.n(i) <= i for i in range(1, e.d + 2))


def gmk_condition(e: PolyaSequence) -> bool:
    """n_1 <= 1 and n_j + n_{j+1} <= j + 1 for j = 1..d"""
    if e.n(1) > 1:
        return False
    return all(e.n(j) + e.n(j + 1) <= j + 1 for j in range(1, e.d + 1))


