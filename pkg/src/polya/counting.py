"""
Ballot-number counting and lattice-path enumeration of bounded Polya sequences

A sequence with every exponent below d is encoded by its multiplicity tuple
(m_1, ..., m_d), m_i = |{j : e_j = i - 1}|; the Polya condition becomes the
lattice-path condition m_1 + ... + m_j <= j for every j.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Iterator, List, Tuple

from core.errors import DomainError
from family.polya_sequence import PolyaSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultTuple:
    """Multiplicity tuple of a Polya sequence whose exponents all lie below d = len(m)"""
    m: Tuple[int, ...]

    def __post_init__(self):
        running = 0
        for j, count in enumerate(self.m, start=1):
            if count < 0:
                raise DomainError(f"Multiplicities must be non-negative, got {count}")
            running += count
            if running > j:
                raise DomainError(f"Prefix sum {running} exceeds {j}", m=list(self.m))

    @property
    def s(self) -> int:
        return sum(self.m)

    @property
    def d(self) -> int:
        return len(self.m)

    def to_sequence(self) -> PolyaSequence:
        return PolyaSequence.from_mults(self.m)

    @classmethod
    def from_sequence(cls, e: PolyaSequence, d: int) -> "MultTuple":
        if e.d >= d:
            raise DomainError(f"Exponent {e.d} does not fit below d={d}")
        return cls(tuple(e.mults) + (0,) * (d - len(e.mults)))


def _check_range(s: int, d: int):
    if s < 1 or s > d:
        raise DomainError(f"Need 1 <= s <= d, got s={s}, d={d}", s=s, d=d)


def count_polya(s: int, d: int) -> int:
    """|P_(s,d)| = binom(s+d, s) (d+1-s) / (d+1)"""
    _check_range(s, d)
    return comb(s + d, s) * (d + 1 - s) // (d + 1)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def enumerate_polya(s: int, d: int) -> Iterator[MultTuple]:
    """Every tuple of Q_(s,d) once, in decreasing lexicographic order"""
    _check_range(s, d)
    prefix: List[int] = []

    def extend(position: int, used: int) -> Iterator[MultTuple]:
        if position == d:
            # the last slot absorbs what is left; s <= d keeps the path valid
            yield MultTuple(tuple(prefix) + (s - used,))
            return
        for count in range(min(position - used, s - used), -1, -1):
            prefix.append(count)
            yield from extend(position + 1, used + count)
            prefix.pop()

    yield from extend(1, 0)


def distinct_exponent_count(s: int, d: int) -> int:
    """Sequences in P_(s,d) with pairwise-distinct exponents: any s of the d values"""
    _check_range(s, d)
    return comb(d, s)
