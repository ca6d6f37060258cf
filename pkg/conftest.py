"""
Shared pytest setup: the packages live under src/ like run.py expects
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent / 'src'))

from algebra.scalars import cyclotomic_field  # noqa: E402
from family.shifted_powers import Family  # noqa: E402


@pytest.fixture
def dependent_triple():
    """(x + 1)^2 - (x - 1)^2 - 4x = 0"""
    return Family.from_pairs([(-1, 2), (1, 2), (0, 1)])


@pytest.fixture
def polya_cubes():
    """Three cubes and a constant; Polya with exponents (3, 3, 3, 0)"""
    return Family.from_pairs([(0, 3), (1, 3), (2, 3), (0, 0)])


@pytest.fixture
def q4():
    return cyclotomic_field(4)
