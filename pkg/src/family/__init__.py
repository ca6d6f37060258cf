"""Shifted-power families, exponent conditions and independence witnesses"""

from .shifted_powers import (Family, ShiftedPower, dependence_coefficients, dimension, is_independent,
                             max_independent_subfamily, wronskian)
from .polya_sequence import PolyaSequence, gmk_condition, polya_check
from .conditions import (BigExponentReport, OddSequenceRecord, atkinson_sharma_condition, big_exponent_conditions,
                         complex_polya_lower_bound, jordan_condition, jordan_family, odd_sequences)
from .witnesses import real_halfplus_witness, real_top_exponent_witness, sqrt_witness
