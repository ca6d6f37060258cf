"""Polya-sequence combinatorics and genericity experiments"""

from .counting import MultTuple, catalan, count_polya, distinct_exponent_count, enumerate_polya
from .sequences import bounded_ceiling, bounded_degree, clamp_exponents, clamp_sequence, project_sequence
from .genericity import (FiniteShiftedPowerReport, bounded_sequence_count, dependent_max_exponent_bound, f_bound,
                         relation_bound_violations, require_relation_bound,
                         finite_shifted_power_bound, fixed_sequence_bound, refined_sweep_bound, sweep_bound)
from .experiments import (ExperimentConfig, ExperimentReport, distinct_shift_probability, genericity_sweep,
                          monte_carlo_independence, sample_shifts)
