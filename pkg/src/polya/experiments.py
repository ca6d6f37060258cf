"""
Monte-Carlo checks of the genericity bounds

Shifts are drawn uniformly with replacement from S = {0, ..., |S| - 1}. Trial number i
draws from its own Philox stream keyed by (seed, i), so the outcome of a run does not
depend on how trials are spread over worker processes.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from algebra.polynomials import expand_shifted_power
from algebra.scalars import Field, field_from_tag
from core.errors import DomainError, EnumerationTooLargeError
from family.polya_sequence import PolyaSequence, polya_check
from linalg.matrix import Matrix, left_nullspace, rank
from .counting import enumerate_polya
from .genericity import (bounded_sequence_count, fixed_sequence_bound, refined_sweep_bound, require_relation_bound,
                         sweep_bound)
from .sequences import bounded_degree

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_LIMIT = 5000
# trials handed to a worker at once
CHUNK_SIZE = 64


@dataclass
class ExperimentConfig:
    s: int
    set_size: int
    trials: int
    seed: int
    field: str = "rational"
    workers: int = 1
    enumeration_limit: int = DEFAULT_ENUMERATION_LIMIT

    def __post_init__(self):
        if self.s < 1:
            raise DomainError(f"s must be positive, got {self.s}")
        if self.trials < 1:
            raise DomainError(f"trials must be at least 1, got {self.trials}")
        if self.set_size < 1:
            raise DomainError(f"|S| must be at least 1, got {self.set_size}")
        if not 0 <= self.seed < 2 ** 64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        field_from_tag(self.field)


@dataclass
class ExperimentReport:
    s: int
    set_size: int
    trials: int
    seed: int
    independent: int
    bound: Fraction
    exps: Optional[List[int]] = None
    sequences: Optional[int] = None
    refined_bound: Optional[Fraction] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def frequency(self) -> float:
        return self.independent / self.trials

    @property
    def vacuous(self) -> bool:
        return self.bound <= 0

    @property
    def sigma(self) -> float:
        """Binomial standard error at the bound"""
        b = min(max(float(self.bound), 0.0), 1.0)
        return math.sqrt(b * (1 - b) / self.trials)

    @property
    def passed(self) -> bool:
        return self.vacuous or self.frequency >= float(self.bound) - 3 * self.sigma

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            's': self.s,
            'set_size': self.set_size,
            'trials': self.trials,
            'seed': self.seed,
            'frequency': self.frequency,
            'bound': float(self.bound),
            'pass': self.passed,
            'bound_exact': str(self.bound),
            'sigma': self.sigma,
            'vacuous_bound': self.vacuous,
        }
        if self.exps is not None:
            payload['exps'] = self.exps
        if self.sequences is not None:
            payload['sequences'] = self.sequences
        if self.refined_bound is not None:
            payload['refined_bound'] = float(self.refined_bound)
        payload.update(self.extra)
        return payload


def trial_generator(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, trial])))


def sample_shifts(seed: int, trial: int, s: int, set_size: int) -> List[int]:
    return [int(a) for a in trial_generator(seed, trial).integers(0, set_size, size=s)]


def distinct_shift_probability(s: int, set_size: int) -> Fraction:
    """Probability that s uniform draws from |S| values are pairwise distinct"""
    p = Fraction(1)
    for i in range(s):
        p *= Fraction(max(set_size - i, 0), set_size)
    return p


def _independent(shifts: Sequence[int], exps: Sequence[int], field_: Field, cache: Dict) -> bool:
    """Colliding (shift, exponent) pairs count as dependent; other dependencies must respect the exponent bound"""
    if len(set(zip(shifts, exps))) < len(exps):
        return False
    width = max(exps) + 1
    rows = []
    for a, e in zip(shifts, exps):
        row = cache.get((a, e))
        if row is None:
            coeffs = list(expand_shifted_power(a, e, field_).coeffs)
            row = cache[(a, e)] = coeffs
        rows.append(row + [field_.zero()] * (width - len(row)))
    M = Matrix(rows, field_, cols=width)
    if rank(M) == len(exps):
        return True
    require_relation_bound(exps, left_nullspace(M))
    return False


def _run_trials(sequences: Tuple[Tuple[int, ...], ...], s: int, set_size: int, seed: int,
                field_name: str, trials: Sequence[int]) -> List[bool]:
    """One flag per trial: every sequence is independent at the sampled shifts"""
    field_ = field_from_tag(field_name)
    outcomes = []
    for trial in trials:
        shifts = sample_shifts(seed, trial, s, set_size)
        cache: Dict = {}
        outcomes.append(all(_independent(shifts, exps, field_, cache) for exps in sequences))
    return outcomes


def _count_successes(sequences: Sequence[Tuple[int, ...]], cfg: ExperimentConfig) -> int:
    sequences = tuple(tuple(e) for e in sequences)
    chunks = [range(start, min(start + CHUNK_SIZE, cfg.trials)) for start in range(0, cfg.trials, CHUNK_SIZE)]
    args = (sequences, cfg.s, cfg.set_size, cfg.seed, cfg.field)
    if cfg.workers > 1 and len(chunks) > 1:
        logger.debug(f"Spreading {cfg.trials} trials over {cfg.workers} workers")
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(_run_trials, *args, list(chunk)) for chunk in chunks]
            results = [f.result() for f in futures]
    else:
        results = [_run_trials(*args, list(chunk)) for chunk in chunks]
    return sum(sum(flags) for flags in results)


def monte_carlo_independence(e: PolyaSequence, cfg: ExperimentConfig) -> ExperimentReport:
    """Empirical frequency of independence for one sequence against 1 - s(s-1)/|S|"""
    if e.s != cfg.s:
        raise DomainError(f"Sequence of length {e.s} does not match s={cfg.s}")
    if not polya_check(e):
        logger.warning(f"{list(e.exps)} is not a Polya sequence; the bound does not apply")
    successes = _count_successes([e.exps], cfg)
    report = ExperimentReport(cfg.s, cfg.set_size, cfg.trials, cfg.seed, successes,
                              fixed_sequence_bound(cfg.s, cfg.set_size), exps=list(e.exps))
    logger.info(f"Independence frequency {report.frequency:.4f} vs bound {float(report.bound):.4f}")
    return report


def bounded_sequences(s: int, limit: int) -> List[Tuple[int, ...]]:
    """Exponent tuples of P'_s that can fail, i.e. with a repeated exponent"""
    total = bounded_sequence_count(s)
    if total > limit:
        raise EnumerationTooLargeError(
            f"P'_{s} has {total} sequences, above the limit {limit}", count=total, limit=limit)
    if total == 0:
        return []
    out = []
    for mt in enumerate_polya(s, bounded_degree(s)):
        e = mt.to_sequence()
        if not e.has_distinct_exponents():
            out.append(e.exps)
    return out


def genericity_sweep(s: int, cfg: ExperimentConfig) -> ExperimentReport:
    """Frequency of shift tuples that keep every sequence of P'_s independent, against 1 - f(s)/|S|"""
    if s != cfg.s:
        raise DomainError(f"Sweep size {s} does not match s={cfg.s}")
    if s < 2:
        raise DomainError(f"The sweep needs s >= 2, got {s}")
    sequences = bounded_sequences(s, cfg.enumeration_limit)
    successes = _count_successes(sequences, cfg) if sequences else cfg.trials
    report = ExperimentReport(
        s, cfg.set_size, cfg.trials, cfg.seed, successes, sweep_bound(s, cfg.set_size),
        sequences=bounded_sequence_count(s), refined_bound=refined_sweep_bound(s, cfg.set_size),
        extra={'checked_sequences': len(sequences)})
    if report.vacuous:
        logger.info(f"Bound 1 - f({s})/{cfg.set_size} is vacuous")
    logger.info(f"Sweep over {len(sequences)} sequences: frequency {report.frequency:.4f}")
    return report
