"""
Seeded searches for counterexamples to the two open independence questions

A probe only reports what it looked at. "No counterexample found" describes the
sampled grid and is experimental evidence, never a proof.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from algebra.scalars import QQ, Field, cyclotomic_field
from core.errors import DomainError, DuplicateNodeError
from family.shifted_powers import Family, ShiftedPower, dependence_coefficients, is_independent
from polya.genericity import require_relation_bound
from .families import DependenceCertificate

logger = logging.getLogger(__name__)

PROBE_KINDS = ("bigexp", "gmk")
MAX_PROBE_S = 5
MAX_CONDUCTOR = 8
DEFAULT_SAMPLES = 200
# exponents are drawn from [threshold, threshold + EXPONENT_SPAN]
EXPONENT_SPAN = 3
RADII = (Fraction(1), Fraction(2), Fraction(1, 2))
RATIONAL_SHIFTS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(-1, 2),
                   Fraction(3), Fraction(-3))


@dataclass(frozen=True)
class ProbeParams:
    s: int
    a: int = 2
    b: int = -4
    d: int = 4
    conductor: int = 1
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self):
        if not 1 <= self.s <= MAX_PROBE_S:
            raise DomainError(f"Probes run for 1 <= s <= {MAX_PROBE_S}, got {self.s}")
        if not 1 <= self.conductor <= MAX_CONDUCTOR:
            raise DomainError(f"Conductor must lie in 1..{MAX_CONDUCTOR}, got {self.conductor}")
        if self.samples < 1:
            raise DomainError(f"samples must be positive, got {self.samples}")

    @property
    def threshold(self) -> int:
        return max(0, self.a * self.s + self.b)


def shift_grid(conductor: int) -> List:
    """Rational grid for conductor 1, otherwise 0 and r xi^j for the radii above"""
    if conductor == 1:
        return list(RATIONAL_SHIFTS)
    field_ = cyclotomic_field(conductor)
    return [field_.zero()] + [field_.root_power(j) * r for r in RADII for j in range(conductor)]


def _field(params: ProbeParams) -> Field:
    return QQ if params.conductor == 1 else cyclotomic_field(params.conductor)


def _exponent_range(kind: str, params: ProbeParams) -> range:
    if kind == "bigexp":
        return range(params.threshold, params.threshold + EXPONENT_SPAN + 1)
    return range(0, params.d + 1)


def sample_family(kind: str, params: ProbeParams, seed: int, index: int) -> Optional[Family]:
    """Sample number index of a probe; None when it repeats a (shift, exponent) pair"""
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))
    grid = shift_grid(params.conductor)
    exps = _exponent_range(kind, params)
    picks = rng.integers(0, len(grid), size=params.s)
    degrees = rng.integers(exps.start, exps.stop, size=params.s)
    try:
        return Family([ShiftedPower(grid[int(p)], int(e)) for p, e in zip(picks, degrees)], _field(params))
    except DuplicateNodeError:
        return None


def _augmented(F: Family, d: int) -> Family:
    return Family(list(F.terms) + [ShiftedPower(-1, d + 1), ShiftedPower(0, d + 1)], F.field)


def _dependent(F: Family) -> bool:
    """Dependent samples are checked against the exponent bound before they are reported"""
    if is_independent(F):
        return False
    require_relation_bound([t.exponent for t in F], dependence_coefficients(F))
    return True


def _classify(kind: str, F: Optional[Family], params: ProbeParams) -> str:
    """skipped, eligible or counterexample"""
    if F is None:
        return "skipped"
    if kind == "bigexp":
        return "counterexample" if _dependent(F) else "eligible"
    if _dependent(F):
        return "skipped"
    return "counterexample" if _dependent(_augmented(F, params.d)) else "eligible"


def _scan(kind: str, params: ProbeParams, seed: int, indices: Sequence[int]) -> List[str]:
    return [_classify(kind, sample_family(kind, params, seed, i), params) for i in indices]


@dataclass
class ProbeReport:
    kind: str
    params: ProbeParams
    seed: int
    search_space: str
    checked: int = 0
    skipped: int = 0
    counterexample_index: Optional[int] = None
    counterexample: Optional[DependenceCertificate] = None
    known_witness: Optional[Dict[str, Any]] = None
    note: str = "experimental evidence, not a proof"

    @property
    def status(self) -> str:
        if self.counterexample is not None:
            return "counterexample found"
        return "no counterexample found"

    def to_dict(self) -> Dict[str, Any]:
        from core.serialization import certificate_to_json

        return {
            'kind': self.kind,
            'params': asdict(self.params),
            'seed': self.seed,
            'search_space': self.search_space,
            'checked': self.checked,
            'skipped': self.skipped,
            'status': self.status,
            'counterexample_index': self.counterexample_index,
            'counterexample': certificate_to_json(self.counterexample) if self.counterexample else None,
            'known_witness': self.known_witness,
            'note': self.note,
        }


def _describe(kind: str, params: ProbeParams) -> str:
    exps = _exponent_range(kind, params)
    grid = "rational grid" if params.conductor == 1 else f"0 and r xi^j, r in {{1, 2, 1/2}}, xi of order {params.conductor}"
    text = f"{params.samples} samples of s={params.s} shifts from the {grid}, exponents in [{exps.start}, {exps.stop - 1}]"
    if kind == "gmk":
        text += f"; independent samples are extended by (x+1)^{params.d + 1} and x^{params.d + 1}"
    return text


def _legendre_witness(params: ProbeParams) -> Optional[Dict[str, Any]]:
    """Over the reals, H_(2d+1) with d = s - 3 gives s dependent powers of degree >= 2s - 5"""
    d = params.s - 3
    if d < 1 or params.conductor != 1 or params.threshold > 2 * d + 1:
        return None
    from waring.legendre import real_decomposition

    decomposition = real_decomposition(d)
    return {
        'description': f"(x+1)^{2 * d + 2} - x^{2 * d + 2} is a combination of {d + 1} real powers of degree {2 * d + 1}",
        'd': d,
        'roots': decomposition.roots,
        'weights': decomposition.weights,
        'residual': decomposition.residual,
        'exact': False,
    }


def conjecture_probe(kind: str, params: ProbeParams, seed: int, workers: int = 1) -> ProbeReport:
    """Scan a fixed, seeded sample of small families; the first dependent one is certified exactly"""
    if kind not in PROBE_KINDS:
        raise DomainError(f"Unknown probe kind {kind!r}; expected one of {PROBE_KINDS}")
    if seed < 0:
        raise DomainError(f"seed must be non-negative, got {seed}")
    if kind == "gmk" and params.s > params.d:
        raise DomainError(f"s={params.s} powers of degree <= {params.d} plus two more are always dependent")
    report = ProbeReport(kind, params, seed, _describe(kind, params))
    indices = list(range(params.samples))
    if workers > 1:
        chunks = [indices[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan, [kind] * workers, [params] * workers, [seed] * workers, chunks))
        outcome = [""] * params.samples
        for chunk, part in zip(chunks, parts):
            for i, label in zip(chunk, part):
                outcome[i] = label
    else:
        outcome = _scan(kind, params, seed, indices)

    report.skipped = outcome.count("skipped")
    report.checked = params.samples - report.skipped
    first = next((i for i, label in enumerate(outcome) if label == "counterexample"), None)
    if first is not None:
        F = sample_family(kind, params, seed, first)
        if kind == "gmk":
            F = _augmented(F, params.d)
        report.counterexample_index = first
        report.counterexample = DependenceCertificate(F, dependence_coefficients(F)[0])
        logger.warning(f"Probe {kind} found a dependent family at sample {first}")
    if kind == "bigexp":
        report.known_witness = _legendre_witness(params)
    logger.info(f"Probe {kind}: {report.status} after {report.checked} families")
    return report
