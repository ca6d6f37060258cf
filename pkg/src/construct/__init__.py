"""Explicit constructions with exact certificates, and seeded counterexample probes"""

from .families import (DependenceCertificate, lowdim_family, lowdim_report, pairing_identity_check,
                       unity_dependence_certificate, unity_dependence_family, unity_identity)
from .probes import PROBE_KINDS, ProbeParams, ProbeReport, conjecture_probe, sample_family, shift_grid
