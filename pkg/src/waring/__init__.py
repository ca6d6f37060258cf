"""Waring rank of binary forms and the H polynomials"""

from .catalecticant import CatalecticantProfile, extract_Z, h_form, h_polynomial, hankel_rank_bound, hilbert_like_matrix
from .rank import WaringCertificate, binary_squarefree, waring_rank
from .legendre import (RealDecomposition, legendre_kernel_identity, real_decomposition, real_decomposition_residual,
                       shifted_legendre)
