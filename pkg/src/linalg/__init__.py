"""Exact linear algebra over the scalar fields"""

from .matrix import Matrix, left_nullspace, normalize, nullspace, pivot_columns, rank, row_reduce, solve
