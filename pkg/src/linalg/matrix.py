"""
Exact rank, nullspace and linear solving over the rationals and cyclotomic fields
"""

import logging
from typing import List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from algebra.scalars import QQ, CycloElement, Field, common_field, inverse
from core.errors import DimensionMismatchError

logger = logging.getLogger(__name__)

Vector = List


class Matrix:
    """Dense row-major matrix of exact scalars from a single field"""

    def __init__(self, rows: Sequence[Sequence], field: Optional[Field] = None, cols: Optional[int] = None):
        rows = [list(r) for r in rows]
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != self.cols for r in rows):
            raise DimensionMismatchError("Ragged matrix rows", rows=self.rows)
        self.field = field or common_field([c for r in rows for c in r])
        self.entries = [[self.field.coerce(c) for c in r] for r in rows]

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], field, cols=cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> List:
        return list(self.entries[i])

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
                      self.field, cols=self.rows)

    def apply(self, vector: Sequence) -> List:
        """Matrix-vector product"""
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f"Vector of length {len(vector)} does not match {self.cols} columns")
        zero = self.field.zero()
        out = []
        for r in self.entries:
            acc = zero
            for a, v in zip(r, vector):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return out

    def is_rational(self) -> bool:
        if self.field == QQ:
            return True
        return all(isinstance(c, CycloElement) and c.is_rational() for r in self.entries for c in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over {self.field!r})"


def _domain_matrix(M: Matrix) -> Tuple[DomainMatrix, Field]:
    """M as a sympy DomainMatrix; matrices with rational entries stay over QQ"""
    field = QQ if M.is_rational() else M.field
    rows = [[field.to_domain(c) for c in r] for r in M.entries]
    return DomainMatrix(rows, M.shape, field.domain), field


def row_reduce(M: Matrix) -> Tuple[List[List], List[int]]:
    """Nonzero rows of the reduced row echelon form and their pivot columns"""
    if M.rows == 0 or M.cols == 0:
        return [], []
    dm, field = _domain_matrix(M)
    reduced, pivots = dm.rref()
    flat = reduced.flat()
    rows = [[M.field.coerce(field.from_domain(v)) for v in flat[i * M.cols:(i + 1) * M.cols]]
            for i in range(len(pivots))]
    return rows, list(pivots)


def rank(M: Matrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return _domain_matrix(M)[0].rank()


def pivot_columns(M: Matrix) -> List[int]:
    """Columns of M that are not combinations of earlier columns"""
    return row_reduce(M)[1]


def normalize(vector: Sequence) -> List:
    """Scale so the first nonzero entry is 1"""
    for v in vector:
        if v:
            lead_inv = inverse(v)
            return [c * lead_inv for c in vector]
    return list(vector)


def nullspace(M: Matrix) -> List[Vector]:
    """Basis of the right kernel, one vector per free column, each normalized"""
    field = M.field
    rows, pivots = row_reduce(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [field.zero()] * M.cols
        vec[f] = field.one()
        for r, p in zip(rows, pivots):
            if r[f]:
                vec[p] = -r[f]
        basis.append(normalize(vec))
    logger.debug(f"Nullspace of {M!r}: dimension {len(basis)}")
    return basis


def left_nullspace(M: Matrix) -> List[Vector]:
    return nullspace(M.transpose())


def solve(M: Matrix, b: Sequence) -> Optional[Vector]:
    """One solution of M x = b, or None when the system is inconsistent"""
    if len(b) != M.rows:
        raise DimensionMismatchError(
            f"Right-hand side has length {len(b)}, expected {M.rows}", rows=M.rows, got=len(b))
    field = common_field([M.field.zero()] + list(b))
    augmented = Matrix([list(r) + [v] for r, v in zip(M.entries, b)], field, cols=M.cols + 1)
    rows, pivots = row_reduce(augmented)
    if pivots and pivots[-1] == M.cols:
        return None
    solution = [field.zero()] * M.cols
    for r, p in zip(rows, pivots):
        solution[p] = r[M.cols]
    return solution
