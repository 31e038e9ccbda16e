"""
IntegerMatrix - Sparse exact integer matrix.

Entries are Python ints (arbitrary precision) stored as a dict of nonzero
rows. Dense views use numpy object arrays so no entry is ever narrowed to a
machine integer.
"""

from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix


Rows = Dict[int, Dict[int, int]]


class IntegerMatrix:
    """
    An m×n integer matrix.

    Only nonzero entries are stored; `rows[r][c]` is the entry at (r, c).
    """

    def __init__(self, shape: Tuple[int, int], rows: Optional[Rows] = None) -> None:
        m, n = shape
        if m < 0 or n < 0:
            raise ValueError(f"Matrix dimensions must be non-negative, got {shape}")
        self.shape: Tuple[int, int] = (m, n)
        self._rows: Rows = {}
        for r, row in (rows or {}).items():
            if not 0 <= r < m:
                raise ValueError(f"Row index {r} out of range for shape {shape}")
            cleaned = {}
            for c, v in row.items():
                if not 0 <= c < n:
                    raise ValueError(f"Column index {c} out of range for shape {shape}")
                if v:
                    cleaned[c] = int(v)
            if cleaned:
                self._rows[r] = cleaned

    @classmethod
    def zeros(cls, m: int, n: int) -> 'IntegerMatrix':
        return cls((m, n))

    @classmethod
    def identity(cls, n: int) -> 'IntegerMatrix':
        return cls((n, n), {k: {k: 1} for k in range(n)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n_cols: Optional[int] = None) -> 'IntegerMatrix':
        """
        Build from a dense list of rows.

        `n_cols` is needed only when there are no rows to read the width from.
        """
        m = len(rows)
        n = len(rows[0]) if m else (n_cols or 0)
        if any(len(row) != n for row in rows):
            raise ValueError("Rows have different lengths")
        return cls((m, n), {r: dict(enumerate(row)) for r, row in enumerate(rows)})

    @classmethod
    def from_array(cls, array: np.ndarray) -> 'IntegerMatrix':
        array = np.asarray(array, dtype=object)
        if array.ndim != 2:
            raise ValueError(f"Expected a 2-d array, got {array.ndim} dimensions")
        return cls.from_rows([[int(v) for v in row] for row in array], array.shape[1])

    @classmethod
    def block_diagonal(cls, a: 'IntegerMatrix', b: 'IntegerMatrix') -> 'IntegerMatrix':
        """[[a, 0], [0, b]]"""
        (m1, n1), (m2, n2) = a.shape, b.shape
        rows: Rows = {r: dict(row) for r, row in a.items()}
        for r, row in b.items():
            rows[m1 + r] = {n1 + c: v for c, v in row.items()}
        return cls((m1 + m2, n1 + n2), rows)

    @property
    def nrows(self) -> int:
        return self.shape[0]

    @property
    def ncols(self) -> int:
        return self.shape[1]

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._rows.values())

    def entry(self, r: int, c: int) -> int:
        return self._rows.get(r, {}).get(c, 0)

    def row(self, r: int) -> Dict[int, int]:
        return dict(self._rows.get(r, {}))

    def items(self) -> Iterator[Tuple[int, Dict[int, int]]]:
        """(row index, {col: value}) for every nonzero row."""
        return iter(self._rows.items())

    def is_zero(self) -> bool:
        return not self._rows

    def to_rows(self) -> List[List[int]]:
        m, n = self.shape
        return [[self.entry(r, c) for c in range(n)] for r in range(m)]

    def to_array(self) -> np.ndarray:
        """Dense numpy view with dtype=object."""
        array = np.zeros(self.shape, dtype=object)
        for r, row in self._rows.items():
            for c, v in row.items():
                array[r, c] = v
        return array

    def to_domain_matrix(self, domain=ZZ) -> DomainMatrix:
        m, n = self.shape
        return DomainMatrix(
            [[domain(self.entry(r, c)) for c in range(n)] for r in range(m)], (m, n), domain
        )

    def transpose(self) -> 'IntegerMatrix':
        rows: Rows = {}
        for r, row in self._rows.items():
            for c, v in row.items():
                rows.setdefault(c, {})[r] = v
        return IntegerMatrix((self.shape[1], self.shape[0]), rows)

    def __matmul__(self, other: 'IntegerMatrix') -> 'IntegerMatrix':
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        rows: Rows = {}
        for r, row in self._rows.items():
            acc: Dict[int, int] = {}
            for k, v in row.items():
                for c, w in other._rows.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + v * w
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                rows[r] = acc
        return IntegerMatrix((self.shape[0], other.shape[1]), rows)

    def __neg__(self) -> 'IntegerMatrix':
        return IntegerMatrix(self.shape, {r: {c: -v for c, v in row.items()} for r, row in self._rows.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def determinant(self) -> int:
        """Exact determinant, computed by sympy over ZZ."""
        m, n = self.shape
        if m != n:
            raise ValueError(f"Determinant of a non-square {self.shape} matrix")
        if m == 0:
            return 1
        return int(self.to_domain_matrix(ZZ).det())

    def is_unimodular(self) -> bool:
        return self.shape[0] == self.shape[1] and abs(self.determinant()) == 1

    def rational_rank(self) -> int:
        """Rank over QQ by sympy's fraction-based elimination."""
        if 0 in self.shape or self.is_zero():
            return 0
        return self.to_domain_matrix(QQ).rank()

    def __repr__(self) -> str:
        return f"IntegerMatrix(shape={self.shape}, nnz={self.nnz})"


def from_columns(n_rows: int, columns: Iterable[Dict[int, int]]) -> IntegerMatrix:
    """Assemble a matrix from sparse columns {row: value}."""
    rows: Rows = {}
    n_cols = 0
    for c, column in enumerate(columns):
        n_cols = c + 1
        for r, v in column.items():
            if v:
                rows.setdefault(r, {})[c] = v
    return IntegerMatrix((n_rows, n_cols), rows)
