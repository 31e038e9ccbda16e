"""
Smith normal form over the integers.

Sparse elimination with the nonzero entry of least absolute value as pivot,
followed by a gcd/lcm pass that restores the divisibility chain. Optionally
tracks unimodular U, V with U·M·V = D.
"""

import logging
from typing import Dict, List, Optional, Set, Tuple

from pydantic import BaseModel

from .integer_matrix import IntegerMatrix


logger = logging.getLogger(__name__)


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, x, y) with x·a + y·b = g = gcd(a, b) ≥ 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


class SNFResult(BaseModel):
    """
    Diagonal of the Smith normal form, plus the transforms when requested.

    diagonal has length min(m, n); its nonzero entries come first and form
    a divisibility chain.
    """
    shape: Tuple[int, int]
    diagonal: Tuple[int, ...]
    U: Optional[IntegerMatrix] = None
    V: Optional[IntegerMatrix] = None

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return tuple(d for d in self.diagonal if d)

    @property
    def torsion(self) -> Tuple[int, ...]:
        """Invariant factors greater than 1."""
        return tuple(d for d in self.diagonal if d > 1)

    def diagonal_matrix(self) -> IntegerMatrix:
        return IntegerMatrix(self.shape, {k: {k: d} for k, d in enumerate(self.diagonal) if d})

    def has_divisibility_chain(self) -> bool:
        factors = self.invariant_factors
        if any(d < 0 for d in self.diagonal):
            return False
        if any(self.diagonal[k] == 0 and self.diagonal[k + 1] != 0 for k in range(len(self.diagonal) - 1)):
            return False
        return all(b % a == 0 for a, b in zip(factors, factors[1:]))

    def verify(self, M: IntegerMatrix) -> bool:
        """
        U·M·V = D with unimodular U, V and a divisibility chain.

        Raises:
            ValueError: If the result was computed without transforms
        """
        if self.U is None or self.V is None:
            raise ValueError("SNF result carries no transforms to verify")
        return (
            self.has_divisibility_chain()
            and self.U @ M @ self.V == self.diagonal_matrix()
            and self.U.is_unimodular()
            and self.V.is_unimodular()
        )


class SmithNormalForm:
    """
    Sparse Smith normal form computation for one matrix.
    """

    def __init__(self, M: IntegerMatrix, transforms: bool = False) -> None:
        self.shape = M.shape
        self.transforms = transforms
        m, n = M.shape
        self._rows: Dict[int, Dict[int, int]] = {r: dict(row) for r, row in M.items()}
        self._cols: Dict[int, Set[int]] = {}
        for r, row in self._rows.items():
            for c in row:
                self._cols.setdefault(c, set()).add(r)
        # U is kept row-wise, V column-wise
        self._U: Dict[int, Dict[int, int]] = {k: {k: 1} for k in range(m)} if transforms else {}
        self._V: Dict[int, Dict[int, int]] = {k: {k: 1} for k in range(n)} if transforms else {}

    def compute(self) -> SNFResult:
        pivots: List[Tuple[int, int, int]] = []
        while self._rows:
            r, c = self._choose_pivot()
            r, c = self._clear(r, c)
            value = self._rows[r][c]
            if value < 0:
                self._scale_row(r, -1)
                value = -value
            pivots.append((r, c, value))
            del self._rows[r]
            del self._cols[c]

        pivots = self._divisibility_pass(pivots)
        m, n = self.shape
        diagonal = tuple(v for _, _, v in pivots) + (0,) * (min(m, n) - len(pivots))
        U = V = None
        if self.transforms:
            U, V = self._permuted_transforms(pivots)
        logger.debug("SNF of %s: rank %d", self.shape, len(pivots))
        return SNFResult(shape=self.shape, diagonal=diagonal, U=U, V=V)

    # -------------------------------------------------------------------------
    # elimination

    def _choose_pivot(self) -> Tuple[int, int]:
        best: Optional[Tuple[int, int]] = None
        best_abs = 0
        for r, row in self._rows.items():
            for c, v in row.items():
                if best is None or abs(v) < best_abs:
                    best, best_abs = (r, c), abs(v)
                    if best_abs == 1:
                        return best
        if best is None:
            raise RuntimeError("Pivot search on a matrix with no nonzero entry")
        return best

    def _clear(self, r: int, c: int) -> Tuple[int, int]:
        """Clear row r and column c except the pivot, moving the pivot when a smaller remainder appears."""
        while True:
            p = self._rows[r][c]
            for r2 in sorted(self._cols[c] - {r}):
                q = self._rows[r2][c] // p
                self._add_row(r2, r, -q)
            for c2 in sorted(set(self._rows[r]) - {c}):
                q = self._rows[r][c2] // p
                self._add_col(c2, c, -q)

            remainders = [(abs(self._rows[r2][c]), r2, c) for r2 in self._cols[c] if r2 != r]
            remainders += [(abs(v), r, c2) for c2, v in self._rows[r].items() if c2 != c]
            if not remainders:
                return r, c
            _, r, c = min(remainders)

    def _add_row(self, target: int, source: int, q: int) -> None:
        """row target += q · row source"""
        if not q:
            return
        row = self._rows.setdefault(target, {})
        for c, v in self._rows[source].items():
            w = row.get(c, 0) + q * v
            if w:
                row[c] = w
                self._cols.setdefault(c, set()).add(target)
            else:
                row.pop(c, None)
                self._cols[c].discard(target)
        if not row:
            del self._rows[target]
        if self.transforms:
            urow = self._U[target]
            for k, v in self._U[source].items():
                w = urow.get(k, 0) + q * v
                if w:
                    urow[k] = w
                else:
                    urow.pop(k, None)

    def _add_col(self, target: int, source: int, q: int) -> None:
        """col target += q · col source"""
        if not q:
            return
        for r in list(self._cols.get(source, ())):
            row = self._rows[r]
            w = row.get(target, 0) + q * row[source]
            if w:
                row[target] = w
                self._cols.setdefault(target, set()).add(r)
            else:
                row.pop(target, None)
                self._cols[target].discard(r)
        if target in self._cols and not self._cols[target]:
            del self._cols[target]
        if self.transforms:
            vcol = self._V[target]
            for k, v in self._V[source].items():
                w = vcol.get(k, 0) + q * v
                if w:
                    vcol[k] = w
                else:
                    vcol.pop(k, None)

    def _scale_row(self, r: int, factor: int) -> None:
        self._rows[r] = {c: factor * v for c, v in self._rows[r].items()}
        if self.transforms:
            self._U[r] = {k: factor * v for k, v in self._U[r].items()}

    # -------------------------------------------------------------------------
    # divisibility chain

    def _divisibility_pass(self, pivots: List[Tuple[int, int, int]]) -> List[Tuple[int, int, int]]:
        pivots = sorted(pivots, key=lambda p: p[2])
        for i in range(len(pivots)):
            if pivots[i][2] == 1:
                continue
            for j in range(i + 1, len(pivots)):
                r1, c1, a = pivots[i]
                r2, c2, b = pivots[j]
                if b % a == 0:
                    continue
                g, x, y = extended_gcd(a, b)
                if self.transforms:
                    # [[a,0],[0,b]] → [[g,0],[0,ab/g]] by unimodular row and column moves
                    self._transform_rows(r1, r2, [[1, 1], [0, 1]])
                    self._transform_cols(c1, c2, [[x, -b // g], [y, a // g]])
                    self._transform_rows(r1, r2, [[1, 0], [-(y * b // g), 1]])
                pivots[i] = (r1, c1, g)
                pivots[j] = (r2, c2, a * b // g)
        return pivots

    def _transform_rows(self, r1: int, r2: int, T: List[List[int]]) -> None:
        """(U_r1, U_r2) ← T · (U_r1, U_r2)"""
        u1, u2 = self._U[r1], self._U[r2]
        new1: Dict[int, int] = {}
        new2: Dict[int, int] = {}
        for k in set(u1) | set(u2):
            v1, v2 = u1.get(k, 0), u2.get(k, 0)
            w1 = T[0][0] * v1 + T[0][1] * v2
            w2 = T[1][0] * v1 + T[1][1] * v2
            if w1:
                new1[k] = w1
            if w2:
                new2[k] = w2
        self._U[r1], self._U[r2] = new1, new2

    def _transform_cols(self, c1: int, c2: int, T: List[List[int]]) -> None:
        """(V_c1, V_c2) ← (V_c1, V_c2) · T"""
        v1, v2 = self._V[c1], self._V[c2]
        new1: Dict[int, int] = {}
        new2: Dict[int, int] = {}
        for k in set(v1) | set(v2):
            a, b = v1.get(k, 0), v2.get(k, 0)
            w1 = a * T[0][0] + b * T[1][0]
            w2 = a * T[0][1] + b * T[1][1]
            if w1:
                new1[k] = w1
            if w2:
                new2[k] = w2
        self._V[c1], self._V[c2] = new1, new2

    def _permuted_transforms(self, pivots: List[Tuple[int, int, int]]) -> Tuple[IntegerMatrix, IntegerMatrix]:
        """Move pivot k to position (k, k)."""
        m, n = self.shape
        pivot_rows = [r for r, _, _ in pivots]
        pivot_cols = [c for _, c, _ in pivots]
        row_order = pivot_rows + [r for r in range(m) if r not in set(pivot_rows)]
        col_order = pivot_cols + [c for c in range(n) if c not in set(pivot_cols)]
        U = IntegerMatrix((m, m), {k: self._U[r] for k, r in enumerate(row_order)})
        v_rows: Dict[int, Dict[int, int]] = {}
        for k, c in enumerate(col_order):
            for row, v in self._V[c].items():
                v_rows.setdefault(row, {})[k] = v
        V = IntegerMatrix((n, n), v_rows)
        return U, V


def smith_normal_form(M: IntegerMatrix, transforms: bool = False) -> SNFResult:
    """
    Convenience function for the Smith normal form of M.

    Args:
        M: Integer matrix
        transforms: Also compute unimodular U, V with U·M·V = D

    Returns:
        SNFResult
    """
    return SmithNormalForm(M, transforms).compute()


def rank(M: IntegerMatrix) -> int:
    """Rank of M, read off its Smith normal form."""
    return smith_normal_form(M).rank
