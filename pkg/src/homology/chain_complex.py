"""
ChainComplex - Free chain groups C_n = Z^{|X_n|} with boundary matrices.

Boundary matrices of a semicubical set use the canonical cube order of each
grade for rows and columns.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from src.cubical.semicubical_set import SemicubicalSet
from .integer_matrix import IntegerMatrix, from_columns


class ChainComplex(BaseModel):
    """
    Ranks of C_0..C_top and differentials d_n: C_n → C_{n−1} for n = 1..top.
    """
    ranks: Tuple[int, ...] = Field(min_length=1)
    differentials: Dict[int, IntegerMatrix] = Field(default_factory=dict)

    model_config = {"frozen": True, "arbitrary_types_allowed": True}

    @model_validator(mode='after')
    def composable(self) -> 'ChainComplex':
        """cols(d_n) = ranks[n], rows(d_n) = ranks[n−1]"""
        if any(r < 0 for r in self.ranks):
            raise ValueError(f"Ranks must be non-negative: {self.ranks}")
        expected = set(range(1, len(self.ranks)))
        if set(self.differentials) != expected:
            raise ValueError(
                f"Differentials must be given for degrees {sorted(expected)}, "
                f"got {sorted(self.differentials)}"
            )
        for n, d in self.differentials.items():
            if d.shape != (self.ranks[n - 1], self.ranks[n]):
                raise ValueError(
                    f"d_{n} has shape {d.shape}, expected {(self.ranks[n - 1], self.ranks[n])}"
                )
        return self

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def differential(self, n: int) -> IntegerMatrix:
        """d_n, with zero maps outside 1..top."""
        if 1 <= n <= self.top:
            return self.differentials[n]
        rows = self.ranks[n - 1] if 0 <= n - 1 <= self.top else 0
        cols = self.ranks[n] if 0 <= n <= self.top else 0
        return IntegerMatrix.zeros(rows, cols)

    def boundary_squared_violations(self) -> List[int]:
        """Degrees n ≥ 2 with d_{n−1} ∘ d_n ≠ 0."""
        return [
            n for n in range(2, self.top + 1)
            if not (self.differentials[n - 1] @ self.differentials[n]).is_zero()
        ]

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * r for n, r in enumerate(self.ranks))


def _complex(X: SemicubicalSet, column) -> ChainComplex:
    sizes = X.grade_sizes() or (0,)
    differentials: Dict[int, IntegerMatrix] = {}
    for n in range(1, len(sizes)):
        differentials[n] = from_columns(sizes[n - 1], (column(cube) for cube in X.grade(n)))
    return ChainComplex(ranks=sizes, differentials=differentials)


def boundary_matrices(X: SemicubicalSet) -> ChainComplex:
    """
    Integral complex: d_n(σ) = Σ_i (−1)^i (∂_i^1 σ − ∂_i^0 σ).

    Coinciding faces merge into one entry.
    """
    def column(cube) -> Dict[int, int]:
        entries: Dict[int, int] = {}
        n = cube.dimension
        for i in range(1, n + 1):
            sign = (-1) ** i
            for epsilon, weight in ((1, sign), (0, -sign)):
                row = X.position(X.face(n, i, epsilon, cube))
                entries[row] = entries.get(row, 0) + weight
        return entries

    return _complex(X, column)


def directed_boundary_matrices(X: SemicubicalSet, epsilon: int) -> ChainComplex:
    """
    Goubault complex: d_n^ε(σ) = Σ_i (−1)^i ∂_i^ε σ.

    Raises:
        ValueError: If epsilon is not 0 or 1
    """
    if epsilon not in (0, 1):
        raise ValueError(f"epsilon must be 0 or 1, got {epsilon!r}")

    def column(cube) -> Dict[int, int]:
        entries: Dict[int, int] = {}
        n = cube.dimension
        for i in range(1, n + 1):
            row = X.position(X.face(n, i, epsilon, cube))
            entries[row] = entries.get(row, 0) + (-1) ** i
        return entries

    return _complex(X, column)


def chain_complex(X: SemicubicalSet, epsilon: Optional[int] = None) -> ChainComplex:
    """Integral complex when epsilon is None, otherwise the Goubault complex."""
    if epsilon is None:
        return boundary_matrices(X)
    return directed_boundary_matrices(X, epsilon)
