"""
Chain-level Mayer–Vietoris verification.

For subcomplexes X1, X2 of a common ambient, checks grade by grade that

    0 → C(X1∩X2) →θ C(X1) ⊕ C(X2) →δ C(X1∪X2) → 0,   θσ = (σ, σ),  δ(σ1, σ2) = σ1 − σ2

is a short exact sequence of chain complexes, and reports the matrix of the
induced map H_0(θ). The same θ and δ serve the integral complexes and both
Goubault complexes.
"""

import logging
from typing import Dict, List, Optional, Tuple

from src.cubical.semicubical_set import SemicubicalSet
from src.cubical.subcomplexes import connected_components, intersection, union
from src.models.cube import Cube
from src.models.reports import GradeExactness, MayerVietorisReport
from .chain_complex import ChainComplex, chain_complex
from .integer_matrix import IntegerMatrix
from .smith_normal_form import smith_normal_form


logger = logging.getLogger(__name__)


def _theta(meet: SemicubicalSet, X1: SemicubicalSet, X2: SemicubicalSet, n: int) -> IntegerMatrix:
    offset = len(X1.grade(n))
    rows: Dict[int, Dict[int, int]] = {}
    for col, cube in enumerate(meet.grade(n)):
        rows.setdefault(X1.position(cube), {})[col] = 1
        rows.setdefault(offset + X2.position(cube), {})[col] = 1
    return IntegerMatrix((offset + len(X2.grade(n)), len(meet.grade(n))), rows)


def _delta(join: SemicubicalSet, X1: SemicubicalSet, X2: SemicubicalSet, n: int) -> IntegerMatrix:
    offset = len(X1.grade(n))
    rows: Dict[int, Dict[int, int]] = {}
    for col, cube in enumerate(X1.grade(n)):
        rows.setdefault(join.position(cube), {})[col] = 1
    for col, cube in enumerate(X2.grade(n)):
        rows.setdefault(join.position(cube), {})[offset + col] = -1
    return IntegerMatrix((len(join.grade(n)), offset + len(X2.grade(n))), rows)


def _h0_generators(X: SemicubicalSet, epsilon: Optional[int]) -> Tuple[List[str], Dict[Cube, int]]:
    """
    Basis of H_0 and the generator index of each vertex class (absent = 0).

    Integral: one generator per connected component. Goubault ε: the vertices
    that are not the ε-end of any edge.
    """
    if epsilon is None:
        labels = []
        index: Dict[Cube, int] = {}
        for k, component in enumerate(connected_components(X)):
            vertices = component.grade(0)
            labels.append("{" + ", ".join(v.base.to_string() for v in vertices) + "}")
            for v in vertices:
                index[v] = k
        return labels, index
    hit = {X.face(1, 1, epsilon, edge) for edge in X.grade(1)}
    generators = [v for v in X.grade(0) if v not in hit]
    return [v.base.to_string() for v in generators], {v: k for k, v in enumerate(generators)}


def _h0_theta(
    meet: SemicubicalSet, X1: SemicubicalSet, X2: SemicubicalSet, epsilon: Optional[int]
) -> Tuple[List[List[int]], List[str], List[str]]:
    source_labels, source_index = _h0_generators(meet, epsilon)
    first_labels, first_index = _h0_generators(X1, epsilon)
    second_labels, second_index = _h0_generators(X2, epsilon)

    representatives: Dict[int, Cube] = {}
    for vertex, k in source_index.items():
        representatives.setdefault(k, vertex)

    offset = len(first_labels)
    matrix = [[0] * len(source_labels) for _ in range(offset + len(second_labels))]
    for k, vertex in sorted(representatives.items()):
        if vertex in first_index:
            matrix[first_index[vertex]][k] += 1
        if vertex in second_index:
            matrix[offset + second_index[vertex]][k] += 1
    targets = [f"X1:{label}" for label in first_labels] + [f"X2:{label}" for label in second_labels]
    return matrix, source_labels, targets


class MayerVietorisChecker:
    """
    Verifies the Mayer–Vietoris short exact sequence for a pair of subcomplexes.

    epsilon None selects the integral complexes, 0 or 1 the Goubault ones.
    """

    def __init__(self, epsilon: Optional[int] = None) -> None:
        if epsilon not in (None, 0, 1):
            raise ValueError(f"epsilon must be None, 0 or 1, got {epsilon!r}")
        self.epsilon = epsilon

    def check(self, X1: SemicubicalSet, X2: SemicubicalSet) -> MayerVietorisReport:
        """
        Run every grade-wise exactness check.

        Raises:
            IncompatibleComplexError: If X1 and X2 have no common ambient
        """
        meet = intersection(X1, X2)
        join = union(X1, X2)
        complexes = {
            name: chain_complex(X, self.epsilon)
            for name, X in (("meet", meet), ("first", X1), ("second", X2), ("join", join))
        }

        top = max(X.dimension for X in (X1, X2, join, meet))
        grades = [self._grade(n, meet, X1, X2, join, complexes) for n in range(top + 1)]

        euler = (
            X1.euler_characteristic() + X2.euler_characteristic()
            == join.euler_characteristic() + meet.euler_characteristic()
        )
        matrix, sources, targets = _h0_theta(meet, X1, X2, self.epsilon)
        report = MayerVietorisReport(
            epsilon=self.epsilon,
            grades=grades,
            euler_identity=euler,
            h0_theta=matrix,
            h0_source=sources,
            h0_target=targets,
        )
        if not report.exact:
            logger.warning("Mayer-Vietoris sequence is not exact (epsilon=%s)", self.epsilon)
        return report

    def _grade(
        self,
        n: int,
        meet: SemicubicalSet,
        X1: SemicubicalSet,
        X2: SemicubicalSet,
        join: SemicubicalSet,
        complexes: Dict[str, ChainComplex],
    ) -> GradeExactness:
        theta = _theta(meet, X1, X2, n)
        delta = _delta(join, X1, X2, n)
        theta_form = smith_normal_form(theta)
        delta_rank = smith_normal_form(delta).rank
        middle = theta.nrows

        chain_maps = True
        if n >= 1:
            direct_sum = IntegerMatrix.block_diagonal(
                complexes["first"].differential(n), complexes["second"].differential(n)
            )
            theta_below = _theta(meet, X1, X2, n - 1)
            delta_below = _delta(join, X1, X2, n - 1)
            chain_maps = (
                direct_sum @ theta == theta_below @ complexes["meet"].differential(n)
                and complexes["join"].differential(n) @ delta == delta_below @ direct_sum
            )

        return GradeExactness(
            grade=n,
            intersection=theta.ncols,
            direct_sum=middle,
            union=delta.nrows,
            theta_rank=theta_form.rank,
            delta_rank=delta_rank,
            theta_injective=theta_form.rank == theta.ncols,
            delta_surjective=delta_rank == delta.nrows,
            composite_zero=(delta @ theta).is_zero(),
            middle_exact=theta_form.rank + delta_rank == middle,
            image_saturated=all(d == 1 for d in theta_form.invariant_factors),
            chain_maps=chain_maps,
        )


def mv_check(X1: SemicubicalSet, X2: SemicubicalSet, epsilon: Optional[int] = None) -> MayerVietorisReport:
    """
    Convenience function for MayerVietorisChecker(epsilon).check(X1, X2).

    Example:
        X1 = Q(N_n), X2 = Q(N'_n) as restrictions of Q(P_n): every grade is
        exact and h0_theta is [[1, 1], [1, 1]].
    """
    return MayerVietorisChecker(epsilon).check(X1, X2)
