"""
Validation of the cubical identities.

Independent of the builder: checks only the face table, so it also catches
hand-edited or corrupted sets.
"""

from typing import List

from src.models.reports import Violation
from .semicubical_set import SemicubicalSet


class CubicalValidator:
    """
    Checks ∂_i^{n−1,α} ∂_j^{n,β} = ∂_{j−1}^{n−1,β} ∂_i^{n,α} for all i < j,
    and that every face is a cube of the grade below.
    """

    def validate(self, X: SemicubicalSet) -> List[Violation]:
        """
        Collect every violation in X.

        Returns:
            Violations in canonical cube order; empty iff X is a semicubical set
        """
        violations = self._membership(X)
        if violations:
            # identities are meaningless on faces outside X
            return violations
        for n, grade in X.grades():
            if n < 2:
                continue
            for cube in grade:
                violations.extend(self._identities(X, n, cube))
        return violations

    def _membership(self, X: SemicubicalSet) -> List[Violation]:
        violations = []
        for n, grade in X.grades():
            if n < 1:
                continue
            lower = set(X.grade(n - 1))
            for cube in grade:
                for (i, alpha), face in X.faces_of(cube).items():
                    if face is None:
                        detail = "face missing"
                    elif face not in lower:
                        detail = f"face {face} is not a cube of grade {n - 1}"
                    else:
                        continue
                    violations.append(Violation(
                        kind="membership", n=n, i=i, alpha=alpha,
                        cube=str(cube), detail=detail,
                    ))
        return violations

    def _identities(self, X: SemicubicalSet, n: int, cube) -> List[Violation]:
        violations = []
        for j in range(2, n + 1):
            for i in range(1, j):
                for alpha in (0, 1):
                    for beta in (0, 1):
                        left = X.face(n - 1, i, alpha, X.face(n, j, beta, cube))
                        right = X.face(n - 1, j - 1, beta, X.face(n, i, alpha, cube))
                        if left != right:
                            violations.append(Violation(
                                n=n, i=i, j=j, alpha=alpha, beta=beta,
                                cube=str(cube), detail=f"{left} != {right}",
                            ))
        return violations


def validate(X: SemicubicalSet) -> List[Violation]:
    """Convenience function: list the cubical-identity violations of X."""
    return CubicalValidator().validate(X)
