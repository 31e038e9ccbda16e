"""
Homology groups of chain complexes and of net state spaces.

H_n = Z^b ⊕ Z/d_1 ⊕ ⋯ with b = rank C_n − rank d_n − rank d_{n+1} and the
d_i the invariant factors > 1 of d_{n+1}. Degrees run from 0 to the top
grade; every group above it is zero.
"""

import logging
from typing import Dict, List, Optional

from src.cubical.builder import build_q
from src.models.homology_group import HomologyGroup
from src.models.state_space import StateSpace
from src.utils.errors import MalformedComplexError
from .chain_complex import ChainComplex, boundary_matrices, directed_boundary_matrices
from .smith_normal_form import SNFResult, smith_normal_form


logger = logging.getLogger(__name__)


class HomologyCalculator:
    """Computes H_* of a chain complex from Smith normal forms of its differentials."""

    def compute(self, complex: ChainComplex) -> List[HomologyGroup]:
        """
        Homology groups H_0..H_top.

        Raises:
            MalformedComplexError: If d_{n−1} ∘ d_n ≠ 0 for some n
        """
        broken = complex.boundary_squared_violations()
        if broken:
            raise MalformedComplexError(
                f"d∘d is nonzero in degrees {broken}; not a chain complex"
            )

        forms: Dict[int, SNFResult] = {
            n: smith_normal_form(complex.differential(n)) for n in range(1, complex.top + 1)
        }

        def rank(n: int) -> int:
            return forms[n].rank if n in forms else 0

        groups = []
        for n, size in enumerate(complex.ranks):
            betti = size - rank(n) - rank(n + 1)
            torsion = forms[n + 1].torsion if n + 1 in forms else ()
            groups.append(HomologyGroup(degree=n, betti=betti, torsion=torsion))
        logger.debug("Homology of complex with ranks %s: %s", complex.ranks, [g.render() for g in groups])
        return groups


def homology(complex: ChainComplex) -> List[HomologyGroup]:
    """Convenience function: homology groups of a chain complex."""
    return HomologyCalculator().compute(complex)


def integral_homology(space: StateSpace, max_dim: Optional[int] = None) -> List[HomologyGroup]:
    """Homology of the integral complex of Q(S,E,I)."""
    return homology(boundary_matrices(build_q(space, max_dim)))


def directed_homology(space: StateSpace, epsilon: int, max_dim: Optional[int] = None) -> List[HomologyGroup]:
    """
    Goubault homology H_*^ε of a state space, through Q(S,E,I).

    ε = 0 gives initial homology (H_0 generated by deadlocks), ε = 1 final
    homology (H_0 generated by senders).
    """
    return homology(directed_boundary_matrices(build_q(space, max_dim), epsilon))
