"""homology: exact integer matrices, Smith normal form, chain complexes, Mayer–Vietoris."""

from .integer_matrix import IntegerMatrix
from .smith_normal_form import SmithNormalForm, SNFResult, rank, smith_normal_form
from .chain_complex import (
    ChainComplex,
    boundary_matrices,
    chain_complex,
    directed_boundary_matrices,
)
from .groups import HomologyCalculator, directed_homology, homology, integral_homology
from .mayer_vietoris import MayerVietorisChecker, mv_check

__all__ = [
    'IntegerMatrix',
    'SmithNormalForm',
    'SNFResult',
    'rank',
    'smith_normal_form',
    'ChainComplex',
    'boundary_matrices',
    'chain_complex',
    'directed_boundary_matrices',
    'HomologyCalculator',
    'directed_homology',
    'homology',
    'integral_homology',
    'MayerVietorisChecker',
    'mv_check',
]
