"""Exact Weingarten calculus for the unitary group and the symmetric-group
machinery behind it."""

from .algebra import ClassFunction, GroupAlgebraElement, class_structure_constants
from .characters import CharacterTable, character, character_table, dim_irrep, schur_dim
from .connection import class_product, collins_expansion, connection_table, top_coefficients
from .integrals import MonomialSpec, haar_mc_oracle, monomial_integral, wg_via_monomial
from .partitions import CapacityError, Partition, partitions_of
from .permutations import Permutation
from .ratfunc import D, RationalFunction
from .tableaux import StandardTableau, Tableau, good_permutations, rsk, rsk_inverse, straighten
from .tensorpoly import formanek_verify, script_T_d
from .weingarten import (
    conjecture_scan,
    jucys_series,
    wg_characters,
    wg_full_cycle,
    wg_oracle_linear,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError", "CharacterTable", "ClassFunction", "D", "GroupAlgebraElement",
    "MonomialSpec", "Partition", "Permutation", "RationalFunction", "StandardTableau",
    "Tableau", "character", "character_table", "class_product", "class_structure_constants",
    "collins_expansion", "conjecture_scan", "connection_table", "dim_irrep", "formanek_verify",
    "good_permutations", "haar_mc_oracle", "jucys_series", "monomial_integral", "partitions_of",
    "rsk", "rsk_inverse", "schur_dim", "script_T_d", "straighten", "top_coefficients",
    "wg_characters", "wg_full_cycle", "wg_oracle_linear", "wg_via_monomial",
]
