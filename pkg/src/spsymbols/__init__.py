"""Exact symplectic modular symbols over Z, Z[i] and Z[w].

Symbols, the subdivision relation, reduction to unimodular symbols, and a
chamber-chain verifier for every relation.
"""
from .building import ChamberChain, chains_equal, expand, verify_relation
from .errors import SymbolError
from .linalg import Matrix, index, index_of_vectors, saturate, smith_normal_form
from .random_instances import RandomSpec, random_instance, random_instances
from .reduction import ReductionConfig, build_link, lift_link_term, reduce, saturate_link_pairs
from .rings import ZI, ZW, ZZ, ring_from_tag
from .subdivision import Candidate, check_collinearity, find_candidate, make_m_i, subdivision, subdivision_relation
from .symbols import (
    SignedRelation,
    Sl2Symbol,
    SymplecticSymbol,
    is_unimodular,
    normalize,
    permute,
    reduce_sl2,
    swap_bar,
)
from .symplectic import SymplecticSpace, depth, is_sp_member, isotropy_condition, sp_inverse, symplectic_hnf

__all__ = [
    "Candidate", "ChamberChain", "Matrix", "RandomSpec", "ReductionConfig", "SignedRelation",
    "Sl2Symbol", "SymbolError", "SymplecticSpace", "SymplecticSymbol", "ZI", "ZW", "ZZ",
    "build_link", "chains_equal", "check_collinearity", "depth", "expand", "find_candidate",
    "index", "index_of_vectors", "is_sp_member", "is_unimodular", "isotropy_condition",
    "lift_link_term", "make_m_i", "normalize", "permute", "random_instance", "random_instances",
    "reduce", "reduce_sl2", "ring_from_tag", "saturate", "saturate_link_pairs",
    "smith_normal_form", "sp_inverse", "subdivision", "swap_bar", "symplectic_hnf",
    "subdivision_relation", "verify_relation",
]
