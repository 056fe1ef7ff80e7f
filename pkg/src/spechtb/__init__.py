"""Irreducible Specht modules for Iwahori-Hecke algebras of type B.

Exact combinatorics for q of infinite order (any Q) and q = -1 (any Q),
with the type A step at q = -1 delegated to a pluggable oracle.
"""
from .combinatorics import (
    Bipartition,
    Comparison,
    HeckeParams,
    Node,
    Partition,
    beta_set,
    bip,
    bipartitions,
    conjugate,
    dominance,
    dominates,
    partitions,
    residue,
    residue_multiset,
    same_block,
)
from .decomp_inf import (
    is_inf_irreducible_all_parity,
    is_irreducible_inf,
    shape_predicate,
    simples_spechts_inf,
    specht_constituents_inf,
)
from .e2 import classify, is_irreducible_e2, reduction_chain, restrict_all
from .kernels import BACKEND
from .parsing import ParseError, parse_bipartition, parse_partition
from .signatures import (
    Involution,
    compatible_involutions,
    iota_s,
    is_dominant,
    signature,
    suitable_pairs,
)
from .typea import CanonicalBasisOracle, canonical_basis
from .verdict import Outcome, Verdict

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Bipartition",
    "CanonicalBasisOracle",
    "Comparison",
    "HeckeParams",
    "Involution",
    "Node",
    "Outcome",
    "ParseError",
    "Partition",
    "Verdict",
    "beta_set",
    "bip",
    "bipartitions",
    "canonical_basis",
    "classify",
    "compatible_involutions",
    "conjugate",
    "dominance",
    "dominates",
    "iota_s",
    "is_dominant",
    "is_inf_irreducible_all_parity",
    "is_irreducible_e2",
    "is_irreducible_inf",
    "parse_bipartition",
    "parse_partition",
    "partitions",
    "reduction_chain",
    "residue",
    "residue_multiset",
    "restrict_all",
    "same_block",
    "shape_predicate",
    "signature",
    "simples_spechts_inf",
    "specht_constituents_inf",
    "suitable_pairs",
]
