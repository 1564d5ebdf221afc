"""Branching tables for the imprimitive complex reflection groups G(de,e,r),
bounded exhaustive verifiers for the supporting necklace combinatorics, and
an independent character-theoretic cross-check."""

from .irreps import GroupParams, IrrepLabel, OrbitLabel, enumerate_irreps
from .branching import BranchingTable, induction_table, restriction_mult
from .chartab import compare_canonical, restriction_table_oracle

__version__ = "0.1.0"

__all__ = [
    "GroupParams",
    "IrrepLabel",
    "OrbitLabel",
    "BranchingTable",
    "enumerate_irreps",
    "induction_table",
    "restriction_mult",
    "restriction_table_oracle",
    "compare_canonical",
    "__version__",
]
