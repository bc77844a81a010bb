"""Exact computations for generalized quantum groups U(chi): Nichols parts,
Kharchenko roots, simple modules and the skew center."""
from .scalars import CycScalar, CyclotomicField, field
from .weights import BicharTable, OmegaTable
from .nichols import NicholsTables, pairing
from .roots import RootSystem, sieve_roots
from .algebra import QuantumAlgebra, U0Element, AlgebraElement, sh_project
from .modules import CharacterTable, character
from .center import hc_image, reconstruct_central, verify_skew_central

__all__ = [
    "CycScalar", "CyclotomicField", "field", "BicharTable", "OmegaTable",
    "NicholsTables", "pairing", "RootSystem", "sieve_roots",
    "QuantumAlgebra", "U0Element", "AlgebraElement", "sh_project",
    "CharacterTable", "character", "hc_image", "reconstruct_central", "verify_skew_central",
]
