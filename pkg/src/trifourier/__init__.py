"""Exact triangularization of Fourier transforms over GF(2) symplectic spaces,
plus the non-abelian Fourier matrices of the symmetric groups on up to five
points."""

from .cyclotomic import Cyc
from .family import Family, build_family, build_family_prime, build_family_ucb, delta
from .fourier import CobMatrix, change_of_basis, phi
from .gf2 import Subspace, SymplecticSpace, canonical_subspace, is_isotropic, make_space
from .nonabelian import MPair, enumerate_m, nonabelian_ft, piece_partition, s3_new_basis
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "Cyc",
    "CobMatrix",
    "Family",
    "MPair",
    "Report",
    "Subspace",
    "SymplecticSpace",
    "build_family",
    "build_family_prime",
    "build_family_ucb",
    "canonical_subspace",
    "change_of_basis",
    "delta",
    "enumerate_m",
    "is_isotropic",
    "make_space",
    "nonabelian_ft",
    "phi",
    "piece_partition",
    "s3_new_basis",
    "__version__",
]
