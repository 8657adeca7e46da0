"""Exact-arithmetic engine for Hopf-algebra module/comodule pairs: realizes
their (para-)cyclic and cocyclic complexes as sparse matrices, certifies the
structural identities and isomorphisms degree by degree, and computes
Hochschild and cyclic homology dimensions over Q or GF(p)."""

from .exactla import FieldSpec, LinMap, Subspace, VecSpace

__all__ = ["FieldSpec", "LinMap", "Subspace", "VecSpace"]
__version__ = "0.1.0"
