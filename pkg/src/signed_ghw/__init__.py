"""Exact generalized Hamming weights for incidence codes of signed graphs."""

from __future__ import annotations

from .errors import (ArgumentError, DisagreementError, DomainError, GraphParseError,
                     ResourceError, SignedGhwError)
from .exact_algebra import ExactMatrix, ScalarDomain
from .ghw import GhwTable, code_ghw, code_ghw_table, wei_duality_check
from .matroid import Matroid, VectorMatroid, incidence_matroid, signed_graphic_matroid
from .signed_graph import SignedGraph

__all__ = [
    "ArgumentError", "DisagreementError", "DomainError", "ExactMatrix",
    "GhwTable", "GraphParseError", "Matroid", "ResourceError", "ScalarDomain",
    "SignedGhwError", "SignedGraph", "VectorMatroid", "code_ghw", "code_ghw_table",
    "incidence_matroid", "signed_graphic_matroid", "wei_duality_check",
]
