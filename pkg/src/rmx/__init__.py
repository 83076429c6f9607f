"""Exact denominators of normalized R-matrices for quantum loop algebras of
type ADE, with independent combinatorial and linear-algebra cross-checks."""

from rmx.ar_quiver import DynkinQuiver, IndecObject, monotone_quiver, orient
from rmx.denominators import (
    Denominator,
    Monomial,
    denominator,
    denominator_kashiwara,
    dorey_middle_term,
    is_tensor_irreducible,
    pole_order,
)
from rmx.quantum_cartan import CTildeTable, ctilde, ctilde_table
from rmx.root_system import CartanData, build_cartan, positive_roots

__all__ = [
    "CartanData",
    "CTildeTable",
    "Denominator",
    "DynkinQuiver",
    "IndecObject",
    "Monomial",
    "build_cartan",
    "ctilde",
    "ctilde_table",
    "denominator",
    "denominator_kashiwara",
    "dorey_middle_term",
    "is_tensor_irreducible",
    "monotone_quiver",
    "orient",
    "pole_order",
    "positive_roots",
]

__version__ = "0.1.0"
