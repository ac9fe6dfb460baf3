"""Exact classification of four-dimensional partially alternative real division algebras."""

from .algebra import (StructureTable, TdParams, TpParams, associator, build_td, build_tp,
                      change_of_basis, commutator, multiply)
from .classify import (automorphism_group, canonicalize, isomorphic, lie_classify,
                       search_automorphisms)
from .errors import PadivError
from .forms import division_td, division_tp, division_tp_sufficient, forms_pq, forms_rs
from .pa import check_pa
from .units import eigen_decompose, unit_set_td, unit_set_tp, units_bruteforce

__version__ = "0.1.0"

__all__ = [
    "StructureTable", "TpParams", "TdParams", "multiply", "associator", "commutator",
    "change_of_basis", "build_tp", "build_td", "forms_pq", "forms_rs", "division_tp",
    "division_tp_sufficient", "division_td", "unit_set_tp", "unit_set_td", "units_bruteforce",
    "eigen_decompose", "check_pa", "canonicalize", "isomorphic", "automorphism_group",
    "search_automorphisms", "lie_classify", "PadivError",
]
