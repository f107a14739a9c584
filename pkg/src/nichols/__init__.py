"""Exact computation of Nichols algebras of rank-2 braided vector spaces."""

from .braidings import (BraidingSpec, Kind, Ordering, SquareOperator, as_braiding,
                        braiding_from_json, braiding_to_json, c_flat, diagonal_braiding,
                        is_rigid, load_braiding, satisfies_braid_eq, satisfies_qybe,
                        to_braiding, transform)
from .catalog import (FAMILIES, ExpectedProfile, FamilySpec, PBWLadder, family,
                      instantiate, pbw_count, verify_profile)
from .derivations import all_derivations, derive
from .errors import (ConductorMismatch, ConstraintViolation, DegreeCapExceeded,
                     NicholsError, NoMatchingRow, ScalarSyntaxError)
from .nichols import (Growth, GrowthClass, HilbertWindow, NicholsTower, growth_classify,
                      hilbert_series, quadratic_relations, verify_relation)
from .report import Check, VerifyReport
from .scalars import (Scalar, format_scalar, parse_scalar, q_binomial, q_factorial,
                      q_number, root_of_unity_order, zeta)
from .tensor import DegreeOperator, TensorElem, braid_lift, symmetrizer

__all__ = [
    "BraidingSpec", "Kind", "Ordering", "SquareOperator", "as_braiding",
    "braiding_from_json", "braiding_to_json", "c_flat", "diagonal_braiding", "is_rigid",
    "load_braiding", "satisfies_braid_eq", "satisfies_qybe", "to_braiding", "transform",
    "FAMILIES", "ExpectedProfile", "FamilySpec", "PBWLadder", "family", "instantiate",
    "pbw_count", "verify_profile", "all_derivations", "derive", "ConductorMismatch",
    "ConstraintViolation", "DegreeCapExceeded", "NicholsError", "NoMatchingRow",
    "ScalarSyntaxError", "Growth", "GrowthClass", "HilbertWindow", "NicholsTower",
    "growth_classify", "hilbert_series", "quadratic_relations", "verify_relation",
    "Check", "VerifyReport", "Scalar", "format_scalar", "parse_scalar", "q_binomial",
    "q_factorial", "q_number", "root_of_unity_order", "zeta", "DegreeOperator",
    "TensorElem", "braid_lift", "symmetrizer",
]
