"""Exact computations for quasi-Frobenius Lie algebras, Lie bialgebras,
Drinfeld doubles and equivariant structures over the rationals."""

from .bialgebra import (Cobracket, LieBialgebra, RClassification, RMatrix, Verdict,
                        classify_r, cobracket_from_r, dual_bialgebra,
                        dual_bracket_from_cobracket, is_one_cocycle, validate_bialgebra,
                        yb_bracket)
from .double import (DoubleAlgebra, build_double, canonical_r, check_pairing_invariance,
                     double_cobracket, pairing_eval)
from .equivariant import (DoubleAction, EquivariantQF, assemble_double_action,
                          check_equivariant_morphism, check_mixed_compatibility,
                          induce_dual_action, validate_gqf)
from .errors import (ActingAlgebraMismatch, AntisymmetryConflict, CYBEViolation,
                     DimensionMismatch, DuplicateName, InvalidBialgebra, NotSkewError,
                     ParseError, PreconditionError, QflaError, SizeExceeded,
                     UnresolvedReference, WorkspaceError)
from .exact import (Matrix, MultiPoly, Rational, Tensor3, poly_det, rank, rational_det_rank,
                    solve_linear)
from .frobenius import (QuasiFrobenius, SkewForm, check_qf_morphism, coboundary_form,
                        exactness_witness, frobenius_functional_search,
                        frobenius_test_symbolic, is_nondegenerate, is_two_cocycle,
                        quasi_frobenius)
from .lie import (LieAlgebra, Representation, ad_matrix, bracket, coadjoint_matrix,
                  is_derivation, validate_lie, validate_representation)
from .workspace import WorkspaceDocument, parse_workspace, serialize

__all__ = [
    "ActingAlgebraMismatch", "ad_matrix", "AntisymmetryConflict", "assemble_double_action",
    "bracket", "build_double", "canonical_r", "check_equivariant_morphism",
    "check_mixed_compatibility", "check_pairing_invariance", "check_qf_morphism", "classify_r",
    "coadjoint_matrix", "coboundary_form", "Cobracket", "cobracket_from_r", "CYBEViolation",
    "DimensionMismatch", "double_cobracket", "DoubleAction", "DoubleAlgebra", "dual_bialgebra",
    "dual_bracket_from_cobracket", "DuplicateName", "EquivariantQF", "exactness_witness",
    "frobenius_functional_search", "frobenius_test_symbolic", "induce_dual_action",
    "InvalidBialgebra", "is_derivation", "is_nondegenerate", "is_one_cocycle",
    "is_two_cocycle", "LieAlgebra", "LieBialgebra", "Matrix", "MultiPoly", "NotSkewError",
    "pairing_eval", "parse_workspace", "ParseError", "poly_det", "PreconditionError",
    "QflaError", "quasi_frobenius", "QuasiFrobenius", "rank", "Rational", "rational_det_rank",
    "RClassification", "Representation", "RMatrix", "serialize", "SizeExceeded", "SkewForm",
    "solve_linear", "Tensor3", "UnresolvedReference", "validate_bialgebra", "validate_gqf",
    "validate_lie", "validate_representation", "Verdict", "WorkspaceDocument",
    "WorkspaceError", "yb_bracket",
]
