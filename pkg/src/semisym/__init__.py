"""Exact computations in semi-symmetric powers and algebras [chi](E).

A character sequence chi = (chi_d) on permutation groups W_d <= S_d
defines the graded algebra [chi](E) of a free module E = K^n.  The
tensor, symmetric and exterior algebras are the basic examples.

>>> from semisym import QQ, builtin_sequence, SemiSymmetricAlgebra
>>> ext = SemiSymmetricAlgebra(builtin_sequence("exterior", QQ, 3), n=3)
>>> ext.basis(2)
[(1, 2), (1, 3), (2, 3)]
"""

from .algebra import (
    ChiForm,
    ChiVector,
    SemiSymmetricAlgebra,
    TensorVector,
    apply_power_map,
    grade_project,
    power_map,
    tensor,
)
from .character import (
    Character,
    CharacterSequence,
    InvalidSequence,
    ValidationReport,
    builtin_sequence,
    character_from_generators,
    invert_character,
    validate_sequence,
)
from .coalgebra import (
    coassociativity_check,
    comul,
    counit,
    counit_law_check,
    duality_check,
)
from .diag import (
    eisenstein_counterexample,
    rank_mod_p,
    smith_normal_form,
    z15_counterexample,
)
from .duality import (
    dual_basis_coefficients,
    pair,
    pair_decomposable,
    pair_graded,
    pair_laplace,
    pair_tensor,
    pair_tensor_power,
)
from .errors import (
    ContextMismatch,
    DegreeMismatch,
    DegreeOverflow,
    HypothesisViolation,
    NotAUnit,
    SemisymError,
)
from .index import (
    act,
    classify,
    composition_reps,
    dot_action,
    enum_J,
    enum_J_composition,
    factorization_bijection_check,
)
from .inner import (
    left_inner,
    left_inner_basis,
    module_law_checks,
    right_inner,
    right_inner_basis,
)
from .monomial import MonomialModule, a_chi, classify_indices, theorem_II6_bases
from .perm import Permutation, PermutationGroup, compose, omega_shift, young_product
from .ring import EISENSTEIN, QQ, ZZ, Ring, invert_integer, modular, parse_ring, try_invert
from .schur import (
    ExactMatrix,
    lagrange_check,
    row_minor,
    schur_direct,
    schur_laplace,
    transpose_identity_check,
)

__version__ = "0.1.0"
