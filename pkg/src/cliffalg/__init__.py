"""Clifford algebra Cl(p,q) computation and verification engine.

Dense multivector arithmetic over arbitrary signatures, the conjugation
operators and signature-dependent Hermitian scalar product, Hermitian
idempotents with their left-ideal bases, the induced normal matrix
representations, and numerical verification suites for the structural
theorems and tabulated matrices.
"""

from .algebra import (
    EPS_DEFAULT,
    N_MAX,
    Multivector,
    Signature,
    SignatureMismatch,
    all_signatures,
    anticommutator,
    blade,
    clifford_product,
    commutator,
    exterior_product,
    generator,
    generator_contraction,
    grade_project,
    multivector_from_dict,
    multivector_to_dict,
    random_multivector,
    trace,
    volume_element,
)
from .backend import BACKEND
from .brackets import bracket_laws, check_all_laws
from .golden import golden_cases, golden_matrices
from .idempotents import (
    IdealBasis,
    ideal_dimension,
    in_corner,
    in_ideal,
    is_hermitian_idempotent,
    preset_ideal_basis,
    q_basis,
    standard_ideal_basis,
    standard_idempotent,
)
from .involutions import (
    clifford_conjugate,
    com_bracket,
    complex_conjugate,
    dagger,
    grade_involution,
    hermitian_split,
    hodge_star,
    norm,
    reversion,
    scalar_product,
)
from .representations import Representation, is_normal, left_eigen_check
from .structure import (
    GradeSupport,
    check_support,
    grade2_nondegeneracy,
    predicted_support,
    solve_commutator_system,
)
from .unitary import (
    conjugated_bases,
    exp_multivector,
    group_dimension_check,
    is_unitary,
    random_unitary,
)
from .verify import VerifyReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EPS_DEFAULT",
    "N_MAX",
    "IdealBasis",
    "GradeSupport",
    "Multivector",
    "Representation",
    "Signature",
    "SignatureMismatch",
    "VerifyReport",
    "all_signatures",
    "anticommutator",
    "blade",
    "bracket_laws",
    "check_all_laws",
    "check_support",
    "clifford_conjugate",
    "clifford_product",
    "com_bracket",
    "commutator",
    "complex_conjugate",
    "conjugated_bases",
    "dagger",
    "exp_multivector",
    "exterior_product",
    "generator",
    "generator_contraction",
    "golden_cases",
    "golden_matrices",
    "grade2_nondegeneracy",
    "grade_involution",
    "grade_project",
    "group_dimension_check",
    "hermitian_split",
    "hodge_star",
    "ideal_dimension",
    "in_corner",
    "in_ideal",
    "is_hermitian_idempotent",
    "is_normal",
    "is_unitary",
    "left_eigen_check",
    "multivector_from_dict",
    "multivector_to_dict",
    "norm",
    "predicted_support",
    "preset_ideal_basis",
    "q_basis",
    "random_multivector",
    "random_unitary",
    "reversion",
    "run_suite",
    "scalar_product",
    "solve_commutator_system",
    "standard_ideal_basis",
    "standard_idempotent",
    "trace",
    "volume_element",
]
