"""Exact-arithmetic kernel for finite-dimensional Hopf algebras.

Structure-constant presentations over Q or a cyclotomic field, axiom
validation, integrals and modular data, the dual with its canonical pairing
and actions, hard-coded identity suites up to the fourth-power antipode
formula, and a small identity language for checking further formulas.
"""

from .scalars import FieldSpec, RATIONAL, Scalar, cyclotomic_field
from .linalg import Matrix, Tensor3, invert, kron, nullspace, solve
from .hopf import (HopfAlgebra, LinearFunctional, ValidationReport, compute_antipode,
                   convolve, galois_maps, unit_counit_map)
from .modular import ModularData, left_integral, modular_automorphism, modular_data, \
    modular_element, right_integral, scaling_constant
from .duality import PairedSystem, build_dual, dual_integrals, pair_system, pairing_value
from .verify import (VerificationReport as IdentitySuiteReport, biduality_check,
                     check_dual_modular_pairing, check_dual_radford, check_modular_adjoints,
                     check_radford, run_all_checks, verify_algebra)
from .identities import IdentityProgram, evaluate, evaluate_corpus, load_corpus, parse_identity
from .catalog import (GroupPresentation, build_function_algebra, build_group_algebra,
                      build_sweedler, build_taft, builtin, BUILTIN_BUILDERS,
                      cyclic_group, read_algebra, symmetric_group, write_algebra)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
