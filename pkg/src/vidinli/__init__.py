"""Exact-arithmetic Vidinli algebras and their relatives.

Construction, degenerate pushouts, binary projective-geometry
reconstruction, spectral analysis and local-to-global classification of
the Vidinli family, all over the rationals.
"""

from .linalg import Matrix, Polynomial, Subspace, Vector, char_poly, det, kernel_basis, rref
from .algebra import (
    Algebra,
    Element,
    Morphism,
    algebra_from_json,
    algebra_to_json,
    anticommutator,
    check_morphism,
    commutator,
    dumps_algebra,
    ideal_closure,
    is_simple_certified,
    left_mult_matrix,
    loads_algebra,
    multiply,
    right_mult_matrix,
    subalgebra_closure,
)
from .constructors import (
    CrossProduct7,
    SkewForm,
    complex_algebra,
    conjugate,
    coordfree_product,
    cross7,
    heisenberg,
    inverse,
    jordan_part,
    jspin,
    lie_part,
    quaternion_pushforward,
    quaternions,
    standard_symplectic,
    twisted_v3,
    vidinli,
    vidinli7_directional,
    vidinli_jordan,
    vidinli_type,
)

__version__ = "0.1.0"
