"""Multipliers and weak multipliers of finite-dimensional algebras, computed exactly."""

from .algebra import (Algebra, NihilDecomposition, NotAComplement, NotAssociative, NotZeropotent,
                      WrongDimension, central_elements, find_identity, find_left_identity,
                      find_right_identity, from_structural_matrix, left_annihilator,
                      left_central_elements, load_algebra, multiply, nihil_decomposition, opposite,
                      product_set, product_span, right_annihilator, right_central_elements,
                      structural_matrix, two_sided_annihilator)
from .field import QQ, Field, FieldMismatch, Fp, scalar_arith
from .linalg import Matrix, Subspace, extend_to_complement, in_span, nullspace, rref
from .multiplier import (Kind, MultiplierSetDescription, MultiplierSpace, check_full, check_weak,
                         describe_multiplier_sets, full_system, left_multiplication,
                         multipliers_via_left_identity, multipliers_via_right_identity,
                         right_multiplication, scalar_multiplication, solve_linear_full,
                         solve_linear_weak, solve_restricted_full, solve_restricted_weak,
                         verify_closure, weak_system)

__version__ = "0.1.0"
