"""Exact-arithmetic numerical semigroups, Apery sets, and identity checks.

The package constructs numerical semigroups, their Apery sets and canonical
paths in the semigroup tree, and verifies a family of two-sided identities
(gap sums against Apery sums, their symmetric-function and divided-
difference generalizations, multiplicative variants, root-system analogues,
and a numerical q-Bernoulli specialization) by computing both sides
independently.
"""

from .semigroup import (
    NumericalSemigroup, AperySet, HeightPartition,
    from_generators, from_gaps, apery_set, height_partition,
)
from .partitions import conjugate_partition
from .treepath import (
    CanonicalPath, PathStep, canonical_path,
    telescoping_sum, telescoping_product, determinant_relation,
)
from .symfunc import (
    Poly, elementary, complete, complete_series, product_poly,
    divided_difference, e_recurrence_check, h_recurrence_check,
)
from .identities import (
    FunctionTable, SymmetricSpec, IdentityReport, random_function_table,
    verify_gassert_shor, verify_general, verify_products,
    verify_inverse_products, verify_elementary, verify_complete,
    verify_divided_differences, verify_power_sum_products,
    verify_gassert_shor_qbernoulli, structural_reports,
    generic_z_samples, inverse_product_degree_bound, evaluation_points,
)
from .qbernoulli import (
    QBernoulliParams, ConvergenceError, q_number, base_eval, shifted_eval,
    difference_relation_residual, semigroup_weight_function,
    weight_difference_residual,
)
from .roots import (
    RootSystem, FloorIdentityInstance, build_root_system, all_root_systems,
    cartan_matrix, verify_poincare_products, verify_height_exponent,
    verify_height_exponent_qbernoulli, verify_floor_doubling,
    verify_divisor_identity,
)

__version__ = "0.1.0"
