"""Clifford algebras Cl(p,q), their pseudounitary and symplectic subsets,
and a check suite for Sp(Cl(1,3)) ~ Sp(4,R)."""

from .clifford import (
    CL13,
    Blade,
    GradeSelector,
    Multivector,
    Signature,
    SignatureError,
    blade_mul,
    dagger,
    dim_grade,
    grade_project,
    mv_add,
    mv_mul,
    mv_scale,
    norm,
    scalar_product,
    star,
    trace,
)
from .gamma_rep import J, MAJORANA, GammaTable, gamma, gamma_inverse, matrix_star_relation
from .harness import VerificationReport, run_theorem_suite, sample_sp4_matrix
from .lie_sets import (
    SP_BASIS,
    CliffordSet,
    MembershipReport,
    commutator,
    det_clifford,
    exp,
    is_member,
    sample,
)
from .parser import parse_multivector

__all__ = [
    "CL13", "Blade", "GradeSelector", "Multivector", "Signature", "SignatureError",
    "blade_mul", "dagger", "dim_grade", "grade_project", "mv_add", "mv_mul", "mv_scale",
    "norm", "scalar_product", "star", "trace",
    "J", "MAJORANA", "GammaTable", "gamma", "gamma_inverse", "matrix_star_relation",
    "VerificationReport", "run_theorem_suite", "sample_sp4_matrix",
    "SP_BASIS", "CliffordSet", "MembershipReport", "commutator", "det_clifford", "exp",
    "is_member", "sample", "parse_multivector",
]
