"""Exact symbolic computation over quaternion polynomial rings.

The package provides, over the rational quaternions:

- exact division-ring arithmetic (`quaternions`),
- polynomials with central variables, left evaluation at commuting points,
  and the evaluation product rule (`polyring`),
- left Groebner bases with exact cofactor tracking, ideal membership and
  unit-ideal detection (`groebner`),
- vanishing-condition checks and verified Rabinowitsch-style certificates
  (`nullstellensatz`),
- a shared text grammar with canonical printing (`textio`),
- a batch CLI (`cli`) and an HTTP service (`service`).
"""

from .groebner import (
    LeftIdeal,
    MembershipResult,
    ReductionTrace,
    buchberger,
    is_member,
    is_unit_ideal,
    normal_form,
)
from .nullstellensatz import (
    Certificate,
    CheckLine,
    ConditionReport,
    ExampleReport,
    NotUnitIdealError,
    ScalarFamilyReport,
    ScalarOutcome,
    VerificationFailedError,
    check_scalar_family,
    condition_holds,
    example_suite,
    rabinowitsch_certificate,
    search_N,
    vanishes_on,
    zero_locus_contains,
)
from .polyring import (
    DEGLEX,
    DEGREVLEX,
    LEX,
    CommutingPoint,
    MonomialOrder,
    NonCommutingPointError,
    Polynomial,
    VariableCountMismatchError,
    adjoin_variable,
    conjugate_point,
    eval_product_formula,
    evaluate,
    left_scalar_mul,
    right_scalar_mul,
    y_coefficients,
)
from .quaternions import (
    ONE,
    ZERO,
    I,
    J,
    K,
    NoRationalUnitPureError,
    Quaternion,
    commutes,
    conjugate_by,
    find_commuting_unit_pure,
    is_unit_pure,
)
from .textio import (
    CertificateDocument,
    ExpressionSource,
    ParseError,
    UnknownVariableError,
    ZeroDenominatorError,
    default_variables,
    parse_certificate,
    parse_ideal_file,
    parse_ideal_text,
    parse_point,
    parse_poly,
    parse_quaternion,
    pick_adjoined_name,
    print_point,
    print_poly,
    print_quaternion,
    render_certificate,
    validate_variables,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "CertificateDocument",
    "CheckLine",
    "CommutingPoint",
    "ConditionReport",
    "DEGLEX",
    "DEGREVLEX",
    "ExampleReport",
    "ExpressionSource",
    "I",
    "J",
    "K",
    "LEX",
    "LeftIdeal",
    "MembershipResult",
    "MonomialOrder",
    "NoRationalUnitPureError",
    "NonCommutingPointError",
    "NotUnitIdealError",
    "ONE",
    "ParseError",
    "Polynomial",
    "Quaternion",
    "ReductionTrace",
    "ScalarFamilyReport",
    "ScalarOutcome",
    "UnknownVariableError",
    "VariableCountMismatchError",
    "VerificationFailedError",
    "ZERO",
    "ZeroDenominatorError",
    "adjoin_variable",
    "buchberger",
    "check_scalar_family",
    "commutes",
    "condition_holds",
    "conjugate_by",
    "conjugate_point",
    "default_variables",
    "eval_product_formula",
    "evaluate",
    "example_suite",
    "find_commuting_unit_pure",
    "is_member",
    "is_unit_ideal",
    "is_unit_pure",
    "left_scalar_mul",
    "normal_form",
    "parse_certificate",
    "parse_ideal_file",
    "parse_ideal_text",
    "parse_point",
    "parse_poly",
    "parse_quaternion",
    "pick_adjoined_name",
    "print_point",
    "print_poly",
    "print_quaternion",
    "rabinowitsch_certificate",
    "render_certificate",
    "right_scalar_mul",
    "search_N",
    "validate_variables",
    "vanishes_on",
    "y_coefficients",
    "zero_locus_contains",
]
