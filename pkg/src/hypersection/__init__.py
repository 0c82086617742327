"""Exact certificates for forcing-equation counter-examples to the hypersection problem."""

from .classifier import (
    BundleDegreeData,
    ClassificationReport,
    ForcingDatum,
    Label,
    OracleDisagreementError,
    bundle_degree_data,
    check_condition1,
    check_condition2,
    check_corollary_monomial,
    classify,
    det_bundle_exponent,
    kernel_bundle_exponent_rank2,
    normal_bundle_exponent,
    self_intersection_number,
    twist_exponents,
)
from .cone import ConeError, ConeSurface, NoZPowerError, NotHomogeneousError, SingularConeError, build_cone, hyperplane_degree, jacobian_check
from .groebner import (
    DivisionResult,
    GroebnerBasis,
    ResourceLimitError,
    buchberger,
    ideal_membership,
    linear_membership_oracle,
    normal_form,
    radical_membership,
    s_polynomial,
    vanishes_only_at_origin,
)
from .parse import PolynomialSyntaxError, parse_polynomial
from .polycore import MonomialOrder, Polynomial, format_polynomial, homogeneity, homogeneous_degree, partial_derivative

__version__ = "0.1.0"
