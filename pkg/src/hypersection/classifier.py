"""Degree arithmetic for forcing bundles and the not-Stein classification.

For homogeneous ``f1, f2, f0`` on a cone ``X = V(h)`` the forcing equation
``f1*t1 + f2*t2 + f0 = 0`` cuts out ``W``.  The sign of
``delta = d1 + d2 - d0`` decides what ``W - H`` looks like once the two
algebraic hypotheses hold:

* ``delta < 0``: the section has negative self-intersection; not Stein.
* ``delta > 0``: the section is ample; the complement is affine.
* ``delta = 0``: Serre's situation; not affine, Steinness undecided.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .cone import ConeSurface
from .groebner import NonHomogeneousError, ideal_membership, linear_membership_oracle, vanishes_only_at_origin
from .polycore import DEFAULT_ORDER, MonomialOrder, Polynomial, format_polynomial, homogeneity


class OracleDisagreementError(RuntimeError):
    """Groebner membership and the linear-algebra oracle gave different answers."""


class Label(enum.Enum):
    COUNTEREXAMPLE_NOT_STEIN = "counterexample_not_stein"
    AFFINE_COMPLEMENT = "affine_complement"
    SERRE_BOUNDARY = "serre_boundary"
    HYPOTHESIS_FAILED = "hypothesis_failed"


LABEL_WORDING = {
    Label.COUNTEREXAMPLE_NOT_STEIN: "CounterexampleNotStein: W - H is not Stein, but meets every analytic surface in a Stein set",
    Label.AFFINE_COMPLEMENT: "AffineComplement: the section is an ample divisor, its complement is affine, hence Stein",
    Label.SERRE_BOUNDARY: "SerreBoundary: not affine; Steinness not decided by this criterion",
    Label.HYPOTHESIS_FAILED: "HypothesisFailed",
}


@dataclass(frozen=True)
class ForcingDatum:
    f1: Polynomial
    f2: Polynomial
    f0: Polynomial
    d1: int
    d2: int
    d0: int

    @classmethod
    def from_polynomials(cls, f1: Polynomial, f2: Polynomial, f0: Polynomial) -> "ForcingDatum":
        degrees = []
        for name, f in (("f1", f1), ("f2", f2), ("f0", f0)):
            hom = homogeneity(f)
            if hom.degree is None:
                what = "zero" if hom.is_zero else "not homogeneous"
                raise NonHomogeneousError(f"{name} = {f} is {what}")
            if hom.degree < 1:
                raise NonHomogeneousError(f"{name} = {f} must have positive degree")
            degrees.append(hom.degree)
        if not f1.ring == f2.ring == f0.ring:
            raise ValueError("f1, f2, f0 must share a ring")
        return cls(f1, f2, f0, *degrees)

    @property
    def delta(self) -> int:
        return self.d1 + self.d2 - self.d0

    def forcing_equation(self) -> str:
        def wrap(f):
            s = format_polynomial(f)
            return f"({s})" if len(f.terms) > 1 else s

        return f"{wrap(self.f1)}*t1 + {wrap(self.f2)}*t2 + {format_polynomial(self.f0)} = 0"


# ---------------------------------------------------------------------------
# degree arithmetic
# ---------------------------------------------------------------------------


def twist_exponents(m: int, degrees: Sequence[int]) -> list[int]:
    return [m - d for d in degrees]


def det_bundle_exponent(n: int, degrees: Sequence[int], m: int) -> int:
    """k with Det V_m = H_Y^k, i.e. sum(e_i) - m = -sum(d_i) + (n - 1) m."""
    if len(degrees) != n:
        raise ValueError(f"expected {n} degrees, got {len(degrees)}")
    return -sum(degrees) + (n - 1) * m


def kernel_bundle_exponent_rank2(e0: int, d0: int, d1: int, d2: int) -> int:
    return e0 + d0 - d1 - d2


def normal_bundle_exponent(d1: int, d2: int, d0: int) -> int:
    return d1 + d2 - d0


def self_intersection_number(d1: int, d2: int, d0: int, deg_hy: int) -> int:
    if deg_hy < 1:
        raise ValueError("deg H_Y must be positive")
    return normal_bundle_exponent(d1, d2, d0) * deg_hy


def check_corollary_monomial(r: int, d1: int, d2: int, d0: int) -> bool:
    """Do x^d1, y^d2, z^d0 on a degree-r cone satisfy the monomial criterion?"""
    return d1 >= 1 and d2 >= 1 and d1 + d2 < d0 < r


@dataclass(frozen=True)
class BundleDegreeData:
    n: int
    degrees: tuple[int, ...]
    m: int
    twists: tuple[int, ...]
    det_exponent: int


def bundle_degree_data(degrees: Sequence[int], m: int) -> BundleDegreeData:
    degrees = tuple(degrees)
    return BundleDegreeData(
        n=len(degrees),
        degrees=degrees,
        m=m,
        twists=tuple(twist_exponents(m, degrees)),
        det_exponent=det_bundle_exponent(len(degrees), degrees, m),
    )


# ---------------------------------------------------------------------------
# hypotheses and classification
# ---------------------------------------------------------------------------


def check_condition1(cone: ConeSurface, datum: ForcingDatum, order: MonomialOrder = DEFAULT_ORDER) -> bool:
    """f1 and f2 cut out only the vertex on X."""
    return vanishes_only_at_origin([datum.f1, datum.f2, cone.h], order)


def check_condition2(
    cone: ConeSurface, datum: ForcingDatum, order: MonomialOrder = DEFAULT_ORDER, oracle: bool = False
) -> bool:
    """f0 is not in (f1, f2) near the vertex.

    For homogeneous data this is graded membership of f0 in (f1, f2, h).
    """
    member = ideal_membership(datum.f0, [datum.f1, datum.f2, cone.h], order)
    if oracle:
        other = linear_membership_oracle(datum.f0, datum.f1, datum.f2, cone.h)
        if other != member:
            raise OracleDisagreementError(
                f"membership of {datum.f0} in ({datum.f1}, {datum.f2}, {cone.h}): groebner={member}, linear={other}"
            )
    return not member


@dataclass(frozen=True)
class ClassificationReport:
    cone: ConeSurface
    datum: ForcingDatum
    condition1: bool
    condition2: bool
    delta: int
    deg_hy: int
    self_intersection: int
    normal_bundle_exponent: int
    m: int
    kernel_exponent: int
    det_exponent: int
    label: Label
    failed_condition: str | None
    forcing_equation: str
    notes: tuple[str, ...] = ()


def label_for(condition1: bool, condition2: bool, delta: int) -> tuple[Label, str | None]:
    if not condition1:
        return Label.HYPOTHESIS_FAILED, "condition1"
    if not condition2:
        return Label.HYPOTHESIS_FAILED, "condition2"
    if delta < 0:
        return Label.COUNTEREXAMPLE_NOT_STEIN, None
    if delta > 0:
        return Label.AFFINE_COMPLEMENT, None
    return Label.SERRE_BOUNDARY, None


def classify(
    cone: ConeSurface,
    datum: ForcingDatum,
    oracle_check: bool = False,
    order: MonomialOrder = DEFAULT_ORDER,
) -> ClassificationReport:
    if datum.f1.ring != cone.h.ring:
        raise ValueError("datum and cone live in different rings")
    c1 = check_condition1(cone, datum, order)
    c2 = check_condition2(cone, datum, order, oracle=oracle_check)
    d1, d2, d0 = datum.d1, datum.d2, datum.d0
    delta = d1 + d2 - d0
    label, failed = label_for(c1, c2, delta)
    # exponents are reported with e0 = 0, i.e. twist m = d0
    m = d0
    notes = []
    if not c1:
        notes.append("f1 and f2 have common zeros on X besides the vertex")
    if not c2:
        notes.append("forcing equation admits a section near P; no Steinness claim")
    return ClassificationReport(
        cone=cone,
        datum=datum,
        condition1=c1,
        condition2=c2,
        delta=delta,
        deg_hy=cone.deg_hy,
        self_intersection=self_intersection_number(d1, d2, d0, cone.deg_hy),
        normal_bundle_exponent=normal_bundle_exponent(d1, d2, d0),
        m=m,
        kernel_exponent=kernel_bundle_exponent_rank2(m - d0, d0, d1, d2),
        det_exponent=det_bundle_exponent(2, (d1, d2), m),
        label=label,
        failed_condition=failed,
        forcing_equation=datum.forcing_equation(),
        notes=tuple(notes),
    )
