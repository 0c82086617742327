"""Affine cones X = V(h) in C^3 over smooth plane curves."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .groebner import vanishes_only_at_origin
from .polycore import DEFAULT_ORDER, MonomialOrder, Polynomial, homogeneity, partial_derivative


class ConeError(ValueError):
    """Base class for rejected cone equations."""


class NotHomogeneousError(ConeError):
    pass


class NoZPowerError(ConeError):
    """The coefficient of z^r in h vanishes, so x, y are not homogeneous parameters."""


class SingularConeError(ConeError):
    """h has singularities away from the vertex; no normality certificate."""


@dataclass(frozen=True)
class ConeSurface:
    h: Polynomial
    r: int
    z_lead_coefficient: Fraction
    smooth_away_from_vertex: bool
    deg_hy: int


def jacobian_check(h: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> bool:
    """True iff h and its three partials vanish together only at the origin.

    Then X has at most an isolated singularity at the vertex, so X is normal
    (hypersurface, hence S2; R1 by isolation) and the plane curve Y is smooth.
    """
    if h.nvars != 3:
        raise ValueError("cone equations live in three variables")
    gens = [h] + [partial_derivative(h, i) for i in range(3)]
    return vanishes_only_at_origin([g for g in gens if not g.is_zero()], order)


def build_cone(h: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> ConeSurface:
    if h.nvars != 3:
        raise ValueError("cone equations live in three variables")
    hom = homogeneity(h)
    if hom.is_zero:
        raise NotHomogeneousError("h is the zero polynomial")
    if hom.degree is None:
        raise NotHomogeneousError(f"h = {h} is not homogeneous")
    r = hom.degree
    if r < 1:
        raise NotHomogeneousError("h must have positive degree")
    c = h.coefficient((0, 0, r))
    if c == 0:
        raise NoZPowerError(f"h = {h} has no z^{r} term")
    if not jacobian_check(h, order):
        raise SingularConeError(f"V({h}) is singular away from the vertex")
    return ConeSurface(h=h.with_order(order), r=r, z_lead_coefficient=c, smooth_away_from_vertex=True, deg_hy=r)


def hyperplane_degree(cone: ConeSurface) -> int:
    """Degree of the hyperplane bundle on Y: a generic line meets a degree-r plane curve in r points."""
    return cone.r
