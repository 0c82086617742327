"""Division, Buchberger's algorithm and ideal/radical membership.

Everything works over exact rationals.  ``linear_membership_oracle`` decides
homogeneous membership by plain linear algebra and shares no code with the
Buchberger path, so the two can be used to cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .polycore import (
    DEFAULT_ORDER,
    Monomial,
    MonomialOrder,
    Polynomial,
    RingMismatchError,
    divides,
    homogeneity,
    lcm,
    mono_div,
    monomials_of_degree,
)

DEFAULT_MAX_DEGREE = 60
DEFAULT_MAX_SIZE = 5000


class ResourceLimitError(RuntimeError):
    """Buchberger exceeded its degree or basis-size cap."""


class NonHomogeneousError(ValueError):
    pass


@dataclass(frozen=True)
class DivisionResult:
    remainder: Polynomial
    quotients: tuple[Polynomial, ...]

    def reconstruct(self, divisors: Sequence[Polynomial]) -> Polynomial:
        total = self.remainder
        for q, g in zip(self.quotients, divisors):
            total = total + q * g
        return total


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple[Polynomial, ...]
    reduced: bool = True
    # cofactors[i][j]: coefficient of generators[j] in elements[i], when tracked
    cofactors: tuple[tuple[Polynomial, ...], ...] | None = field(default=None, compare=False, repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def reduce(self, f: Polynomial) -> Polynomial:
        if not self.elements:
            return f.with_order(self.order)
        return normal_form(f, self.elements, self.order).remainder

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def is_unit_ideal(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant() and not self.elements[0].is_zero()


def _same_ring(polys: Sequence[Polynomial]) -> tuple[str, ...] | None:
    rings = {p.ring for p in polys}
    if len(rings) > 1:
        raise RingMismatchError(f"polynomials live in different rings: {sorted(rings)}")
    return rings.pop() if rings else None


def normal_form(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = DEFAULT_ORDER) -> DivisionResult:
    """Multivariate division of ``f`` by ``divisors``.

    Returns quotients ``q_i`` and a remainder ``r`` with
    ``f = sum(q_i * g_i) + r`` and no term of ``r`` divisible by any ``LM(g_i)``.
    The first divisor (in list order) whose leading monomial divides the
    current leading term is used.
    """
    _same_ring([f, *divisors])
    gs = [g.with_order(order) for g in divisors]
    if any(g.is_zero() for g in gs):
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    key = order.key
    lts = [g.LT for g in gs]
    gdicts = [g.as_dict() for g in gs]
    quot: list[dict[Monomial, Fraction]] = [{} for _ in gs]
    rem: dict[Monomial, Fraction] = {}
    work = f.as_dict()
    while work:
        m = max(work, key=key)
        c = work[m]
        for i, (lc, lm) in enumerate(lts):
            if divides(lm, m):
                qm = mono_div(m, lm)
                qc = c / lc
                quot[i][qm] = quot[i].get(qm, 0) + qc
                for gm, gc in gdicts[i].items():
                    t = tuple(a + b for a, b in zip(gm, qm))
                    v = work.get(t, 0) - qc * gc
                    if v:
                        work[t] = v
                    else:
                        del work[t]
                break
        else:
            rem[m] = c
            del work[m]
    return DivisionResult(
        Polynomial._from_dict(rem, ring, order),
        tuple(Polynomial._from_dict({m: c for m, c in q.items() if c}, ring, order) for q in quot),
    )


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> Polynomial:
    """S-polynomial of ``f`` and ``g`` after making both monic.

    ``S = (L / LM(f)) * f/LC(f) - (L / LM(g)) * g/LC(g)`` with ``L = lcm(LM f, LM g)``.
    """
    _same_ring([f, g])
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    f = f.with_order(order).monic()
    g = g.with_order(order).monic()
    L = lcm(f.LM, g.LM)
    one = Fraction(1)
    return f.mul_term(one, mono_div(L, f.LM)) - g.mul_term(one, mono_div(L, g.LM))


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------


class _Tracked:
    """A polynomial together with its expression in the input generators."""

    __slots__ = ("poly", "cof")

    def __init__(self, poly: Polynomial, cof: list[Polynomial] | None):
        self.poly = poly
        self.cof = cof


def _combine(pairs):
    # sum of (coeff, mono, cofactor-vector) scaled contributions
    out = None
    for coeff, mono, vec in pairs:
        scaled = [v.mul_term(coeff, mono) for v in vec]
        out = scaled if out is None else [a + b for a, b in zip(out, scaled)]
    return out


def _reduce_tracked(t: _Tracked, basis: list[_Tracked], order: MonomialOrder, track: bool) -> _Tracked:
    if not basis:
        return t
    res = normal_form(t.poly, [b.poly for b in basis], order)
    cof = None
    if track:
        cof = list(t.cof)
        for q, b in zip(res.quotients, basis):
            if q:
                cof = [c - q * bc for c, bc in zip(cof, b.cof)]
    return _Tracked(res.remainder, cof)


def buchberger(
    generators: Sequence[Polynomial],
    order: MonomialOrder = DEFAULT_ORDER,
    *,
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_size: int = DEFAULT_MAX_SIZE,
    track_cofactors: bool = False,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Pairs are processed by the normal strategy (smallest lcm first).  Pairs
    with coprime leading monomials are skipped, as are pairs killed by the
    chain criterion.  Raises :class:`ResourceLimitError` when an intermediate
    polynomial exceeds ``max_degree`` or the basis grows past ``max_size``.
    """
    ring = _same_ring(generators)
    gens = [g.with_order(order) for g in generators]
    if ring is None or all(g.is_zero() for g in gens):
        cof = () if track_cofactors else None
        return GroebnerBasis(order, (), True, cof)
    zero = Polynomial.zero(ring, order)
    one = Fraction(1)
    key = order.key

    def unit_vec(i):
        return [Polynomial.constant(1, ring, order) if j == i else zero for j in range(len(gens))]

    G: list[_Tracked] = []
    pairs: set[tuple[int, int]] = set()

    def check(p: Polynomial):
        if p.total_degree() > max_degree:
            raise ResourceLimitError(f"intermediate degree {p.total_degree()} exceeds cap {max_degree}")

    def add(t: _Tracked):
        # monic normalisation keeps S-polynomials deterministic
        lc = t.poly.LC
        if lc != 1:
            inv = one / lc
            t = _Tracked(t.poly * inv, [c * inv for c in t.cof] if track_cofactors else None)
        check(t.poly)
        G.append(t)
        if len(G) > max_size:
            raise ResourceLimitError(f"basis size exceeds cap {max_size}")
        k = len(G) - 1
        pairs.update((i, k) for i in range(k))

    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        t = _reduce_tracked(_Tracked(g, unit_vec(i) if track_cofactors else None), G, order, track_cofactors)
        if not t.poly.is_zero():
            add(t)

    def pair_lcm(p):
        return lcm(G[p[0]].poly.LM, G[p[1]].poly.LM)

    while pairs:
        p = min(pairs, key=lambda q: (key(pair_lcm(q)), q))
        pairs.discard(p)
        i, j = p
        fi, fj = G[i].poly, G[j].poly
        L = lcm(fi.LM, fj.LM)
        # coprime leading monomials: S-poly reduces to zero
        if all(a == 0 or b == 0 for a, b in zip(fi.LM, fj.LM)):
            continue
        # chain criterion: some third element's LM divides L and both of its
        # pairs with i and j have already been treated
        if any(
            k not in (i, j)
            and divides(G[k].poly.LM, L)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(G))
        ):
            continue
        mi, mj = mono_div(L, fi.LM), mono_div(L, fj.LM)
        s = fi.mul_term(one, mi) - fj.mul_term(one, mj)
        check(s)
        cof = _combine([(one, mi, G[i].cof), (-one, mj, G[j].cof)]) if track_cofactors else None
        t = _reduce_tracked(_Tracked(s, cof), G, order, track_cofactors)
        if not t.poly.is_zero():
            add(t)

    return _interreduce(G, order, track_cofactors)


def _interreduce(G: list[_Tracked], order: MonomialOrder, track: bool) -> GroebnerBasis:
    key = order.key
    # minimalise: drop elements whose LM is divisible by another LM
    ordered = sorted(G, key=lambda t: key(t.poly.LM))
    minimal: list[_Tracked] = []
    for t in ordered:
        if not any(divides(m.poly.LM, t.poly.LM) for m in minimal):
            minimal.append(t)
    reduced: list[_Tracked] = []
    for idx, t in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = _reduce_tracked(t, others, order, track)
        lc = r.poly.LC
        inv = Fraction(1) / lc
        reduced.append(_Tracked(r.poly * inv, [c * inv for c in r.cof] if track else None))
    reduced.sort(key=lambda t: key(t.poly.LM), reverse=True)
    return GroebnerBasis(
        order,
        tuple(t.poly for t in reduced),
        True,
        tuple(tuple(t.cof) for t in reduced) if track else None,
    )


def is_groebner_basis(elements: Sequence[Polynomial], order: MonomialOrder = DEFAULT_ORDER) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    els = [e for e in elements if not e.is_zero()]
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            s = s_polynomial(els[i], els[j], order)
            if not normal_form(s, els, order).remainder.is_zero():
                return False
    return True


def is_reduced(basis: GroebnerBasis) -> bool:
    els = basis.elements
    for i, g in enumerate(els):
        if g.LC != 1:
            return False
        for j, other in enumerate(els):
            if i != j and any(divides(other.LM, m) for _, m in g.terms):
                return False
    return True


# ---------------------------------------------------------------------------
# membership
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MembershipCertificate:
    """``f == sum(c * g for c, g in zip(cofactors, generators))``."""

    cofactors: tuple[Polynomial, ...]

    def combine(self, generators: Sequence[Polynomial]) -> Polynomial:
        total = Polynomial.zero(generators[0].ring, generators[0].order)
        for c, g in zip(self.cofactors, generators):
            total = total + c * g
        return total


def ideal_membership(
    f: Polynomial,
    generators: Sequence[Polynomial],
    order: MonomialOrder = DEFAULT_ORDER,
    *,
    certificate: bool = False,
    **limits,
):
    """Decide ``f in (generators)``.

    With ``certificate=True`` returns ``(member, cert)`` where ``cert`` is a
    :class:`MembershipCertificate` in terms of the original generators when
    ``member`` is true, else ``None``.
    """
    _same_ring([f, *generators])
    if not generators:
        member = f.is_zero()
        if certificate:
            return member, (MembershipCertificate(()) if member else None)
        return member
    gb = buchberger(generators, order, track_cofactors=certificate, **limits)
    if not gb.elements:
        res = DivisionResult(f.with_order(order), ())
    else:
        res = normal_form(f, gb.elements, order)
    member = res.remainder.is_zero()
    if not certificate:
        return member
    if not member:
        return False, None
    ring = f.ring
    cof = [Polynomial.zero(ring, order) for _ in generators]
    for q, row in zip(res.quotients, gb.cofactors):
        if q:
            cof = [c + q * r for c, r in zip(cof, row)]
    return True, MembershipCertificate(tuple(cof))


def radical_membership(
    g: Polynomial,
    generators: Sequence[Polynomial],
    order: MonomialOrder = DEFAULT_ORDER,
    **limits,
) -> bool:
    """True iff ``g`` vanishes on the common zero set of ``generators``.

    Adjoins a fresh variable ``t`` and tests ``1 in (generators, 1 - t*g)``.
    """
    _same_ring([g, *generators])
    name = "_t"
    while name in g.ring:
        name = "_" + name
    ext = [p.extend_ring([name]) for p in generators]
    tg = g.extend_ring([name])
    t = Polynomial.variable(name, tg.ring, order)
    gb = buchberger(ext + [1 - t * tg], order, **limits)
    return gb.is_unit_ideal()


def vanishes_only_at_origin(generators: Sequence[Polynomial], order: MonomialOrder = DEFAULT_ORDER, **limits) -> bool:
    """True iff the only common zero of ``generators`` is the origin."""
    ring = _same_ring(generators)
    if ring is None:
        raise ValueError("need at least one generator")
    return all(
        radical_membership(Polynomial.variable(v, ring, order), generators, order, **limits) for v in ring
    )


# ---------------------------------------------------------------------------
# linear-algebra oracle
# ---------------------------------------------------------------------------


def _rank(rows: list[list[Fraction]]) -> int:
    """Rank of a rational matrix by exact Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, len(m)):
            if m[r][col] != 0:
                factor = m[r][col] / pv
                row_r, row_p = m[r], m[rank]
                for c in range(col, ncols):
                    row_r[c] -= factor * row_p[c]
        rank += 1
        if rank == len(m):
            break
    return rank


def graded_membership(f: Polynomial, generators: Sequence[Polynomial]) -> bool:
    """Membership of homogeneous ``f`` in an ideal with homogeneous generators.

    ``f`` lies in the ideal iff it is in the span of ``mono * g`` over all
    generators ``g`` and monomials of degree ``deg f - deg g``.  Decided by
    comparing ranks of the coefficient matrix with and without ``f``.
    """
    _same_ring([f, *generators])
    hf = homogeneity(f)
    if hf.is_zero:
        return True
    if hf.degree is None:
        raise NonHomogeneousError("oracle needs a homogeneous target")
    d = hf.degree
    n = f.nvars
    columns = []
    for g in generators:
        hg = homogeneity(g)
        if hg.is_zero:
            continue
        if hg.degree is None:
            raise NonHomogeneousError("oracle needs homogeneous generators")
        for mono in monomials_of_degree(n, d - hg.degree):
            columns.append({tuple(a + b for a, b in zip(gm, mono)): c for c, gm in g.terms})
    basis = monomials_of_degree(n, d)
    index = {m: i for i, m in enumerate(basis)}
    target = [Fraction(0)] * len(basis)
    for c, m in f.terms:
        target[index[m]] = c
    # rows are the spanning vectors; row rank == column rank
    rows = []
    for col in columns:
        row = [Fraction(0)] * len(basis)
        for m, c in col.items():
            row[index[m]] = c
        rows.append(row)
    return _rank(rows + [target]) == _rank(rows)


def linear_membership_oracle(f0: Polynomial, f1: Polynomial, f2: Polynomial, h: Polynomial) -> bool:
    """Does ``f0 = a*f1 + b*f2 + c*h`` have a homogeneous solution?"""
    return graded_membership(f0, [f1, f2, h])
