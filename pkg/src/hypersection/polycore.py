"""Exact sparse multivariate polynomials over the rationals.

Monomials are plain tuples of non-negative exponents.  A :class:`Polynomial`
keeps its terms sorted strictly descending under its monomial order, so the
leading term is always ``terms[0]`` and structural equality is mathematical
equality.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

Monomial = tuple[int, ...]

DEFAULT_VARIABLES = ("x", "y", "z")


class RingMismatchError(ValueError):
    """Raised when two operands do not live in the same polynomial ring."""


# ---------------------------------------------------------------------------
# monomials
# ---------------------------------------------------------------------------


def _check_arity(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise ValueError(f"monomial arity mismatch: {len(a)} vs {len(b)}")


def degree(a: Monomial) -> int:
    return sum(a)


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff the monomial ``a`` divides ``b``."""
    _check_arity(a, b)
    return all(i <= j for i, j in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_arity(a, b)
    return tuple(max(i, j) for i, j in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(i + j for i, j in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Return ``a / b``; the caller guarantees ``b`` divides ``a``."""
    return tuple(i - j for i, j in zip(a, b))


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All exponent vectors of length ``n`` with total degree ``d``."""
    if d < 0:
        return []
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return out


class MonomialOrder(enum.Enum):
    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"

    @classmethod
    def parse(cls, name: str) -> "MonomialOrder":
        aliases = {
            "lex": cls.LEX,
            "grlex": cls.GRLEX,
            "graded-lex": cls.GRLEX,
            "deglex": cls.GRLEX,
            "grevlex": cls.GREVLEX,
            "graded-reverse-lex": cls.GREVLEX,
            "degrevlex": cls.GREVLEX,
        }
        try:
            return aliases[name.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown monomial order {name!r}") from None

    def key(self, a: Monomial) -> tuple:
        """Sort key: ``a < b`` in this order iff ``key(a) < key(b)``."""
        if self is MonomialOrder.LEX:
            return a
        if self is MonomialOrder.GRLEX:
            return (sum(a), a)
        # grevlex: higher degree wins, ties broken by the *smaller* exponent
        # in the last variable where they differ
        return (sum(a), tuple(-e for e in reversed(a)))

    def compare(self, a: Monomial, b: Monomial) -> int:
        """Return -1, 0 or 1 as ``a`` is less than, equal to, or greater than ``b``."""
        _check_arity(a, b)
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


DEFAULT_ORDER = MonomialOrder.GREVLEX


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class Polynomial:
    """Immutable polynomial with rational coefficients in a fixed ring.

    ``ring`` is the tuple of variable names; ``terms`` is a tuple of
    ``(Fraction, Monomial)`` pairs, strictly descending in ``order``.
    """

    __slots__ = ("ring", "order", "terms", "_dict", "_hash")

    def __init__(
        self,
        terms: Mapping[Monomial, object] | Iterable[tuple[object, Monomial]] = (),
        ring: Sequence[str] = DEFAULT_VARIABLES,
        order: MonomialOrder = DEFAULT_ORDER,
    ):
        ring = tuple(ring)
        n = len(ring)
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else ((m, c) for c, m in terms)
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != n or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for ring {ring}")
            acc[mono] = acc.get(mono, 0) + _as_fraction(coeff)
        self._init(ring, order, {m: c for m, c in acc.items() if c != 0})

    def _init(self, ring, order, d: dict[Monomial, Fraction]) -> None:
        self.ring = ring
        self.order = order
        self._dict = d
        key = order.key
        self.terms = tuple((d[m], m) for m in sorted(d, key=key, reverse=True))
        self._hash = None

    @classmethod
    def _from_dict(cls, d, ring, order) -> "Polynomial":
        # trusted constructor: d already has no zero coefficients
        p = cls.__new__(cls)
        p._init(ring, order, d)
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring=DEFAULT_VARIABLES, order=DEFAULT_ORDER) -> "Polynomial":
        return cls._from_dict({}, tuple(ring), order)

    @classmethod
    def constant(cls, c, ring=DEFAULT_VARIABLES, order=DEFAULT_ORDER) -> "Polynomial":
        ring = tuple(ring)
        c = _as_fraction(c)
        return cls._from_dict({(0,) * len(ring): c} if c else {}, ring, order)

    @classmethod
    def monomial(cls, exponents, coeff=1, ring=DEFAULT_VARIABLES, order=DEFAULT_ORDER) -> "Polynomial":
        return cls({tuple(exponents): coeff}, ring, order)

    @classmethod
    def variable(cls, name: str, ring=DEFAULT_VARIABLES, order=DEFAULT_ORDER) -> "Polynomial":
        ring = tuple(ring)
        i = ring.index(name)
        return cls.monomial(tuple(int(j == i) for j in range(len(ring))), 1, ring, order)

    # -- accessors ----------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.ring)

    def is_zero(self) -> bool:
        return not self._dict

    def is_constant(self) -> bool:
        return not self._dict or (len(self._dict) == 1 and sum(self.terms[0][1]) == 0)

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self._dict)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._dict.get(tuple(mono), Fraction(0))

    @property
    def LT(self) -> tuple[Fraction, Monomial]:
        if not self._dict:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    @property
    def LM(self) -> Monomial:
        return self.LT[1]

    @property
    def LC(self) -> Fraction:
        return self.LT[0]

    def total_degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self._dict), default=-1)

    def monic(self) -> "Polynomial":
        if not self._dict:
            return self
        lc = self.LC
        if lc == 1:
            return self
        return Polynomial._from_dict({m: c / lc for m, c in self._dict.items()}, self.ring, self.order)

    def with_order(self, order: MonomialOrder) -> "Polynomial":
        if order is self.order:
            return self
        return Polynomial._from_dict(self._dict, self.ring, order)

    def extend_ring(self, names: Sequence[str]) -> "Polynomial":
        """Embed into a ring with extra variables appended after the current ones."""
        names = tuple(names)
        if set(names) & set(self.ring):
            raise ValueError(f"variables {names} clash with ring {self.ring}")
        pad = (0,) * len(names)
        return Polynomial._from_dict({m + pad: c for m, c in self._dict.items()}, self.ring + names, self.order)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"ring {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.ring, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._dict)
        for m, c in other._dict.items():
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return Polynomial._from_dict(d, self.ring, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_dict({m: -c for m, c in self._dict.items()}, self.ring, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Polynomial.zero(self.ring, self.order)
            return Polynomial._from_dict({m: c * other for m, c in self._dict.items()}, self.ring, self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d: dict[Monomial, Fraction] = {}
        for m1, c1 in self._dict.items():
            for m2, c2 in other._dict.items():
                m = tuple(i + j for i, j in zip(m1, m2))
                d[m] = d.get(m, 0) + c1 * c2
        return Polynomial._from_dict({m: c for m, c in d.items() if c}, self.ring, self.order)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.ring, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, coeff: Fraction, mono: Monomial) -> "Polynomial":
        """Multiply by the single term ``coeff * mono``."""
        if not coeff:
            return Polynomial.zero(self.ring, self.order)
        return Polynomial._from_dict(
            {tuple(i + j for i, j in zip(m, mono)): c * coeff for m, c in self._dict.items()},
            self.ring,
            self.order,
        )

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.ring, self.order)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._dict == other._dict

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._dict.items())))
        return self._hash

    def __bool__(self):
        return bool(self._dict)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, ring={self.ring})"


# ---------------------------------------------------------------------------
# free functions named after the operations they realise
# ---------------------------------------------------------------------------


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.ring != q.ring:
        raise RingMismatchError(f"ring {p.ring} vs {q.ring}")
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.ring != q.ring:
        raise RingMismatchError(f"ring {p.ring} vs {q.ring}")
    return p * q


def partial_derivative(p: Polynomial, var: int) -> Polynomial:
    if not 0 <= var < p.nvars:
        raise IndexError(f"variable index {var} out of range for ring {p.ring}")
    d = {}
    for m, c in p._dict.items():
        e = m[var]
        if e:
            d[m[:var] + (e - 1,) + m[var + 1:]] = c * e
    return Polynomial._from_dict(d, p.ring, p.order)


class Homogeneity(NamedTuple):
    degree: int | None
    is_zero: bool


def homogeneity(p: Polynomial) -> Homogeneity:
    """Degree of ``p`` if homogeneous.

    The zero polynomial reports ``degree=None`` with ``is_zero=True`` so
    callers must handle it explicitly.
    """
    if p.is_zero():
        return Homogeneity(None, True)
    degrees = {sum(m) for m in p._dict}
    return Homogeneity(degrees.pop() if len(degrees) == 1 else None, False)


def homogeneous_degree(p: Polynomial) -> int | None:
    return homogeneity(p).degree


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Render ``p`` in the text grammar accepted by :func:`parse_polynomial`."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (c, m) in enumerate(p.terms):
        factors = []
        for name, e in zip(p.ring, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)
