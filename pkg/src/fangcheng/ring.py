"""Exact rings: integers, rationals and sparse multivariate integer polynomials.

Integers are Python ``int`` and rationals are ``fractions.Fraction``; both are
already arbitrary precision and normalized.  ``MultiPoly`` is written here.
All three are driven through a ``Ring`` object so elimination code is written
once and can tally its operations in an ``OpTally`` passed in by the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction
from functools import lru_cache

from .errors import DivideByZero, InexactDivision

Integer = int
Rational = Fraction


class _ZeroDegree:
    """Degree of the zero polynomial.  Deliberately not an int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO_DEGREE"

    def __reduce__(self):
        return (_ZeroDegree, ())


ZERO_DEGREE = _ZeroDegree()


@dataclass
class OpTally:
    """Counts of ring operations for one run.  Single owner; not thread safe."""

    mul: int = 0
    div: int = 0
    addsub: int = 0

    def copy(self) -> OpTally:
        return OpTally(self.mul, self.div, self.addsub)

    def __sub__(self, other: OpTally) -> OpTally:
        return OpTally(self.mul - other.mul, self.div - other.div, self.addsub - other.addsub)

    def __add__(self, other: OpTally) -> OpTally:
        return OpTally(self.mul + other.mul, self.div + other.div, self.addsub + other.addsub)

    @property
    def multiplicative(self) -> int:
        return self.mul + self.div

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


# --- multivariate polynomials -------------------------------------------------

def _negate_var(var):
    return tuple(-c for c in var)


@lru_cache(maxsize=None)
def _mono_key(mono):
    # graded lexicographic; smaller variable tuples rank higher
    deg = sum(e for _, e in mono)
    return (deg, tuple((_negate_var(v), e) for v, e in mono))


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


def _mono_div(a, b):
    """a / b as a monomial, or None when b does not divide a."""
    out = dict(a)
    for v, e in b:
        have = out.get(v, 0)
        if have < e:
            return None
        if have == e:
            del out[v]
        else:
            out[v] = have - e
    return tuple(sorted(out.items()))


class MultiPoly:
    """Sparse polynomial with integer coefficients.

    Variables are tuples of ints, e.g. ``(1, 2)`` for the cell in row 1,
    column 2.  A monomial is a sorted tuple of ``(variable, exponent)``
    pairs.  Terms are kept in descending graded-lex order with no zero
    coefficients, so structural equality is mathematical equality.

    >>> x, y = MultiPoly.variable(1), MultiPoly.variable(2)
    >>> (x + y) * (x - y) == x * x - y * y
    True
    >>> ((x * y - 3) * x).exact_quotient(x)
    v[1]*v[2] - 3
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for mono, c in items:
                if c:
                    clean[mono] = clean.get(mono, 0) + c
        ordered = sorted(((m, c) for m, c in clean.items() if c),
                         key=lambda t: _mono_key(t[0]), reverse=True)
        self._terms = tuple(ordered)
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> MultiPoly:
        return cls({(): c}) if c else cls()

    @classmethod
    def variable(cls, *name: int) -> MultiPoly:
        return cls({((name, 1),): 1})

    @classmethod
    def coerce(cls, x) -> MultiPoly:
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to MultiPoly")

    @property
    def terms(self):
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self):
        if not self._terms:
            return ZERO_DEGREE
        return max(sum(e for _, e in m) for m, _ in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e for _, e in m) for m, _ in self._terms}) <= 1

    def leading_term(self):
        return self._terms[0]

    def coefficients(self):
        return [c for _, c in self._terms]

    def evaluate(self, values: dict) -> int:
        total = 0
        for mono, c in self._terms:
            term = c
            for v, e in mono:
                term *= values[v] ** e
            total += term
        return total

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __neg__(self):
        return MultiPoly([(m, -c) for m, c in self._terms])

    def __add__(self, other):
        other = MultiPoly.coerce(other)
        return MultiPoly(list(self._terms) + list(other._terms))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-MultiPoly.coerce(other))

    def __rsub__(self, other):
        return MultiPoly.coerce(other) - self

    def __mul__(self, other):
        other = MultiPoly.coerce(other)
        acc = {}
        for ma, ca in self._terms:
            for mb, cb in other._terms:
                m = _mono_mul(ma, mb)
                acc[m] = acc.get(m, 0) + ca * cb
        return MultiPoly(acc)

    __rmul__ = __mul__

    def exact_quotient(self, divisor) -> MultiPoly:
        """Exact division by leading-term reduction.

        Raises ``InexactDivision`` as soon as a leading term fails to divide.
        """
        divisor = MultiPoly.coerce(divisor)
        if divisor.is_zero():
            raise DivideByZero("division by the zero polynomial")
        lead_m, lead_c = divisor._terms[0]
        rem = self
        quotient = {}
        while rem._terms:
            m, c = rem._terms[0]
            qm = _mono_div(m, lead_m)
            if qm is None or c % lead_c:
                raise InexactDivision(self, divisor)
            qc = c // lead_c
            quotient[qm] = qc
            rem = rem - divisor * MultiPoly({qm: qc})
        return MultiPoly(quotient)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (mono, c) in enumerate(self._terms):
            factors = []
            for v, e in mono:
                name = "v[" + ",".join(map(str, v)) + "]"
                factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(c)
            if factors:
                body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    __str__ = __repr__


def degree(p: MultiPoly):
    return p.degree()


# --- ring contract -------------------------------------------------------------

class Ring:
    """Arithmetic on one kind of exact element, with optional op tallying."""

    name = "ring"
    is_field = False

    def coerce(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def is_zero(self, a) -> bool:
        return a == 0

    def add(self, a, b, tally: OpTally | None = None):
        if tally is not None:
            tally.addsub += 1
        return a + b

    def sub(self, a, b, tally: OpTally | None = None):
        if tally is not None:
            tally.addsub += 1
        return a - b

    def mul(self, a, b, tally: OpTally | None = None):
        if tally is not None:
            tally.mul += 1
        return a * b

    def exact_div(self, a, b, tally: OpTally | None = None):
        if tally is not None:
            tally.div += 1
        if self.is_zero(b):
            raise DivideByZero(f"division of {a} by zero")
        return self._exact_div(a, b)

    def _exact_div(self, a, b):
        raise NotImplementedError

    def bits(self, a) -> int:
        """Size measure used for growth reports."""
        raise NotImplementedError

    def to_str(self, a) -> str:
        return str(a)

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    name = "ZZ"

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
        return int(x)

    def _exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise InexactDivision(a, b)
        return q

    def bits(self, a):
        return abs(a).bit_length()


class RationalRing(Ring):
    name = "QQ"
    is_field = True

    def coerce(self, x):
        return Fraction(x)

    def _exact_div(self, a, b):
        return a / b

    def bits(self, a):
        return max(abs(a.numerator).bit_length(), a.denominator.bit_length())


class PolynomialRing(Ring):
    name = "ZZ[v]"

    def coerce(self, x):
        return MultiPoly.coerce(x)

    def is_zero(self, a):
        return a.is_zero()

    def _exact_div(self, a, b):
        return a.exact_quotient(b)

    def bits(self, a):
        return max((abs(c).bit_length() for c in a.coefficients()), default=0)


ZZ = IntegerRing()
QQ = RationalRing()
POLY = PolynomialRing()


def exact_div(a, b, ring: Ring | None = None, tally: OpTally | None = None):
    """Exact quotient ``a / b``, picking the ring from the operand types if not given."""
    if ring is None:
        if isinstance(a, MultiPoly) or isinstance(b, MultiPoly):
            ring = POLY
        elif isinstance(a, Fraction) or isinstance(b, Fraction):
            ring = QQ
        else:
            ring = ZZ
    return ring.exact_div(ring.coerce(a), ring.coerce(b), tally)
