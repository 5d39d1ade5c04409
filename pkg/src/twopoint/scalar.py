"""Laurent polynomials in the parameter ``a`` with exact rational coefficients.

A :class:`Scalar` is the coefficient ring used by every other module.  Values
are immutable; arithmetic returns new objects.
"""

import re
from fractions import Fraction
from math import factorial

from .errors import NegativePowerOfA

_ZERO = Fraction(0)


def _frac(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Scalar:
    """Finite sum of ``c * a**e`` with ``c`` rational and ``e`` an integer."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = _frac(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        # trusted constructor: c has no zero values
        s = object.__new__(cls)
        s._c = c
        s._hash = None
        return s

    @classmethod
    def const(cls, q):
        q = _frac(q)
        return cls._raw({0: q} if q else {})

    @classmethod
    def mono(cls, q, e):
        q = _frac(q)
        return cls._raw({e: q} if q else {})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        return cls.const(x)

    # --- inspection -----------------------------------------------------
    def coeffs(self):
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def is_monomial(self):
        return len(self._c) == 1

    def min_exp(self):
        return min(self._c) if self._c else None

    def max_exp(self):
        return max(self._c) if self._c else None

    def coeff(self, e):
        return self._c.get(e, _ZERO)

    def is_constant(self):
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    # --- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.const(other)
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, _ZERO) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        return Scalar._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            other = Scalar.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            q = _frac(other)
            if not q:
                return ZERO
            return Scalar._raw({e: v * q for e, v in self._c.items()})
        if not self._c or not other._c:
            return ZERO
        if len(other._c) == 1:
            (f, w), = other._c.items()
            return Scalar._raw({e + f: v * w for e, v in self._c.items()})
        c = {}
        for e, v in self._c.items():
            for f, w in other._c.items():
                k = e + f
                x = c.get(k, _ZERO) + v * w
                if x:
                    c[k] = x
                else:
                    c.pop(k, None)
        return Scalar._raw(c)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        if len(self._c) != 1:
            raise ZeroDivisionError("only nonzero monomials in a are invertible")
        (e, v), = self._c.items()
        return Scalar._raw({-e: 1 / v})

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return self * other.inverse()
        q = _frac(other)
        if not q:
            raise ZeroDivisionError("division by zero")
        return Scalar._raw({e: v / q for e, v in self._c.items()})

    def shift(self, k):
        """Multiply by ``a**k``."""
        return Scalar._raw({e + k: v for e, v in self._c.items()})

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def evaluate(self, value):
        """Value at ``a = value`` (a nonzero rational unless ``self`` is a polynomial)."""
        value = _frac(value)
        return sum((v * value ** e for e, v in self._c.items()), _ZERO)

    def specialize_a0(self):
        """Constant term; requires no negative powers of ``a``."""
        if self._c and min(self._c) < 0:
            raise NegativePowerOfA(str(self))
        return self._c.get(0, _ZERO)

    # --- text -----------------------------------------------------------
    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for i, (e, v) in enumerate(sorted(self._c.items())):
            neg = v < 0
            mag = -v if neg else v
            if e == 0:
                body = _qstr(mag)
            else:
                var = "a" if e == 1 else "a^%d" % e
                body = var if mag == 1 else "%s*%s" % (_qstr(mag), var)
            if i == 0:
                parts.append("-" + body if neg else body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return "Scalar(%s)" % self

    @classmethod
    def parse(cls, text):
        return parse_scalar(text)


def _qstr(q):
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


ZERO = Scalar._raw({})
ONE = Scalar._raw({0: Fraction(1)})
A = Scalar._raw({1: Fraction(1)})

_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)(?:\*a(?:\^(-?\d+))?)?|a(?:\^(-?\d+))?)$")


def parse_scalar(text):
    s = text.strip()
    if s == "0":
        return ZERO
    # split into signed terms; a '-' directly after '^' is part of an exponent
    tokens = re.split(r"(?<!\^)\s*([+-])\s*", s)
    if tokens[0] == "":
        tokens = tokens[1:]
    else:
        tokens = ["+"] + tokens
    out = {}
    for sign, body in zip(tokens[0::2], tokens[1::2]):
        m = _TERM.match(body.replace(" ", ""))
        if not m:
            raise ValueError("cannot parse scalar term %r" % body)
        if m.group(1) is not None:
            q = Fraction(m.group(1))
            e = int(m.group(2)) if m.group(2) is not None else (1 if "a" in body else 0)
        else:
            q = Fraction(1)
            e = int(m.group(3)) if m.group(3) is not None else 1
        if sign == "-":
            q = -q
        out[e] = out.get(e, _ZERO) + q
    return Scalar(out)


def gen_binomial(i, k):
    """Binomial coefficient with arbitrary integer top; zero for ``k < 0``."""
    if k < 0:
        return _ZERO
    num = 1
    for r in range(k):
        num *= i - r
    return Fraction(num, factorial(k))


def specialize_a0(x):
    return Scalar.coerce(x).specialize_a0()
