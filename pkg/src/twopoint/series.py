"""Functions of two variables ``t, s`` with ``t - s = a``, and one-variable
truncated Laurent series.

A :class:`TwoVarFun` is a finite combination of monomials ``t^i s^j`` with
:class:`Scalar` coefficients.  Because ``t - s = a`` the monomials are not
independent; the canonical form is the expansion in the basis

    u_n = t^n s^n,    v_n = t^n s^(n+1)

(or equivalently ``x_n = u_n``, ``y_n = t^(n+1) s^n = a u_n + v_n``).  An
optional truncation marker ``m`` means the function is only known modulo
``u_m * C[[t, s]]``, i.e. modulo the span of ``u_n, v_n`` with ``n >= m``.
"""

import re
from functools import lru_cache

from .errors import TruncationTooCoarse
from .scalar import ONE, ZERO, Scalar, gen_binomial, parse_scalar

FAMILIES = ("U", "V", "X", "Y")


def _addto(d, key, val):
    if not val:
        return
    cur = d.get(key)
    new = val if cur is None else cur + val
    if new:
        d[key] = new
    else:
        d.pop(key, None)


def _minmin(i, j):
    return i if i < j else j


class TwoVarFun:
    __slots__ = ("terms", "trunc")

    def __init__(self, terms=None, trunc=None):
        t = {}
        if terms:
            for (i, j), c in terms.items():
                c = Scalar.coerce(c)
                if c and (trunc is None or _minmin(i, j) < trunc):
                    _addto(t, (int(i), int(j)), c)
        self.terms = t
        self.trunc = trunc

    @classmethod
    def monomial(cls, i, j, coeff=ONE):
        return cls({(i, j): coeff})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    def is_zero(self):
        return not self.terms

    def val(self):
        """Least ``min(i, j)`` over stored terms (None for zero)."""
        if not self.terms:
            return None
        return min(_minmin(i, j) for i, j in self.terms)

    def with_trunc(self, m):
        if m is None:
            return self
        if self.trunc is not None:
            m = min(m, self.trunc)
        return TwoVarFun(self.terms, m)

    # --- ring operations --------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TwoVarFun):
            other = TwoVarFun.const(other)
        tr = _min_opt(self.trunc, other.trunc)
        t = dict(self.terms)
        for k, c in other.terms.items():
            _addto(t, k, c)
        return TwoVarFun(t, tr)

    __radd__ = __add__

    def __neg__(self):
        return TwoVarFun({k: -c for k, c in self.terms.items()}, self.trunc)

    def __sub__(self, other):
        if not isinstance(other, TwoVarFun):
            other = TwoVarFun.const(other)
        return self + (-other)

    def scale(self, c):
        c = Scalar.coerce(c)
        return TwoVarFun({k: v * c for k, v in self.terms.items()}, self.trunc)

    def __mul__(self, other):
        if not isinstance(other, TwoVarFun):
            return self.scale(other)
        return mul2(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        out = TwoVarFun.const(ONE)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TwoVarFun):
            return NotImplemented
        m = _min_opt(self.trunc, other.trunc)
        return _cut(to_basis(self), m) == _cut(to_basis(other), m)

    __hash__ = None

    def __str__(self):
        return format_fun(self)

    def __repr__(self):
        return "TwoVarFun(%s)" % self

    @classmethod
    def parse(cls, text):
        return parse_fun(text)


def _min_opt(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return min(x, y)


def _cut(basis, m):
    if m is None:
        return basis
    return {k: c for k, c in basis.items() if k[1] < m}


def mul2(f, g):
    tr = None
    if f.trunc is not None:
        vg = g.val()
        if vg is not None:
            tr = f.trunc + vg
    if g.trunc is not None:
        vf = f.val()
        if vf is not None:
            tr = _min_opt(tr, g.trunc + vf)
    out = {}
    for (i, j), c in f.terms.items():
        for (k, l), d in g.terms.items():
            _addto(out, (i + k, j + l), c * d)
    return TwoVarFun(out, tr)


def deriv2(f):
    out = {}
    for (i, j), c in f.terms.items():
        if i:
            _addto(out, (i - 1, j), c * i)
        if j:
            _addto(out, (i, j - 1), c * j)
    tr = None if f.trunc is None else f.trunc - 1
    return TwoVarFun(out, tr)


def res2_monomial(i, j):
    c = gen_binomial(i, -j - 1) + (-1) ** (i + j + 1) * gen_binomial(j, -i - 1)
    return Scalar.mono(c, i + j + 1)


def res2(f):
    if f.trunc is not None and f.trunc < 0:
        raise TruncationTooCoarse("residue needs truncation level >= 0, got %d" % f.trunc)
    out = ZERO
    for (i, j), c in f.terms.items():
        if i + j <= -2:
            continue
        out = out + c * res2_monomial(i, j)
    return out


# --- bases -----------------------------------------------------------------

def u(n, c=ONE):
    return TwoVarFun({(n, n): c})


def v(n, c=ONE):
    return TwoVarFun({(n, n + 1): c})


def x(n, c=ONE):
    return u(n, c)


def y(n, c=ONE):
    return TwoVarFun({(n + 1, n): c})


def w(m2, c=ONE):
    """Interleaved basis indexed by half-integers (argument doubled)."""
    if m2 % 2 == 0:
        return u(m2 // 2, c)
    return v((m2 - 1) // 2, c)


def z(m2, c=ONE):
    if m2 % 2 == 0:
        return x(m2 // 2, c)
    return y((m2 - 1) // 2, c)


def _binom_poly(shift, power):
    # (X + shift)^power as {degree: Scalar}, power >= 0, shift a Scalar
    return {k: shift ** (power - k) * gen_binomial(power, k) for k in range(power + 1)
            if gen_binomial(power, k)}


@lru_cache(maxsize=None)
def _power_in_basis(d, var):
    """Express t^d (var 't') or s^d (var 's'), d >= 0, in u_k, v_k with k >= 0.

    Returns a tuple of ((family, k), Scalar).  With s = t - a the elements
    u_k, v_k are monic polynomials in t of degrees 2k, 2k+1; with t = s + a
    the same holds in s.  Peel off leading terms.
    """
    shift = -Scalar.mono(1, 1) if var == "t" else Scalar.mono(1, 1)
    rem = {d: ONE}
    out = []
    while rem:
        deg = max(rem)
        c = rem[deg]
        k = deg // 2
        if var == "t":
            # u_k = t^k (t-a)^k, v_k = t^k (t-a)^(k+1)
            low, other = k, k + deg % 2
        else:
            # u_k = s^k (s+a)^k, v_k = s^(k+1) (s+a)^k
            low, other = k + deg % 2, k
        poly = {e + low: cc for e, cc in _binom_poly(shift, other).items()}
        fam = "V" if deg % 2 else "U"
        out.append(((fam, k), c))
        for e, cc in poly.items():
            _addto(rem, e, -(c * cc))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_to_uv(i, j):
    """t^i s^j in the u/v basis, as a tuple of ((family, n), Scalar)."""
    if i >= j:
        base, part = j, _power_in_basis(i - j, "t")
    else:
        base, part = i, _power_in_basis(j - i, "s")
    return tuple(((fam, k + base), c) for (fam, k), c in part)


def to_basis(f, family="UV"):
    """Coefficients of ``f`` in the u/v basis (or x/y basis).

    Keys are (family letter, n).  With a truncation marker, basis elements of
    index >= trunc are dropped.
    """
    out = {}
    for (i, j), c in f.terms.items():
        for key, d in monomial_to_uv(i, j):
            _addto(out, key, c * d)
    if f.trunc is not None:
        out = {k: c for k, c in out.items() if k[1] < f.trunc}
    if family == "UV":
        return out
    if family != "XY":
        raise ValueError("family must be UV or XY")
    # u_n = x_n, v_n = y_n - a x_n
    res = {}
    for (fam, n), c in out.items():
        if fam == "U":
            _addto(res, ("X", n), c)
        else:
            _addto(res, ("Y", n), c)
            _addto(res, ("X", n), -(c.shift(1)))
    return res


def from_basis(coeffs, trunc=None):
    out = {}
    for (fam, n), c in coeffs.items():
        c = Scalar.coerce(c)
        if fam in ("U", "X"):
            _addto(out, (n, n), c)
        elif fam == "V":
            _addto(out, (n, n + 1), c)
        elif fam == "Y":
            _addto(out, (n + 1, n), c)
        else:
            raise ValueError("unknown basis family %r" % fam)
    return TwoVarFun(out, trunc)


def basis_to_w(coeffs):
    """u/v coefficients keyed by doubled half-integer index of w."""
    out = {}
    for (fam, n), c in coeffs.items():
        _addto(out, 2 * n + (1 if fam == "V" else 0), c)
    return out


# --- one-variable series ---------------------------------------------------

class OneVarSeries:
    """Laurent series in ``t`` or ``s`` known modulo ``variable^order``.

    ``order=None`` marks an exact Laurent polynomial.
    """

    __slots__ = ("variable", "terms", "order")

    def __init__(self, variable, terms=None, order=None):
        if variable not in ("t", "s"):
            raise ValueError("variable must be 't' or 's'")
        d = {}
        if terms:
            for e, c in terms.items():
                c = Scalar.coerce(c)
                if c and (order is None or e < order):
                    _addto(d, int(e), c)
        self.variable = variable
        self.terms = d
        self.order = order

    def coeff(self, k):
        if self.order is not None and k >= self.order:
            raise TruncationTooCoarse("coefficient %d hidden by order %d" % (k, self.order))
        return self.terms.get(k, ZERO)

    def val(self):
        return min(self.terms) if self.terms else None

    def __add__(self, other):
        if not isinstance(other, OneVarSeries):
            other = OneVarSeries(self.variable, {0: Scalar.coerce(other)})
        self._check(other)
        d = dict(self.terms)
        for k, c in other.terms.items():
            _addto(d, k, c)
        return OneVarSeries(self.variable, d, _min_opt(self.order, other.order))

    def __neg__(self):
        return OneVarSeries(self.variable, {k: -c for k, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Scalar.coerce(c)
        return OneVarSeries(self.variable, {k: v * c for k, v in self.terms.items()}, self.order)

    def __mul__(self, other):
        if not isinstance(other, OneVarSeries):
            return self.scale(other)
        self._check(other)
        order = None
        if self.order is not None and other.terms:
            order = self.order + other.val()
        if other.order is not None and self.terms:
            order = _min_opt(order, other.order + self.val())
        d = {}
        for i, c in self.terms.items():
            for j, e in other.terms.items():
                if order is None or i + j < order:
                    _addto(d, i + j, c * e)
        return OneVarSeries(self.variable, d, order)

    __rmul__ = scale

    def deriv(self):
        d = {k - 1: c * k for k, c in self.terms.items() if k}
        return OneVarSeries(self.variable, d, None if self.order is None else self.order - 1)

    def res(self):
        if self.order is not None and self.order < 0:
            raise TruncationTooCoarse("residue hidden by order %d" % self.order)
        return self.terms.get(-1, ZERO)

    def truncate(self, order):
        return OneVarSeries(self.variable, self.terms, _min_opt(self.order, order))

    def _check(self, other):
        if other.variable != self.variable:
            raise ValueError("series in different variables")

    def __eq__(self, other):
        if not isinstance(other, OneVarSeries):
            return NotImplemented
        if self.variable != other.variable:
            return False
        m = _min_opt(self.order, other.order)
        a = {k: c for k, c in self.terms.items() if m is None or k < m}
        b = {k: c for k, c in other.terms.items() if m is None or k < m}
        return a == b

    __hash__ = None

    def __str__(self):
        parts = []
        for k in sorted(self.terms):
            parts.append(_term_str(self.terms[k], _pow_str(self.variable, k) if k else ""))
        body = _join(parts)
        if self.order is not None:
            body = (body + " + " if parts else "") + "O(%s)" % _pow_str(self.variable, self.order)
        return body

    def __repr__(self):
        return "OneVarSeries(%s)" % self


def expand(f, var, order):
    """Expansion of ``f`` at ``t = 0`` (var 't') or ``s = 0`` (var 's')."""
    if f.trunc is not None:
        order = min(order, f.trunc)
    out = {}
    ma = -Scalar.mono(1, 1)
    for (i, j), c in f.terms.items():
        if var == "t":
            # t^i (t - a)^j = sum_k C(j,k) (-a)^(j-k) t^(i+k)
            p, q = i, j
            base = ma
        else:
            # (s + a)^i s^j = sum_k C(i,k) a^(i-k) s^(j+k)
            p, q = j, i
            base = Scalar.mono(1, 1)
        k = 0
        while p + k < order:
            b = gen_binomial(q, k)
            if b:
                _addto(out, p + k, c * base ** (q - k) * b)
            elif q >= 0 and k > q:
                break
            k += 1
    return OneVarSeries(var, out, order)


def specialize_diag(f, order):
    """Set a = 0 and s = t."""
    if f.trunc is not None:
        order = min(order, 2 * f.trunc)
    out = {}
    for (i, j), c in f.terms.items():
        q = c.specialize_a0()
        if q and i + j < order:
            _addto(out, i + j, Scalar.const(q))
    return OneVarSeries("t", out, order)


# --- text ------------------------------------------------------------------

def _pow_str(var, k):
    return var if k == 1 else "%s^%d" % (var, k)


def _term_str(c, mono):
    # returns (negative?, body)
    if mono == "":
        s = str(c)
        if s.startswith("-") and c.is_monomial():
            return True, s[1:]
        return False, s if c.is_monomial() else "(%s)" % s
    if c.is_monomial():
        (e, q), = c.items()
        neg = q < 0
        mag = Scalar.mono(-q if neg else q, e)
        return neg, mono if mag == ONE else "%s*%s" % (mag, mono)
    return False, "(%s)*%s" % (c, mono)


def _join(parts):
    if not parts:
        return "0"
    out = []
    for i, (neg, body) in enumerate(parts):
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_fun(f):
    parts = []
    for (i, j) in sorted(f.terms):
        mono = "*".join(p for p in (_pow_str("t", i) if i else "",
                                    _pow_str("s", j) if j else "") if p)
        parts.append(_term_str(f.terms[(i, j)], mono))
    body = _join(parts)
    if f.trunc is not None:
        body = (body + " + " if parts else "") + "O(u_%d)" % f.trunc
    return body


def format_basis(coeffs):
    order = {"U": 0, "V": 1, "X": 2, "Y": 3}
    parts = []
    for (fam, n) in sorted(coeffs, key=lambda k: (k[1], order[k[0]])):
        parts.append(_term_str(coeffs[(fam, n)], "%s_%d" % (fam.lower(), n)))
    return _join(parts)


def _split_terms(text):
    # split at top-level '+'/'-' that are surrounded by spaces or lead the string
    terms, depth, cur, sign = [], 0, "", "+"
    i = 0
    text = text.strip()
    if text.startswith("-"):
        sign, i = "-", 1
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text[i:i + 3] in (" + ", " - "):
            terms.append((sign, cur.strip()))
            sign, cur = text[i + 1], ""
            i += 3
            continue
        cur += ch
        i += 1
    terms.append((sign, cur.strip()))
    return terms


_VAR = re.compile(r"^([ts])(?:\^(-?\d+))?$")
_BASIS = re.compile(r"^([uvxy])_(-?\d+)$")
_ORDER = re.compile(r"^O\((?:u_(-?\d+)|([ts])(?:\^(-?\d+))?)\)$")


def _parse_term(sign, body, mono_re):
    coeff_parts, mono = [], []
    for part in _factor_split(body):
        m = mono_re.match(part)
        if m:
            mono.append(m)
        else:
            coeff_parts.append(part)
    coeff = ONE
    if coeff_parts:
        s = "*".join(coeff_parts)
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        coeff = parse_scalar(s)
    if sign == "-":
        coeff = -coeff
    return coeff, mono


def _factor_split(body):
    parts, depth, cur = [], 0, ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    # re-join numeric coefficient with a-power ("2*a^3")
    return [p for p in parts if p]


def parse_fun(text):
    """Parse the monomial or basis text form of a TwoVarFun."""
    trunc = None
    terms = {}
    if text.strip() == "0":
        return TwoVarFun()
    for sign, body in _split_terms(text):
        m = _ORDER.match(body)
        if m:
            trunc = int(m.group(1))
            continue
        if _BASIS.search(body.split("*")[-1]):
            coeff, mono = _parse_term(sign, body, _BASIS)
            (mm,) = mono
            fam, n = mm.group(1).upper(), int(mm.group(2))
            g = from_basis({(fam, n): coeff})
            for k, c in g.terms.items():
                _addto(terms, k, c)
            continue
        coeff, mono = _parse_term(sign, body, _VAR)
        i = j = 0
        for mm in mono:
            e = int(mm.group(2)) if mm.group(2) else 1
            if mm.group(1) == "t":
                i += e
            else:
                j += e
        _addto(terms, (i, j), coeff)
    return TwoVarFun(terms, trunc)


def parse_series(text):
    terms, order, var = {}, None, None
    for sign, body in _split_terms(text):
        m = _ORDER.match(body)
        if m:
            var = m.group(2)
            order = int(m.group(3)) if m.group(3) else 1
            continue
        coeff, mono = _parse_term(sign, body, _VAR)
        e = 0
        for mm in mono:
            var = mm.group(1)
            e += int(mm.group(2)) if mm.group(2) else 1
        _addto(terms, e, coeff)
    return OneVarSeries(var or "t", terms, order)


def parse_basis(text):
    out = {}
    for sign, body in _split_terms(text):
        coeff, mono = _parse_term(sign, body, _BASIS)
        if not mono:
            if coeff:
                raise ValueError("constant term in basis expansion: %r" % body)
            continue
        if len(mono) != 1:
            raise ValueError("expected one basis element in %r" % body)
        (mm,) = mono
        _addto(out, (mm.group(1).upper(), int(mm.group(2))), coeff)
    return out


__all__ = [
    "TwoVarFun", "OneVarSeries", "mul2", "deriv2", "res2", "res2_monomial", "to_basis",
    "from_basis", "basis_to_w", "expand", "specialize_diag", "u", "v", "x", "y", "w", "z",
    "format_fun", "format_basis", "parse_fun", "parse_series", "parse_basis",
]
