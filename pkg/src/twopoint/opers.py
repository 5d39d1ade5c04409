"""Oper coordinates and their equations.

Coordinates are graded: ``z_i`` has degree ``i+2``, ``a_i`` degree ``2i+2``,
``b_i`` degree ``2i+3``, ``psi_i`` degree ``i+1`` and the parameter ``a``
degree ``-1``.  ``alpha_i = a_i - a b_i`` and ``beta_i = b_i`` are the
coordinates in the ``u_i, y_i`` basis.
"""

import re
from fractions import Fraction

from . import series
from .env import EnvElement, sugawara1, sugawara2
from .errors import WeightConstraint
from .scalar import ONE, ZERO, Scalar, gen_binomial, parse_scalar
from .series import OneVarSeries, TwoVarFun

FAMILY_ORDER = ("Z", "ZT", "ZS", "A", "B", "ALPHA", "BETA", "PSI")
_FAM_RANK = {f: i for i, f in enumerate(FAMILY_ORDER)}
_NAMES = {"Z": "z", "ZT": "zt", "ZS": "zs", "A": "a", "B": "b",
          "ALPHA": "alpha", "BETA": "beta", "PSI": "psi"}
_FROM_NAME = {v: k for k, v in _NAMES.items()}


class CoordVar(tuple):
    """(family, index) with the grading of the coordinate."""

    def __new__(cls, family, index):
        if family not in _FAM_RANK:
            raise ValueError("unknown coordinate family %r" % family)
        return super().__new__(cls, (family, int(index)))

    @property
    def family(self):
        return self[0]

    @property
    def index(self):
        return self[1]

    def degree(self):
        f, i = self
        if f in ("Z", "ZT", "ZS"):
            return i + 2
        if f in ("A", "ALPHA"):
            return 2 * i + 2
        if f in ("B", "BETA"):
            return 2 * i + 3
        return i + 1

    def sort_key(self):
        return (_FAM_RANK[self[0]], self[1])

    def __str__(self):
        return "%s[%d]" % (_NAMES[self[0]], self[1])

    def __repr__(self):
        return str(self)


def _addto(d, key, val):
    if not val:
        return
    cur = d.get(key)
    new = val if cur is None else cur + val
    if new:
        d[key] = new
    else:
        d.pop(key, None)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda kv: kv[0].sort_key()))


class OperPoly:
    """Sparse polynomial in CoordVars with Scalar coefficients.

    A monomial is a sorted tuple of (CoordVar, exponent).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        for m, c in (terms or {}).items():
            _addto(t, tuple(m), Scalar.coerce(c))
        self.terms = t

    @classmethod
    def var(cls, family, index):
        return cls({((CoordVar(family, index), 1),): ONE})

    @classmethod
    def const(cls, c):
        return cls({(): Scalar.coerce(c)})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, OperPoly):
            other = OperPoly.const(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            _addto(t, m, c)
        return OperPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return OperPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, OperPoly):
            other = OperPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, OperPoly):
            c = Scalar.coerce(other)
            return OperPoly({m: v * c for m, v in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _addto(out, _mono_mul(m1, m2), c1 * c2)
        return OperPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = OperPoly.const(ONE)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, OperPoly):
            other = OperPoly.const(other)
        return self.terms == other.terms

    __hash__ = None

    def variables(self):
        return sorted({v for m in self.terms for v, _ in m}, key=CoordVar.sort_key)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), ZERO)

    def constant(self):
        return self.terms.get((), ZERO)

    def linear_part(self):
        """Map CoordVar -> Scalar for degree-one monomials (raises if nonlinear)."""
        out = {}
        for m, c in self.terms.items():
            if not m:
                continue
            if len(m) != 1 or m[0][1] != 1:
                raise ValueError("polynomial is not affine")
            out[m[0][0]] = c
        return out

    def subs(self, mapping):
        """Substitute variables by OperPolys (or Scalars)."""
        mp = {k: (v if isinstance(v, OperPoly) else OperPoly.const(v)) for k, v in mapping.items()}
        cache = {}

        def power(v, e):
            key = (v, e)
            if key not in cache:
                cache[key] = mp[v] ** e
            return cache[key]

        out = OperPoly()
        for m, c in self.terms.items():
            acc = OperPoly({(): c})
            rest = []
            for v, e in m:
                if v in mp:
                    acc = acc * power(v, e)
                else:
                    rest.append((v, e))
            if rest:
                acc = acc * OperPoly({tuple(rest): ONE})
            out = out + acc
        return out

    def map_coefficients(self, fn):
        return OperPoly({m: fn(c) for m, c in self.terms.items()})

    def specialize_a0(self):
        return self.map_coefficients(lambda c: Scalar.const(c.specialize_a0()))

    def rename(self, fn):
        """Rename variables through fn: CoordVar -> CoordVar."""
        out = {}
        for m, c in self.terms.items():
            nm = {}
            for v, e in m:
                w = fn(v)
                nm[w] = nm.get(w, 0) + e
            _addto(out, tuple(sorted(nm.items(), key=lambda kv: kv[0].sort_key())), c)
        return OperPoly(out)

    def evaluate(self, values):
        """Value at a point: values maps CoordVar -> Scalar (missing ones are 0)."""
        out = ZERO
        for m, c in self.terms.items():
            term = c
            for v, e in m:
                val = Scalar.coerce(values.get(v, ZERO))
                term = term * val ** e
                if not term:
                    break
            out = out + term
        return out

    def weighted_degrees(self):
        """Set of weighted degrees of the terms (counting a as degree -1)."""
        out = set()
        for m, c in self.terms.items():
            base = sum(v.degree() * e for v, e in m)
            for ea in c.coeffs():
                out.add(base - ea)
        return out

    def is_homogeneous(self, degree=None):
        ds = self.weighted_degrees()
        if not ds:
            return True
        if len(ds) != 1:
            return False
        return degree is None or ds == {degree}

    def univariate(self, var):
        """Coefficient list {exponent: Scalar} in a single variable."""
        out = {}
        for m, c in self.terms.items():
            if not m:
                _addto(out, 0, c)
                continue
            if len(m) != 1 or m[0][0] != var:
                raise ValueError("polynomial is not univariate in %s" % var)
            _addto(out, m[0][1], c)
        return out

    def __str__(self):
        if not self.terms:
            return "0"

        def key(m):
            deg = sum(v.degree() * e for v, e in m)
            return (deg, [(v.sort_key(), -e) for v, e in m])

        parts = []
        for m in sorted(self.terms, key=key):
            c = self.terms[m]
            mono = "*".join(str(v) if e == 1 else "%s^%d" % (v, e) for v, e in m)
            if not mono:
                s = str(c)
                neg = s.startswith("-") and c.is_monomial()
                parts.append((neg, s[1:] if neg else (s if c.is_monomial() else "(%s)" % s)))
            elif c.is_monomial():
                (ea, q), = c.items()
                neg = q < 0
                mag = Scalar.mono(-q if neg else q, ea)
                parts.append((neg, mono if mag == ONE else "%s*%s" % (mag, mono)))
            else:
                parts.append((False, "(%s)*%s" % (c, mono)))
        out = []
        for i, (neg, body) in enumerate(parts):
            if i == 0:
                out.append("-" + body if neg else body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return "OperPoly(%s)" % self

    def to_json(self):
        return str(self)


_VARTOK = re.compile(r"^([a-z]+)\[(-?\d+)\](?:\^(\d+))?$")


def parse_operpoly(text):
    text = text.strip()
    if text == "0":
        return OperPoly()
    out = OperPoly()
    for sign, body in series._split_terms(text):
        coeff_parts, mono = [], []
        for part in series._factor_split(body):
            m = _VARTOK.match(part)
            if m:
                mono.append((CoordVar(_FROM_NAME[m.group(1)], int(m.group(2))),
                             int(m.group(3) or 1)))
            else:
                coeff_parts.append(part)
        c = ONE
        if coeff_parts:
            s = "*".join(coeff_parts)
            if s.startswith("(") and s.endswith(")"):
                s = s[1:-1]
            c = parse_scalar(s)
        if sign == "-":
            c = -c
        term = OperPoly({(): c})
        for v, e in mono:
            term = term * OperPoly({((v, e),): ONE})
        out = out + term
    return out


# --------------------------------------------------------------------------

def a_lambda(lam):
    if lam < 0:
        raise WeightConstraint("weight must be nonnegative")
    return Fraction(lam * lam, 4) + Fraction(lam, 2)


def _psi_solve(lam, z):
    """Solve the first lam equations of the psi-system; z(k) gives z_k."""
    psi = [None] * lam
    psi[0] = z(-1) * Fraction(-1, lam)
    for k in range(0, lam - 1):
        quad = sum((psi[i] * psi[k - i] for i in range(k + 1)), z(k) * 0)
        psi[k + 1] = (quad - z(k)) * Fraction(1, lam - 1 - k)
    return psi


def p_lambda(lam):
    """z_{lam-1} as a polynomial in z_{-1}, ..., z_{lam-2} on the oper locus."""
    if lam < 1:
        raise WeightConstraint("p_lambda needs lambda >= 1")
    psi = _psi_solve(lam, lambda k: OperPoly.var("Z", k))
    return sum((psi[i] * psi[lam - 1 - i] for i in range(lam)), OperPoly())


def op1_member(f, lam):
    """Decide whether the series f (coefficients z_k of t^k) lies on the
    weight-lam oper locus.  Returns 'yes', 'no' or 'undecidable-at-order'."""
    if f.order is not None and f.order < lam:
        return "undecidable-at-order"
    z = lambda k: f.terms.get(k, ZERO)
    if any(k < -2 for k in f.terms):
        return "no"
    if z(-2) != Scalar.const(a_lambda(lam)):
        return "no"
    if lam == 0:
        closed = z(-1).is_zero()
        recursive = closed
    else:
        values = {CoordVar("Z", k): z(k) for k in range(-1, lam - 1)}
        closed = z(lam - 1) == p_lambda(lam).evaluate(values)
        psi = _psi_solve(lam, z)
        last = sum((psi[i] * psi[lam - 1 - i] for i in range(lam)), ZERO)
        recursive = z(lam - 1) == last
    if closed != recursive:
        raise AssertionError("closed equation and psi-recursion disagree")
    return "yes" if closed else "no"


def coord_expand(family, n, floor):
    """Coefficient z_n of the t- (or s-) expansion of sum a_i u_i + b_i v_i."""
    out = OperPoly()
    if family == "t":
        ma = Scalar.mono(-1, 1)
        for i in range(-floor, n + 1):
            c = gen_binomial(i, n - i)
            if c:
                out = out + OperPoly.var("A", i) * (ma ** (2 * i - n) * c)
            c = gen_binomial(i + 1, n - i)
            if c:
                out = out + OperPoly.var("B", i) * (ma ** (2 * i - n + 1) * c)
    elif family == "s":
        pa = Scalar.mono(1, 1)
        for i in range(-floor, n + 1):
            c = gen_binomial(i, n - i)
            if c:
                out = out + OperPoly.var("A", i) * (pa ** (2 * i - n) * c)
        for i in range(-floor, n):
            c = gen_binomial(i, n - i - 1)
            if c:
                out = out + OperPoly.var("B", i) * (pa ** (2 * i - n + 1) * c)
    else:
        raise ValueError("family must be 't' or 's'")
    return out


def coord_diag(n):
    """Diagonal coordinate matching z_n: z_{2i} -> a_i, z_{2i+1} -> b_i."""
    if n % 2 == 0:
        return CoordVar("A", n // 2)
    return CoordVar("B", (n - 1) // 2)


def _diag_inverse(v):
    if v.family == "A":
        return CoordVar("Z", 2 * v.index)
    if v.family == "B":
        return CoordVar("Z", 2 * v.index + 1)
    raise ValueError("unexpected variable %s" % (v,))


def f_lambda(lam, mu):
    """Univariate polynomial in z_{-2} cutting the diagonal restriction."""
    if lam < 0 or mu < 0:
        raise WeightConstraint("weights must be nonnegative")
    if lam == 0:
        expr = OperPoly.var("ZT", -1)
    else:
        expr = OperPoly.var("ZT", lam - 1) - p_lambda(lam).rename(lambda v: CoordVar("ZT", v.index))
    floor = 2
    mapping = {CoordVar("ZT", n): coord_expand("t", n, floor) for n in range(-1, lam)}
    q = expr.subs(mapping)
    q = q.subs({
        CoordVar("A", -2): Scalar.mono(a_lambda(mu), 2),
        CoordVar("B", -2): Scalar.mono(a_lambda(mu) - a_lambda(lam), 1),
    })
    q = q * Scalar.mono(1, lam + 1)
    return q.specialize_a0().rename(_diag_inverse)


def poly_from_roots(var, roots, lead=ONE):
    out = OperPoly.const(lead)
    x = OperPoly.var(*var)
    for r in roots:
        out = out * (x - OperPoly.const(r))
    return out


def f_lambda_roots(lam, mu):
    """Expected roots A_{mu+lam-2i}, i = 0..lam."""
    return [a_lambda(mu + lam - 2 * i) for i in range(lam + 1)]


# --------------------------------------------------------------------------
# two-point oper points

class OperElement:
    """Point with coordinates a_i (coefficient of u_i) and b_i (of v_i)."""

    def __init__(self, coords, floor):
        self.coords = {}
        for i, (ai, bi) in coords.items():
            ai, bi = Scalar.coerce(ai), Scalar.coerce(bi)
            if i < -floor and (ai or bi):
                raise ValueError("coordinate below floor")
            if ai or bi:
                self.coords[i] = (ai, bi)
        self.floor = floor

    def a(self, i):
        return self.coords.get(i, (ZERO, ZERO))[0]

    def b(self, i):
        return self.coords.get(i, (ZERO, ZERO))[1]

    def alpha(self, i):
        return self.a(i) - self.b(i).shift(1)

    def beta(self, i):
        return self.b(i)

    def value(self, var):
        f, i = var
        return {"A": self.a, "B": self.b, "ALPHA": self.alpha, "BETA": self.beta}[f](i)

    def to_fun(self):
        out = TwoVarFun()
        for i, (ai, bi) in self.coords.items():
            out = out + series.u(i, ai) + series.v(i, bi)
        return out

    def to_json(self):
        return {str(i): {"a": str(ai), "b": str(bi)} for i, (ai, bi) in sorted(self.coords.items())}


def _check_weights(lam, mu, nu):
    if min(lam, mu, nu) < 0 or not (abs(mu - lam) <= nu <= lam + mu) or (lam + mu - nu) % 2:
        raise WeightConstraint("invalid weights (%d, %d, %d)" % (lam, mu, nu))


def hyper_oper(lam, mu, nu):
    _check_weights(lam, mu, nu)
    am, al = a_lambda(mu), a_lambda(lam)
    return OperElement({
        -2: (Scalar.mono(am, 2), Scalar.mono(am - al, 1)),
        -1: (Scalar.const(a_lambda(nu)), ZERO),
    }, floor=2)


def _poch(x, n):
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def hyper_series(lam, mu, nu, order=None):
    """Polynomial solution of the reduced equation (prefactor dropped)."""
    _check_weights(lam, mu, nu)
    if lam > mu:
        raise WeightConstraint("hyper_series needs lambda <= mu")
    j = (lam + mu - nu) // 2
    if j > lam:
        raise WeightConstraint("hyper_series needs 0 <= j <= lambda")
    al, be, ga = -j, j - lam - mu - 1, -lam
    terms = {}
    fact = 1
    for n in range(j + 1):
        if n:
            fact *= n
        c = _poch(al, n) * _poch(be, n) / (_poch(ga, n) * fact)
        terms[n] = Scalar.mono(c, -n)
    return OneVarSeries("t", terms, order)


def hyper_ode_residual(lam, mu, nu):
    phi = hyper_series(lam, mu, nu)
    a = Scalar.mono(1, 1)
    tt = OneVarSeries("t", {2: ONE, 1: -a})
    lin = OneVarSeries("t", {1: Scalar.const(lam + mu), 0: -(a * lam)})
    const = a_lambda(lam + mu) - a_lambda(nu)
    return tt * phi.deriv().deriv() - lin * phi.deriv() + phi.scale(const)


# --------------------------------------------------------------------------
# derivations acting on coordinates

def _basis_coeffs(g, i):
    """(alpha_i, beta_i) coefficients of the function g, read off by residues."""
    al = series.res2(g * series.v(-i - 1))
    be = series.res2(g * series.u(-i - 1))
    return al, be


def der_on_coord(field, var, window=None):
    """(field * d) applied to the coordinate function var (ALPHA or BETA).

    The result is the affine function f -> -c(2 field' f + field f' - field'''/2)
    where c extracts the requested coordinate of its argument.
    """
    fam, i = var
    if fam not in ("ALPHA", "BETA"):
        raise ValueError("der_on_coord acts on alpha/beta coordinates")
    idx = [n for (_, n) in series.to_basis(field)]
    if not idx:
        return OperPoly()
    if window is None:
        window = (i - max(idx) - 4, i - min(idx) + 4)
    d1 = series.deriv2(field)
    d3 = series.deriv2(series.deriv2(d1))
    pick = 0 if fam == "ALPHA" else 1

    def coord(g):
        return _basis_coeffs(g, i)[pick]

    out = OperPoly.const(coord(d3) * Fraction(1, 2))
    for j in range(window[0], window[1] + 1):
        for cfam, basis in (("ALPHA", series.x(j)), ("BETA", series.y(j))):
            g = d1 * basis * 2 + field * series.deriv2(basis)
            c = coord(g)
            if c:
                out = out + OperPoly.var(cfam, j) * (-c)
    return out


def der_on_coord_at(field, var, point):
    """Value of the derivative of a coordinate at an OperElement."""
    return der_on_coord(field, var).evaluate({v: point.value(v) for v in _coord_vars(point)})


def _coord_vars(point):
    out = []
    for i in point.coords:
        for f in ("ALPHA", "BETA"):
            out.append(CoordVar(f, i))
    return out


# --------------------------------------------------------------------------
# Sugawara dictionaries

def ff_dict(var):
    """Sugawara element matched with a coordinate: (factor, variant, index).

    variant 'two' uses the doubled index k2; variant 'one' the integer k.
    """
    fam, n = var
    if fam == "BETA":
        return {"factor": 2, "variant": "two", "k2": 2 * (-1 - n)}
    if fam == "ALPHA":
        return {"factor": 2, "variant": "two", "k2": -2 * n - 1}
    if fam == "Z":
        return {"factor": 2, "variant": "one", "k": -n - 1}
    raise ValueError("no Sugawara element for family %s" % fam)


def ff_element(var, level):
    d = ff_dict(var)
    if d["variant"] == "two":
        return sugawara2(d["k2"], level).scale(d["factor"])
    return sugawara1(d["k"], level).scale(d["factor"])


def ff_image(poly, level, algebra="TWO"):
    """Image of an affine polynomial in coordinates under the dictionary."""
    out = EnvElement.scalar(algebra, poly.constant()).truncate(level)
    for v, c in poly.linear_part().items():
        out = out + ff_element(v, level).scale(c)
    return out
