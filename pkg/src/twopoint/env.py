"""Truncated completed enveloping algebras of loop algebras of sl(2).

Five function algebras are supported, each with a basis ``r_g`` indexed by
``g = gamma2`` (twice the index):

* ``ONE``, ``T``, ``S``: Laurent polynomials in one variable, ``r_{2n} = t^n``
  (resp. ``s^n``); only even ``g`` occur.
* ``TS``: pairs (series in t, series in s), ``r_{2n} = s^n`` and
  ``r_{2n+1} = t^n``.
* ``TWO``: functions of t, s with ``t - s = a``, ``r_{2n} = u_n`` and
  ``r_{2n+1} = v_n``.

A generator ``J^alpha r_g`` is the pair ``(g, alpha)`` with alpha in 0, 1, 2
for e, h, f, so tuple order is the PBW order.  An :class:`EnvElement` is a
finite combination of ordered monomials with coefficients polynomial in the
central element ``C``, valid modulo the left ideal ``J(level)`` generated by
generators with ``g >= level``.
"""

from fractions import Fraction
from functools import lru_cache

from . import series
from .errors import ResultLevelEmpty, ZeroElement
from .liealg import BASIS, bracket_basis, casimir_pairs, killing_basis
from .scalar import ONE, ZERO, Scalar
from .series import OneVarSeries, TwoVarFun

ALPHA = {name: i for i, name in enumerate(BASIS)}
CRITICAL = Fraction(-1, 2)
NO_LEVEL = None  # exact element


def _addto(d, key, val):
    if not val:
        return
    cur = d.get(key)
    new = val if cur is None else cur + val
    if new:
        d[key] = new
    else:
        d.pop(key, None)


# --------------------------------------------------------------------------
# function rings

class FunRing:
    name = None
    even_only = False
    half_drop = False

    def __init__(self):
        self._insert_cache = {}
        self._bracket_cache = {}
        self._resd_cache = {}

    # basis algebra ---------------------------------------------------------
    def mul(self, p, q):
        raise NotImplementedError

    def deriv(self, p):
        raise NotImplementedError

    def res(self, p):
        raise NotImplementedError

    def res_dprod(self, p, q):
        """Res(r_p' r_q)."""
        key = (p, q)
        r = self._resd_cache.get(key)
        if r is None:
            r = ZERO
            for g1, c1 in self.deriv(p):
                for g2, c2 in self.mul(g1, q):
                    rr = self.res(g2)
                    if rr:
                        r = r + c1 * c2 * rr
            self._resd_cache[key] = r
        return r

    def drop(self, g):
        return 1 if (self.half_drop and g % 2) else 0

    @lru_cache(maxsize=None)
    def max_res_partner(self, g):
        """Largest p with Res(r_p' r_g) != 0 (None if there is none nearby)."""
        best = None
        for p in range(-g - 8, -g + 9):
            if self.even_only and p % 2:
                continue
            if self.res_dprod(p, g):
                best = p
        return best

    def label(self, g):
        raise NotImplementedError

    def from_label(self, fam, n):
        raise NotImplementedError

    def fun_to_w(self, f):
        """Expansion of a function of this ring in the r-basis."""
        if isinstance(f, dict):
            return {g: Scalar.coerce(c) for g, c in f.items() if c}
        raise TypeError("unsupported function for ring %s" % self.name)

    # generator brackets ----------------------------------------------------
    def gen_bracket(self, x, y):
        """[J^a r_p, J^b r_q] as (tuple of (generator, Scalar), central Scalar)."""
        key = (x, y)
        r = self._bracket_cache.get(key)
        if r is None:
            (p, a), (q, b) = x, y
            gens = {}
            br = bracket_basis(BASIS[a], BASIS[b])
            if br:
                prod = self.mul(p, q)
                for name, n in br.items():
                    for g, c in prod:
                        _addto(gens, (g, ALPHA[name]), c * n)
            k = killing_basis(BASIS[a], BASIS[b])
            cen = self.res_dprod(p, q) * k if k else ZERO
            r = (tuple(gens.items()), cen)
            self._bracket_cache[key] = r
        return r

    # straightening -----------------------------------------------------------
    def insert(self, mono, g):
        """Ordered-monomial expansion of ``mono * g``.

        Returns a tuple of ((monomial, extra C-power), Scalar).
        """
        key = (mono, g)
        r = self._insert_cache.get(key)
        if r is not None:
            return r
        if not mono or mono[-1] <= g:
            r = (((mono + (g,), 0), ONE),)
        else:
            last = mono[-1]
            prefix = mono[:-1]
            out = {}
            # prefix * g * last
            for (m1, c1), s1 in self.insert(prefix, g):
                for (m2, c2), s2 in self.insert(m1, last):
                    _addto(out, (m2, c1 + c2), s1 * s2)
            # prefix * [last, g]
            gens, cen = self.gen_bracket(last, g)
            for gg, s in gens:
                for (m1, c1), s1 in self.insert(prefix, gg):
                    _addto(out, (m1, c1), s * s1)
            if cen:
                _addto(out, (prefix, 1), cen)
            r = tuple(out.items())
        self._insert_cache[key] = r
        return r

    def mono_mul(self, m1, m2):
        state = {(m1, 0): ONE}
        for g in m2:
            new = {}
            for (m, c), s in state.items():
                for (mm, cc), ss in self.insert(m, g):
                    _addto(new, (mm, c + cc), s * ss)
            state = new
        return state

    def word(self, gens):
        """Ordered expansion of an arbitrary word of generators."""
        return self.mono_mul((), tuple(gens))

    def right_level(self, level, mono):
        """Level n such that J(level) * mono lies in J(n); None if uncertifiable."""
        n = level
        for g, _ in mono:
            p = self.max_res_partner(g)
            if p is not None and p >= n:
                return None
            shift = g - self.drop(g)
            if shift < 0:
                n += shift
        return n


class OneVarRing(FunRing):
    even_only = True

    def __init__(self, name, var):
        super().__init__()
        self.name = name
        self.var = var

    def mul(self, p, q):
        return ((p + q, ONE),)

    def deriv(self, p):
        n = p // 2
        return ((p - 2, Scalar.const(n)),) if n else ()

    def res(self, p):
        return ONE if p == -2 else ZERO

    def label(self, g):
        return self.var, g // 2

    def from_label(self, fam, n):
        if fam != self.var:
            raise ValueError("unknown basis letter %r for %s" % (fam, self.name))
        return 2 * n

    def fun_to_w(self, f):
        if isinstance(f, OneVarSeries):
            return {2 * k: c for k, c in f.terms.items()}
        return super().fun_to_w(f)


class TSRing(FunRing):
    name = "TS"
    half_drop = True

    def mul(self, p, q):
        if p % 2 == 0 and q % 2 == 0:
            return ((p + q, ONE),)
        if p % 2 and q % 2:
            return ((p + q - 1, ONE),)
        return ()

    def deriv(self, p):
        n = p // 2
        return ((p - 2, Scalar.const(n)),) if n else ()

    def res(self, p):
        return ONE if p in (-2, -1) else ZERO

    def label(self, g):
        return ("s", g // 2) if g % 2 == 0 else ("t", (g - 1) // 2)

    def from_label(self, fam, n):
        return 2 * n if fam == "s" else 2 * n + 1

    def fun_to_w(self, f):
        if isinstance(f, tuple):
            ft, fs = f
            out = {}
            if ft is not None:
                for k, c in ft.terms.items():
                    _addto(out, 2 * k + 1, c)
            if fs is not None:
                for k, c in fs.terms.items():
                    _addto(out, 2 * k, c)
            return out
        if isinstance(f, OneVarSeries):
            off = 1 if f.variable == "t" else 0
            return {2 * k + off: c for k, c in f.terms.items()}
        return super().fun_to_w(f)


class TwoRing(FunRing):
    name = "TWO"
    half_drop = True

    def mul(self, p, q):
        return _two_mul(p, q)

    def deriv(self, p):
        return _two_deriv(p)

    def res(self, p):
        return _two_res(p)

    def label(self, g):
        return ("u", g // 2) if g % 2 == 0 else ("v", (g - 1) // 2)

    def from_label(self, fam, n):
        return 2 * n if fam == "u" else 2 * n + 1

    def fun_to_w(self, f):
        if isinstance(f, TwoVarFun):
            return series.basis_to_w(series.to_basis(f))
        return super().fun_to_w(f)


@lru_cache(maxsize=None)
def _two_mul(p, q):
    prod = series.w(p) * series.w(q)
    return tuple(sorted(series.basis_to_w(series.to_basis(prod)).items()))


@lru_cache(maxsize=None)
def _two_deriv(p):
    d = series.deriv2(series.w(p))
    return tuple(sorted(series.basis_to_w(series.to_basis(d)).items()))


@lru_cache(maxsize=None)
def _two_res(p):
    return series.res2(series.w(p))


RINGS = {
    "ONE": OneVarRing("ONE", "t"),
    "T": OneVarRing("T", "t"),
    "S": OneVarRing("S", "s"),
    "TS": TSRing(),
    "TWO": TwoRing(),
}


def ring(name):
    return RINGS[name]


# --------------------------------------------------------------------------
# elements

def _lmin(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return min(x, y)


class EnvElement:
    """Finite combination of ordered monomials, valid modulo ``J(level)``.

    ``terms`` maps (monomial, C-power) to a Scalar; ``level`` is doubled
    (None means exact).  ``central`` records that the element is known to be
    central modulo ``C + 1/2``; it lets products with it on the right keep
    the left operand's level.
    """

    __slots__ = ("algebra", "terms", "level", "central")

    def __init__(self, algebra, terms=None, level=None, central=False):
        self.algebra = algebra
        t = {}
        if terms:
            for (mono, cp), c in terms.items():
                c = Scalar.coerce(c)
                if not c:
                    continue
                if level is not None and mono and mono[-1][0] >= level:
                    continue
                _addto(t, (tuple(mono), cp), c)
        self.terms = t
        self.level = level
        self.central = central

    @property
    def ring(self):
        return RINGS[self.algebra]

    @classmethod
    def scalar(cls, algebra, c):
        return cls(algebra, {((), 0): Scalar.coerce(c)})

    @classmethod
    def C(cls, algebra):
        return cls(algebra, {((), 1): ONE})

    @classmethod
    def gen(cls, algebra, alpha, g, coeff=ONE):
        if isinstance(alpha, str):
            alpha = ALPHA[alpha]
        return cls(algebra, {(((g, alpha),), 0): coeff})

    @classmethod
    def from_lie_fun(cls, algebra, lie, f, coeff=ONE):
        """Element ``x (x) f`` for an Sl2Elt (or generator name) and a function."""
        rg = RINGS[algebra]
        fw = rg.fun_to_w(f)
        lie_c = {lie: ONE} if isinstance(lie, str) else lie.c
        terms = {}
        for name, cl in lie_c.items():
            for g, cf in fw.items():
                _addto(terms, (((g, ALPHA[name]),), 0), cl * cf * coeff)
        return cls(algebra, terms)

    def is_zero(self):
        return not self.terms

    def copy(self, terms=None, level="keep", central=None):
        return EnvElement(self.algebra, self.terms if terms is None else terms,
                          self.level if level == "keep" else level,
                          self.central if central is None else central)

    def truncate(self, level):
        return EnvElement(self.algebra, self.terms, _lmin(self.level, level), self.central)

    def __add__(self, other):
        if not isinstance(other, EnvElement):
            other = EnvElement.scalar(self.algebra, other)
        _same(self, other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            _addto(t, k, c)
        return EnvElement(self.algebra, t, _lmin(self.level, other.level),
                          self.central and other.central)

    __radd__ = __add__

    def __neg__(self):
        return EnvElement(self.algebra, {k: -c for k, c in self.terms.items()}, self.level,
                          self.central)

    def __sub__(self, other):
        if not isinstance(other, EnvElement):
            other = EnvElement.scalar(self.algebra, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = Scalar.coerce(c)
        return EnvElement(self.algebra, {k: v * c for k, v in self.terms.items()}, self.level,
                          self.central)

    def __mul__(self, other):
        if isinstance(other, EnvElement):
            return straighten_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def at_critical(self):
        """Substitute C = -1/2."""
        t = {}
        for (mono, cp), c in self.terms.items():
            _addto(t, (mono, 0), c * CRITICAL ** cp)
        return EnvElement(self.algebra, t, self.level, self.central)

    def c_coefficient(self, power):
        return EnvElement(self.algebra, {(m, 0): c for (m, cp), c in self.terms.items()
                                         if cp == power}, self.level)

    def max_cpow(self):
        return max((cp for _, cp in self.terms), default=0)

    def degree(self):
        return max((len(m) for m, _ in self.terms), default=0)

    def min_index(self):
        return min((m[0][0] for m, _ in self.terms if m), default=None)

    def equal_mod(self, other, level=None):
        """Equality modulo J(level) (default: the common certified level)."""
        lv = _lmin(_lmin(self.level, other.level), level)
        return (self - other).truncate(lv).is_zero()

    def __eq__(self, other):
        if not isinstance(other, EnvElement):
            return NotImplemented
        return self.algebra == other.algebra and self.equal_mod(other)

    __hash__ = None

    def __str__(self):
        return format_env(self)

    def __repr__(self):
        return "EnvElement(%s: %s)" % (self.algebra, self)

    def to_json(self):
        rg = self.ring
        items = []
        for (mono, cp) in sorted(self.terms, key=_term_key):
            items.append({
                "monomial": format_monomial(rg, mono),
                "C_power": cp,
                "coefficient": str(self.terms[(mono, cp)]),
            })
        return {"algebra": self.algebra, "level2": self.level, "terms": items}


def _same(x, y):
    if x.algebra != y.algebra:
        raise ValueError("elements of different algebras: %s, %s" % (x.algebra, y.algebra))


def _term_key(k):
    mono, cp = k
    return (len(mono), mono, cp)


def format_monomial(rg, mono):
    parts = []
    for g, a in mono:
        fam, n = rg.label(g)
        parts.append("(%s:%s:%d)" % (BASIS[a], fam, n))
    return "".join(parts)


def format_env(x):
    rg = x.ring
    parts = []
    for key in sorted(x.terms, key=_term_key):
        mono, cp = key
        c = x.terms[key]
        body = []
        if cp:
            body.append("C" if cp == 1 else "C^%d" % cp)
        m = format_monomial(rg, mono)
        if m:
            body.append(m)
        mono_s = "*".join(body)
        if not mono_s:
            s = str(c)
            neg = s.startswith("-") and c.is_monomial()
            parts.append((neg, s[1:] if neg else (s if c.is_monomial() else "(%s)" % s)))
            continue
        if c.is_monomial():
            (e, q), = c.items()
            neg = q < 0
            mag = Scalar.mono(-q if neg else q, e)
            parts.append((neg, mono_s if mag == ONE else "%s*%s" % (mag, mono_s)))
        else:
            parts.append((False, "(%s)*%s" % (c, mono_s)))
    out = []
    for i, (neg, body) in enumerate(parts):
        if i == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    s = "".join(out) or "0"
    if x.level is not None:
        s += " mod J(%s)" % _half(x.level)
    return s


def _half(g):
    return str(g // 2) if g % 2 == 0 else "%d/2" % g


# --------------------------------------------------------------------------
# products

def product_level(x, y):
    """Certified level of x*y given the operands' levels."""
    rg = x.ring
    lvl = y.level
    if x.level is not None:
        if y.central:
            lvl = _lmin(lvl, x.level)
        else:
            for (mono, _) in y.terms:
                r = rg.right_level(x.level, mono)
                if r is None:
                    raise ResultLevelEmpty("product cannot be certified at any level")
                lvl = _lmin(lvl, r)
            if not y.terms:
                lvl = _lmin(lvl, x.level)
    return lvl


def straighten_mul(x, y):
    _same(x, y)
    rg = x.ring
    lvl = product_level(x, y)
    out = {}
    for (m1, c1), s1 in x.terms.items():
        for (m2, c2), s2 in y.terms.items():
            s = s1 * s2
            for (m, cc), ss in rg.mono_mul(m1, m2).items():
                if lvl is not None and m and m[-1][0] >= lvl:
                    continue
                _addto(out, (m, c1 + c2 + cc), s * ss)
    central = x.central and y.central
    if y.central and x.level is not None:
        # the product was certified using centrality modulo C + 1/2
        return EnvElement(x.algebra, out, lvl, central).at_critical()
    return EnvElement(x.algebra, out, lvl, central)


def commutator(x, y):
    return straighten_mul(x, y) - straighten_mul(y, x)


def word(algebra, gens):
    """Ordered form of a product of generators (exact)."""
    rg = RINGS[algebra]
    out = {}
    for (m, cp), s in rg.word(gens).items():
        _addto(out, (m, cp), s)
    return EnvElement(algebra, out)


# --------------------------------------------------------------------------
# normal ordering and Sugawara operators

def _casimir_int():
    return [(ALPHA[p], ALPHA[q], c) for p, q, c in casimir_pairs()]


def _pair_terms(rg, a, ga, b, gb, coeff, out, level):
    """Add coeff * :(J^a r_ga)(J^b r_gb): to out, dropping J(level) terms."""
    first, second = ((ga, a), (gb, b)) if ga <= gb else ((gb, b), (ga, a))
    if level is not None and second[0] >= level:
        return
    for (m, cp), s in rg.insert((first,), second):
        if level is not None and m and m[-1][0] >= level:
            continue
        _addto(out, (m, cp), coeff * s)


def normal_pair(x1, f1, x2, f2, algebra="TWO"):
    """:(x1 f1)(x2 f2): extended bilinearly; functions may be TwoVarFun or
    r-basis dicts keyed by doubled index."""
    rg = RINGS[algebra]
    w1 = rg.fun_to_w(f1)
    w2 = rg.fun_to_w(f2)
    l1 = {x1: ONE} if isinstance(x1, str) else x1.c
    l2 = {x2: ONE} if isinstance(x2, str) else x2.c
    out = {}
    for n1, c1 in l1.items():
        for g1, d1 in w1.items():
            for n2, c2 in l2.items():
                for g2, d2 in w2.items():
                    _pair_terms(rg, ALPHA[n1], g1, ALPHA[n2], g2, c1 * d1 * c2 * d2, out, None)
    return EnvElement(algebra, out)


def sugawara1(k, level, algebra="ONE"):
    """sum_n :J^alpha t^n J_alpha t^(k-n-1): modulo J(level) (level doubled)."""
    rg = RINGS[algebra]
    out = {}
    cas = _casimir_int()
    lo = k - 1 - (level // 2) - 2
    hi = level // 2 + 1
    for n in range(lo, hi + 1):
        m = k - 1 - n
        if 2 * max(n, m) >= level:
            continue
        for a, b, c in cas:
            _pair_terms(rg, a, 2 * n, b, 2 * m, Scalar.const(c), out, level)
    return EnvElement(algebra, out, level)


@lru_cache(maxsize=None)
def _sug2_partner(n2, k2):
    """z_{-n-1/2} w_k in the w-basis, as a tuple of (doubled index, Scalar)."""
    prod = series.z(-n2 - 1) * series.w(k2)
    return tuple(sorted(series.basis_to_w(series.to_basis(prod)).items()))


def sugawara2(k2, level):
    """sum_n :J^alpha w_n J_alpha z_{-n-1/2} w_k: modulo J(level), in TWO."""
    rg = RINGS["TWO"]
    out = {}
    cas = _casimir_int()
    for n2 in range(k2 - level - 4, level):
        for g2, d in _sug2_partner(n2, k2):
            if max(n2, g2) >= level:
                continue
            for a, b, c in cas:
                _pair_terms(rg, a, n2, b, g2, d * c, out, level)
    return EnvElement("TWO", out, level)


def lstorto(k2, level):
    """Rescaled two-point Sugawara operators."""
    if k2 % 4 == 1:
        # k = 2j + 1/2
        j = (k2 - 1) // 4
        s1 = sugawara2(4 * j + 2, level)
        s2 = sugawara2(k2, level)
        return (s1 - s2.scale(Scalar.mono(1, 1))).scale(Scalar.mono(1, -2 * j - 2))
    ceil_k = -((-k2) // 2)
    return sugawara2(k2, level).scale(Scalar.mono(1, -ceil_k))


def central(x):
    """Mark an element as central (valid modulo C + 1/2)."""
    return x.at_critical().copy(central=True)


# --------------------------------------------------------------------------
# specialisation, expansion, derivations

def specialize_env(x):
    if x.algebra != "TWO":
        raise ValueError("specialisation starts from TWO")
    out = {}
    for (mono, cp), c in x.terms.items():
        q = c.specialize_a0()
        if not q:
            continue
        _addto(out, (tuple((2 * g, a) for g, a in mono), cp), Scalar.const(q))
    lvl = None if x.level is None else 2 * x.level
    return EnvElement("ONE", out, lvl, x.central)


@lru_cache(maxsize=None)
def _expand_gen(g, level):
    """E-image of r_g (TWO) in TS, truncated below doubled level."""
    f = series.w(g)
    order_t = (level - 1 + 1) // 2  # t^n kept iff 2n+1 < level
    order_s = (level + 1) // 2      # s^n kept iff 2n < level
    et = series.expand(f, "t", order_t)
    es = series.expand(f, "s", order_s)
    out = {}
    for n, c in et.terms.items():
        if 2 * n + 1 < level:
            _addto(out, 2 * n + 1, c)
    for n, c in es.terms.items():
        if 2 * n < level:
            _addto(out, 2 * n, c)
    return tuple(sorted(out.items()))


def expand_gen(alpha, g, level):
    a = ALPHA[alpha] if isinstance(alpha, str) else alpha
    return EnvElement("TS", {(((h, a),), 0): c for h, c in _expand_gen(g, level)}, level)


def _expand_at(x, work):
    out = None
    for (mono, cp), c in x.terms.items():
        acc = EnvElement("TS", {((), cp): c})
        for g, a in mono:
            acc = straighten_mul(acc, expand_gen(a, g, work))
        out = acc if out is None else out + acc
    if out is None:
        out = EnvElement("TS", {}, work)
    return out


def expand_env(x, level):
    """Image under the expansion map, valid modulo J_ts(min(level, x.level))."""
    if x.algebra != "TWO":
        raise ValueError("expansion starts from TWO")
    target = _lmin(level, x.level)
    work = target
    for _ in range(40):
        try:
            y = _expand_at(x, work)
        except ResultLevelEmpty:
            work += 2
            continue
        got = target if y.level is None else y.level
        if got >= target:
            return y.truncate(target)
        work += target - got
    raise ResultLevelEmpty("could not certify expansion at level %s" % target)


def derivation_act(field, x):
    """Action of the derivation ``field * d/dvariable`` on x."""
    rg = x.ring
    fw = rg.fun_to_w(field)
    if not fw:
        return EnvElement(x.algebra, {}, x.level)
    shift = min(p - rg.drop(p) for p in fw) - 2
    lvl = x.level
    if lvl is not None:
        lvl = min(lvl, lvl + shift)
    out = {}
    for (mono, cp), c in x.terms.items():
        for i, (g, a) in enumerate(mono):
            new = {}
            for g1, c1 in rg.deriv(g):
                for p, cf in fw.items():
                    for g2, c2 in rg.mul(p, g1):
                        _addto(new, g2, c1 * cf * c2)
            for g2, c2 in new.items():
                word_ = mono[:i] + ((g2, a),) + mono[i + 1:]
                for (m, cc), s in rg.word(word_).items():
                    if lvl is not None and m and m[-1][0] >= lvl:
                        continue
                    _addto(out, (m, cp + cc), c * c2 * s)
    return EnvElement(x.algebra, out, lvl)


# --------------------------------------------------------------------------
# filtrations

def jdeg(mono):
    """J-degree of an ordered monomial, largest index first (doubled)."""
    return tuple(sorted((g for g, _ in mono), reverse=True))


def jdeg_lt(x):
    """(PBW degree, J-degree, leading term) of a nonzero element."""
    if x.is_zero():
        raise ZeroElement("zero element has no leading term")
    m = x.degree()
    top = [k for k in x.terms if len(k[0]) == m]
    best = min(jdeg(mono) for mono, _ in top)
    lt = {k: x.terms[k] for k in top if jdeg(k[0]) == best}
    return m, best, EnvElement(x.algebra, lt)


def embed_one(x, var):
    """Embed an element of a one-variable algebra into TS via t or s."""
    off = 1 if var == "t" else 0
    out = {}
    for (mono, cp), c in x.terms.items():
        _addto(out, (tuple((g + off, a) for g, a in mono), cp), c)
    lvl = None if x.level is None else x.level + off
    return EnvElement("TS", out, lvl, x.central)


def parse_monomial(algebra, text):
    rg = RINGS[algebra]
    gens = []
    for chunk in text.strip()[1:-1].split(")("):
        alpha, fam, n = chunk.split(":")
        gens.append((rg.from_label(fam, int(n)), ALPHA[alpha]))
    return tuple(gens)
