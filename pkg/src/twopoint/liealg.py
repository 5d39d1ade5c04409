"""sl(2): structure constants, Killing form, dual basis, affine bracket."""

from fractions import Fraction

from .scalar import ONE, ZERO, Scalar
from .series import OneVarSeries, TwoVarFun, deriv2, res2

BASIS = ("e", "h", "f")
ORDER = {"e": 0, "h": 1, "f": 2}

# [x, y] on basis elements, as {generator: integer}
_BRACKET = {
    ("h", "e"): {"e": 2},
    ("e", "h"): {"e": -2},
    ("h", "f"): {"f": -2},
    ("f", "h"): {"f": 2},
    ("e", "f"): {"h": 1},
    ("f", "e"): {"h": -1},
}


class Sl2Elt:
    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = {}
        for k, val in (coeffs or {}).items():
            if k not in ORDER:
                raise ValueError("unknown sl2 generator %r" % k)
            val = Scalar.coerce(val)
            if val:
                self.c[k] = val

    @classmethod
    def gen(cls, name, coeff=ONE):
        return cls({name: coeff})

    def __add__(self, other):
        d = dict(self.c)
        for k, val in other.c.items():
            d[k] = d.get(k, ZERO) + val
        return Sl2Elt(d)

    def __neg__(self):
        return Sl2Elt({k: -val for k, val in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = Scalar.coerce(s)
        return Sl2Elt({k: val * s for k, val in self.c.items()})

    __rmul__ = scale

    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        return isinstance(other, Sl2Elt) and self.c == other.c

    __hash__ = None

    def __repr__(self):
        if not self.c:
            return "0"
        return " + ".join("(%s)*%s" % (self.c[k], k) for k in BASIS if k in self.c)


def bracket_basis(x, y):
    return _BRACKET.get((x, y), {})


def bracket(x, y):
    out = {}
    for a, ca in x.c.items():
        for b, cb in y.c.items():
            for g, n in bracket_basis(a, b).items():
                out[g] = out.get(g, ZERO) + ca * cb * n
    return Sl2Elt(out)


def ad_matrix(x):
    """Matrix of ad(x) in the basis e, h, f (columns are images)."""
    m = [[ZERO] * 3 for _ in range(3)]
    for j, b in enumerate(BASIS):
        img = bracket(x, Sl2Elt.gen(b))
        for i, g in enumerate(BASIS):
            m[i][j] = img.c.get(g, ZERO)
    return m


def killing(x, y):
    """Trace of ad(x) ad(y)."""
    mx, my = ad_matrix(x), ad_matrix(y)
    tr = ZERO
    for i in range(3):
        for k in range(3):
            tr = tr + mx[i][k] * my[k][i]
    return tr


_GRAM = None


def killing_basis(a, b):
    global _GRAM
    if _GRAM is None:
        _GRAM = {(p, q): killing(Sl2Elt.gen(p), Sl2Elt.gen(q)).specialize_a0()
                 for p in BASIS for q in BASIS}
    return _GRAM[(a, b)]


def _invert3(m):
    # Gauss-Jordan over Fractions
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


_DUAL = None


def dual_basis():
    """Pairs (J^alpha, J_alpha) with killing(J^alpha, J_beta) = delta.

    J_alpha is returned as a map generator -> Fraction.
    """
    global _DUAL
    if _DUAL is None:
        g = [[killing_basis(p, q) for q in BASIS] for p in BASIS]
        inv = _invert3(g)
        _DUAL = tuple((p, {q: inv[j][i] for j, q in enumerate(BASIS) if inv[j][i]})
                      for i, p in enumerate(BASIS))
    return _DUAL


def casimir_pairs():
    """Flattened Casimir tensor: list of (alpha, beta, coefficient) with
    sum_alpha J^alpha (x) J_alpha = sum coefficient * alpha (x) beta."""
    out = []
    for p, dual in dual_basis():
        for q, c in sorted(dual.items(), key=lambda kv: ORDER[kv[0]]):
            out.append((p, q, c))
    return out


class AffineTerm:
    """``lie (x) fun + central * C``."""

    __slots__ = ("lie", "fun", "central")

    def __init__(self, lie, fun, central=ZERO):
        self.lie = lie
        self.fun = fun
        self.central = Scalar.coerce(central)

    def __repr__(self):
        return "AffineTerm(%r, %s, C*%s)" % (self.lie, self.fun, self.central)


def _residue(tag, f):
    if tag == "res2":
        return res2(f)
    if tag in ("res_t", "res_s"):
        want = "t" if tag == "res_t" else "s"
        if f.variable != want:
            raise ValueError("residue tag %s does not match series in %s" % (tag, f.variable))
        return f.res()
    if tag == "res_ts":
        ft, fs = f
        return ft.res() + fs.res()
    raise ValueError("unknown residue tag %r" % tag)


def _deriv(tag, f):
    if tag == "res2":
        return deriv2(f)
    if tag == "res_ts":
        return (f[0].deriv(), f[1].deriv())
    return f.deriv()


def _mul(tag, f, g):
    if tag == "res_ts":
        return (f[0] * g[0], f[1] * g[1])
    return f * g


def _check(tag, f):
    kinds = {"res2": TwoVarFun, "res_t": OneVarSeries, "res_s": OneVarSeries}
    if tag == "res_ts":
        ok = isinstance(f, tuple) and len(f) == 2
    else:
        ok = isinstance(f, kinds.get(tag, ()))
    if not ok:
        raise ValueError("function type does not match residue tag %r" % tag)


def affine_bracket(x, y, residue="res2"):
    """[x f, y g] = [x, y] f g + Res(f' g) kappa(x, y) C.

    Central parts of the inputs bracket to zero.
    """
    _check(residue, x.fun)
    _check(residue, y.fun)
    lie = bracket(x.lie, y.lie)
    prod = _mul(residue, x.fun, y.fun)
    cen = _residue(residue, _mul(residue, _deriv(residue, x.fun), y.fun)) * killing(x.lie, y.lie)
    out = []
    if not lie.is_zero():
        out.append(AffineTerm(lie, prod))
    if cen:
        out.append(AffineTerm(Sl2Elt(), None, cen))
    return out
