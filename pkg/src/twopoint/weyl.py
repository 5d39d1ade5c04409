"""Depth-truncated Weyl modules induced from tensor products of sl(2) irreps.

A vector is a finite combination of ``(monomial, weights)`` where the
monomial is an ordered tuple of generators ``(g, alpha)`` with ``g < 0`` and
``weights`` is a tuple of weight-basis indices, one per tensor factor.

In ``V^lam`` the basis is ``v_0 .. v_lam`` with ``f v_i = v_{i+1}``,
``h v_i = (lam - 2i) v_i`` and ``e v_i = i (lam - i + 1) v_{i-1}``.
"""

from fractions import Fraction
from functools import lru_cache

from .env import ALPHA, CRITICAL, RINGS, _addto, sugawara1, sugawara2
from .errors import DepthOverflow, InsufficientLevel
from .liealg import BASIS
from .scalar import ONE, ZERO, Scalar


def irrep_action(alpha, lam, i):
    """Image of the weight vector v_i under e, h or f, as (index, coeff) or None."""
    name = BASIS[alpha] if isinstance(alpha, int) else alpha
    if name == "h":
        return i, Fraction(lam - 2 * i)
    if name == "f":
        return (i + 1, Fraction(1)) if i < lam else None
    return (i - 1, Fraction(i * (lam - i + 1))) if i > 0 else None


class WeylModule:
    """Induced module over the TWO algebra (weights (lam, mu)) or over the
    one-variable algebra ONE (any list of weights, all at t = 0)."""

    def __init__(self, weights, algebra="TWO", depth=2):
        self.weights = tuple(weights)
        if algebra == "TWO" and len(self.weights) != 2:
            raise ValueError("the two-point module needs two weights")
        if algebra not in ("TWO", "ONE"):
            raise ValueError("unsupported algebra %r" % algebra)
        self.algebra = algebra
        self.ring = RINGS[algebra]
        self.depth = depth
        self._cache = {}

    # weight space ------------------------------------------------------------
    def weight_basis(self):
        out = [()]
        for lam in self.weights:
            out = [w + (i,) for w in out for i in range(lam + 1)]
        return out

    def _eval_rule(self, g):
        """Tensor factors hit by r_g at the evaluation points, with coefficients."""
        if g == 0:
            return [(k, ONE) for k in range(len(self.weights))]
        if self.algebra == "TWO" and g == 1:
            return [(0, Scalar.mono(-1, 1))]
        return []

    def _act_weights(self, alpha, g, w):
        out = {}
        for k, c in self._eval_rule(g):
            r = irrep_action(alpha, self.weights[k], w[k])
            if r is None or not r[1]:
                continue
            nw = w[:k] + (r[0],) + w[k + 1:]
            _addto(out, ((), nw), c * r[1])
        return out

    # generator action --------------------------------------------------------
    def _act(self, x, mono, w):
        key = (x, mono, w)
        r = self._cache.get(key)
        if r is not None:
            return r
        g, alpha = x
        out = {}
        if not mono:
            if g < 0:
                if self.depth < 1:
                    raise DepthOverflow("depth bound exceeded")
                out = {((x,), w): ONE}
            else:
                out = self._act_weights(alpha, g, w)
        elif g < 0 and x <= mono[0]:
            if len(mono) + 1 > self.depth:
                raise DepthOverflow("depth bound exceeded")
            out = {((x,) + mono, w): ONE}
        else:
            y, rest = mono[0], mono[1:]
            # x y rest = y (x rest) + [x, y] rest
            for (m1, w1), c1 in self._act(x, rest, w).items():
                for k, c2 in self._act(y, m1, w1).items():
                    _addto(out, k, c1 * c2)
            gens, cen = self.ring.gen_bracket(x, y)
            for gg, s in gens:
                for k, c2 in self._act(gg, rest, w).items():
                    _addto(out, k, s * c2)
            if cen:
                _addto(out, (rest, w), cen * CRITICAL)
        self._cache[key] = out
        return out

    def act_gen(self, alpha, g, vec):
        """Action of the generator J^alpha r_g on a vector (dict)."""
        if isinstance(alpha, str):
            alpha = ALPHA[alpha]
        out = {}
        for (mono, w), c in vec.items():
            for k, c2 in self._act((g, alpha), mono, w).items():
                _addto(out, k, c * c2)
        return out

    def act_lie_fun(self, lie, fun, vec):
        """Action of ``lie (x) fun`` (an Sl2Elt or name and a function)."""
        out = {}
        lie_c = {lie: ONE} if isinstance(lie, str) else lie.c
        for name, cl in lie_c.items():
            for g, cf in self.ring.fun_to_w(fun).items():
                for k, c in self.act_gen(name, g, vec).items():
                    _addto(out, k, c * cl * cf)
        return out

    def check_level(self, x, vec):
        for (mono, _), c in vec.items():
            if x.level is None:
                continue
            r = self.ring.right_level(x.level, mono)
            if r is None or r < 2:
                raise InsufficientLevel("element level %s too low for this vector" % x.level)

    def act_env(self, x, vec):
        """Action of an EnvElement (C acts by -1/2)."""
        if x.algebra != self.algebra:
            raise ValueError("algebra mismatch")
        self.check_level(x, vec)
        out = {}
        for (mono, cp), c in x.terms.items():
            cur = dict(vec)
            for g, alpha in reversed(mono):
                cur = self.act_gen(alpha, g, cur)
                if not cur:
                    break
            s = c * CRITICAL ** cp
            for k, c2 in cur.items():
                _addto(out, k, s * c2)
        return out

    def degree0(self, x):
        """Matrix of x on the degree-zero part, projected back to it.

        Rows and columns are indexed by weight_basis()."""
        basis = self.weight_basis()
        pos = {w: i for i, w in enumerate(basis)}
        mat = [[ZERO] * len(basis) for _ in basis]
        for j, w in enumerate(basis):
            img = self.act_env(x, {((), w): ONE})
            for (mono, w2), c in img.items():
                if not mono:
                    mat[pos[w2]][j] = c
        return mat


def vector(weights):
    return {((), tuple(weights)): ONE}


@lru_cache(maxsize=None)
def _sug2(k2, level):
    return sugawara2(k2, level)


def degree0_matrix(k2, lam, mu, level=2):
    """Degree-zero matrix of the two-point Sugawara operator with index k2/2."""
    return WeylModule((lam, mu), "TWO", depth=2).degree0(_sug2(k2, level))


def degree0_matrix_one(k, weights, level=2):
    """Degree-zero matrix of the one-variable Sugawara operator of index k."""
    return WeylModule(weights, "ONE", depth=2).degree0(sugawara1(k, level))


# tensor-product decomposition ---------------------------------------------

def diagonal_action(alpha, weights):
    """Matrix of the diagonal action of e, h or f on the weight basis."""
    mod = WeylModule(weights, "ONE", depth=0)
    basis = mod.weight_basis()
    pos = {w: i for i, w in enumerate(basis)}
    mat = [[Fraction(0)] * len(basis) for _ in basis]
    for j, w in enumerate(basis):
        for k, lam in enumerate(weights):
            r = irrep_action(alpha, lam, w[k])
            if r is not None:
                nw = w[:k] + (r[0],) + w[k + 1:]
                mat[pos[nw]][j] += r[1]
    return mat


def _nullspace(rows, n):
    """Basis of the rational nullspace of a matrix given as a list of rows."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        rows[r] = [v / p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    out = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        out.append(vec)
    return out


def clebsch_components(lam, mu):
    """[(nu, highest-weight vector as {(i, j): Fraction})] for nu descending."""
    basis = WeylModule((lam, mu), "ONE", depth=0).weight_basis()
    e = diagonal_action("e", (lam, mu))
    out = []
    for j in range(min(lam, mu) + 1):
        nu = lam + mu - 2 * j
        idx = [k for k, w in enumerate(basis) if w[0] + w[1] == j]
        sub = [[e[r][c] for c in idx] for r in range(len(basis))]
        ns = _nullspace(sub, len(idx))
        if len(ns) != 1:
            raise ArithmeticError("unexpected highest-weight multiplicity")
        vec = ns[0]
        out.append((nu, {basis[idx[k]]: vec[k] for k in range(len(idx)) if vec[k]}))
    return out


def clebsch_basis(lam, mu):
    """Columns: for each component, hw vector and its f-descendants.

    Returns (list of nu per column, matrix with those columns)."""
    basis = WeylModule((lam, mu), "ONE", depth=0).weight_basis()
    pos = {w: i for i, w in enumerate(basis)}
    f = diagonal_action("f", (lam, mu))
    cols, labels = [], []
    for nu, hw in clebsch_components(lam, mu):
        v = [Fraction(0)] * len(basis)
        for w, c in hw.items():
            v[pos[w]] = c
        for _ in range(nu + 1):
            cols.append(v)
            labels.append(nu)
            v = [sum(f[r][c] * v[c] for c in range(len(v))) for r in range(len(v))]
    mat = [[cols[c][r] for c in range(len(cols))] for r in range(len(basis))]
    return labels, mat


def invert(m):
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


def matmul(x, y):
    n, k, m = len(x), len(y), len(y[0]) if y else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ZERO
            for t in range(k):
                if x[i][t] and y[t][j]:
                    acc = acc + Scalar.coerce(x[i][t]) * y[t][j]
            row.append(acc)
        out.append(row)
    return out


def block_scalars(mat, lam, mu):
    """Scalars of mat on the isotypic components, or None if not block-scalar."""
    labels, p = clebsch_basis(lam, mu)
    conj = matmul(matmul(invert(p), mat), p)
    out = {}
    for i, nu in enumerate(labels):
        for j in range(len(labels)):
            if i != j and conj[i][j]:
                return None
        d = conj[i][i]
        if out.setdefault(nu, d) != d:
            return None
    return out


def matrix_json(mat, basis):
    labels = ["(%s)" % ",".join(str(i) for i in w) for w in basis]
    return {"rows": labels, "cols": labels,
            "entries": [[str(c) for c in row] for row in mat]}
