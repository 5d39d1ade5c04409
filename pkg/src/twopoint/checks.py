"""Verification suites run by ``twopoint verify``.

Every suite is a list of cases; a case is ``(name, params)`` and is checked
by ``run_case(suite, params)``, which returns ``(ok, expected, actual)`` as
strings.  Cases are plain data so they can be farmed out to worker processes.
"""

import random
from fractions import Fraction

from . import liealg, opers, series, weyl
from .env import (EnvElement, _expand_gen, central, commutator, derivation_act,
                  expand_env, format_monomial, jdeg, specialize_env, straighten_mul, sugawara1,
                  sugawara2)
from .scalar import ONE, ZERO, Scalar, gen_binomial
from .series import TwoVarFun

A1 = Scalar.mono(1, 1)

DEFAULTS = {
    "quick": {"kmax": 2, "level": 3, "max_weight": 3, "ranges": "acceptance"},
    "full": {"kmax": 3, "level": 3, "max_weight": 4, "ranges": "extended"},
}


# --------------------------------------------------------------------------
# residues

def _res_formula(i, j):
    return Scalar.mono(gen_binomial(i, -j - 1) + (-1) ** (i + j + 1) * gen_binomial(j, -i - 1),
                       i + j + 1)


def _res_deriv_table(m, n):
    d = lambda p, q: 1 if p == q else 0
    return [
        ("u_m*u_n'", series.u(m) * series.deriv2(series.u(n)), Scalar.const(2 * n * d(m, -n))),
        ("v_m*v_n'", series.v(m) * series.deriv2(series.v(n)),
         Scalar.const((2 * n + 1) * d(m, -1 - n)) + Scalar.mono(n * d(m, -n), 2)),
        ("v_m*u_n'", series.v(m) * series.deriv2(series.u(n)), Scalar.mono(-n * d(m, -n), 1)),
        ("y_m*u_n'", series.y(m) * series.deriv2(series.u(n)), Scalar.mono(n * d(m, -n), 1)),
    ]


def case_residues(p):
    bad = []
    if p["kind"] == "monomial":
        i = p["i"]
        for j in range(-6, 7):
            got = series.res2(TwoVarFun.monomial(i, j))
            if got != _res_formula(i, j):
                bad.append("t^%d s^%d: %s vs %s" % (i, j, got, _res_formula(i, j)))
    else:
        m = p["m"]
        for n in range(-6, 7):
            for name, f, want in _res_deriv_table(m, n):
                got = series.res2(f)
                if got != want:
                    bad.append("%s n=%d: %s vs %s" % (name, n, got, want))
    return not bad, "formula", "; ".join(bad) or "formula"


# --------------------------------------------------------------------------
# duality and reconstruction

def _random_fun(rng, size=4, span=3):
    terms = {}
    for _ in range(size):
        i, j = rng.randint(-span, span), rng.randint(-span, span)
        terms[(i, j)] = Scalar.mono(Fraction(rng.randint(-5, 5), rng.randint(1, 4)), rng.randint(-1, 1))
    return TwoVarFun(terms)


def reconstruct(f, bound=14):
    out = TwoVarFun()
    for n in range(-bound, bound + 1):
        c1 = series.res2(f * series.u(n))
        if c1:
            out = out + series.y(-n - 1, c1)
        c2 = series.res2(f * series.v(n))
        if c2:
            out = out + series.x(-n - 1, c2)
    return out


def case_duality(p):
    if p["kind"] == "pairing":
        n = p["n"]
        bad = []
        for m in range(-8, 9):
            d = ONE if n == m else ZERO
            checks = [
                (series.u(n) * series.x(m), ZERO),
                (series.u(n) * series.y(-m - 1), d),
                (series.v(n) * series.x(-m - 1), d),
                (series.v(n) * series.y(m), ZERO),
            ]
            for k, (f, want) in enumerate(checks):
                if series.res2(f) != want:
                    bad.append("m=%d identity %d" % (m, k + 1))
        return not bad, "delta", "; ".join(bad) or "delta"
    rng = random.Random(p["seed"] * 1000 + p["index"])
    f = _random_fun(rng)
    g = reconstruct(f)
    return g == f, series.format_fun(f), series.format_fun(g)


# --------------------------------------------------------------------------
# Casimir

def case_casimir(p):
    pairs = liealg.dual_basis()
    gen = liealg.Sl2Elt.gen
    bad = []
    if p["kind"] == "killing":
        table = {("e", "f"): 4, ("h", "h"): 8, ("e", "e"): 0}
        for (x, y), want in table.items():
            if liealg.killing(gen(x), gen(y)) != want:
                bad.append("kappa(%s,%s)" % (x, y))
        for q, dual in pairs:
            dv = liealg.Sl2Elt(dual)
            for r in liealg.BASIS:
                want = 1 if r == q else 0
                if liealg.killing(gen(r), dv) != want:
                    bad.append("dual %s/%s" % (q, r))
    elif p["kind"] == "identities":
        for xn in liealg.BASIS:
            x = gen(xn)
            acc = liealg.Sl2Elt()
            kap = ZERO
            tensor = {}
            for q, dual in pairs:
                jq, jd = gen(q), liealg.Sl2Elt(dual)
                acc = acc + liealg.bracket(jq, liealg.bracket(jd, x))
                kap = kap + liealg.killing(liealg.bracket(jq, x), jd)
                for l1, l2 in ((liealg.bracket(jq, x), jd), (jq, liealg.bracket(jd, x))):
                    for b1, c1 in l1.c.items():
                        for b2, c2 in l2.c.items():
                            tensor[(b1, b2)] = tensor.get((b1, b2), ZERO) + c1 * c2
            if acc != x:
                bad.append("double bracket %s" % xn)
            if kap:
                bad.append("kappa sum %s" % xn)
            if any(tensor.values()):
                bad.append("tensor %s" % xn)
    else:
        n = p["n"]
        d = lambda i, j: 1 if i == j else 0
        for m in range(-4, 5):
            table = [
                (series.u(n), series.u(m), Scalar.const(-3 * n * d(m, -n))),
                (series.u(n), series.v(m), Scalar.mono(Fraction(3, 2) * n * d(m, -n), 1)),
                (series.u(n), series.y(m), Scalar.mono(Fraction(-3, 2) * n * d(m, -n), 1)),
                (series.v(n), series.v(m),
                 Scalar.const(Fraction(-3, 2) * (2 * n + 1) * d(m, -1 - n))
                 + Scalar.mono(Fraction(-3, 2) * n * d(m, -n), 2)),
            ]
            for k, (f, g, want) in enumerate(table):
                got = casimir_bracket_central(f, g)
                if got != want:
                    bad.append("m=%d row %d: %s vs %s" % (m, k + 1, got, want))
    return not bad, "identities hold", "; ".join(bad) or "identities hold"


def casimir_bracket_central(f, g):
    """Central part of sum_alpha [J^alpha f, J_alpha g] at C = -1/2.

    Returns None if a non-central part survives."""
    lie = liealg.Sl2Elt()
    total = ZERO
    for q, dual in liealg.dual_basis():
        x = liealg.AffineTerm(liealg.Sl2Elt.gen(q), f)
        y = liealg.AffineTerm(liealg.Sl2Elt(dual), g)
        for term in liealg.affine_bracket(x, y):
            if term.fun is None:
                total = total + term.central
            else:
                lie = lie + term.lie.scale(ONE)
    if not lie.is_zero():
        return None
    return total * Fraction(-1, 2)


# --------------------------------------------------------------------------
# P_lambda

def weighted_monomials(lam):
    """All monomials in z_{-1}..z_{lam-2} of weighted degree lam + 1."""
    target = lam + 1
    idx = list(range(-1, lam - 1))
    out = []

    def rec(pos, rem, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        if pos == len(idx):
            return
        i = idx[pos]
        dg = i + 2
        for e in range(rem // dg, -1, -1):
            rec(pos + 1, rem - e * dg, acc + ([(opers.CoordVar("Z", i), e)] if e else []))

    rec(0, target, [])
    return out


def case_plambda(p):
    lam = p["lam"]
    P = opers.p_lambda(lam)
    bad = []
    if not P.is_homogeneous(lam + 1):
        bad.append("not homogeneous")
    support = set(P.terms)
    want = set(weighted_monomials(lam))
    if support != want:
        bad.append("support %d of %d" % (len(support & want), len(want)))
    fixed = {1: "z[-1]^2", 2: "-1/4*z[-1]^3 + z[-1]*z[0]"}
    if lam in fixed and str(P) != fixed[lam]:
        bad.append("value %s" % P)
    return not bad, "homogeneous, full support", "; ".join(bad) or "homogeneous, full support"


# --------------------------------------------------------------------------
# f_lambda

def case_flambda(p):
    lam, mu = p["lam"], p["mu"]
    f = opers.f_lambda(lam, mu)
    z = opers.CoordVar("Z", -2)
    uni = f.univariate(z)
    lead = uni[max(uni)]
    expected = opers.poly_from_roots(("Z", -2), opers.f_lambda_roots(lam, mu), lead)
    bad = []
    if f != expected or max(uni) != lam + 1:
        bad.append("not the expected product")
    other = opers.f_lambda(lam, lam)
    ou = other.univariate(z)
    if ou[max(ou)] != lead:
        bad.append("leading coefficient depends on mu")
    if lam >= 1:
        P = opers.p_lambda(lam)
        cz = P.coefficient(((opers.CoordVar("Z", -1), lam + 1),))
        if lead != -cz * (-1) ** (lam + 1):
            bad.append("leading coefficient %s" % lead)
    return not bad, str(expected), str(f)


# --------------------------------------------------------------------------
# centrality

def _gen_fun(kind, m):
    return series.u(m) if kind == "u" else series.v(m)


def central_commutator(k2, alpha, fun, target, start=None):
    """Commutator at C = -1/2, computed at a working level certified >= target."""
    work = start or (target + 6)
    y = EnvElement.from_lie_fun("TWO", alpha, fun)
    for _ in range(10):
        c = commutator(sugawara2(k2, work), y)
        if c.level is not None and c.level >= target:
            return c.at_critical().truncate(target)
        work += 2
    raise RuntimeError("level certification failed")


def case_centrality(p):
    k2, level2 = p["k2"], p["level2"]
    bad = []
    for alpha in ("e", "h", "f"):
        for kind in ("u", "v"):
            for m in range(-2, 3):
                c = central_commutator(k2, alpha, _gen_fun(kind, m), level2)
                if not c.is_zero():
                    bad.append("%s %s_%d" % (alpha, kind, m))
    return not bad, "0", "; ".join(bad) or "0"


def generic_identity(k2, m, level=12):
    """[S_k, e u_m] - e (-2C - 1) w_k u_m' at symbolic C; returns the difference."""
    y = EnvElement.from_lie_fun("TWO", "e", series.u(m))
    lhs = commutator(sugawara2(k2, level), y)
    f = series.w(k2) * series.deriv2(series.u(m))
    base = EnvElement.from_lie_fun("TWO", "e", f)
    rhs = (base.scale(-2) * EnvElement.C("TWO")) - base
    return (lhs - rhs).truncate(lhs.level)


def case_generic(p):
    d = generic_identity(p["k2"], p["m"])
    return d.is_zero(), "0", str(d) if not d.is_zero() else "0"


# --------------------------------------------------------------------------
# specialisation

def case_specialization(p):
    k2, n2, off = p["k2"], p["level2"], p["offset"]
    lhs = specialize_env(sugawara2(k2, n2))
    rhs = sugawara1(k2 + off, 2 * n2)
    ok = lhs.equal_mod(rhs)
    return ok, str(rhs), str(lhs)


# --------------------------------------------------------------------------
# expansion congruences

def pairsum(alg, g1, g2, swap=False):
    """sum_alpha J^alpha r_g1 J_alpha r_g2 (swap: J_alpha r_g1 J^alpha r_g2)."""
    out = EnvElement(alg, {})
    for pn, qn, c in liealg.casimir_pairs():
        x, y = (qn, pn) if swap else (pn, qn)
        out = out + (EnvElement.gen(alg, x, g1) * EnvElement.gen(alg, y, g2)).scale(c)
    return out


def in_window(diff, target):
    """Membership in the degree <= 2 window of monomials with J-degree > target."""
    if diff.level is not None and diff.level <= target[0]:
        return "level too low"
    for (mono, _), c in diff.terms.items():
        if len(mono) > 2:
            return "degree above 2"
        if len(mono) == 2 and not jdeg(mono) > target:
            return "term %s" % format_monomial(diff.ring, mono)
    return None


def expansion_case(kind, j, level=10):
    if kind == "one-even":
        d = sugawara1(2 * j, 12) - pairsum("ONE", 2 * j - 2, 2 * j, swap=True).scale(2)
        return in_window(d, (2 * j, 2 * j - 2))
    if kind == "one-odd":
        d = sugawara1(2 * j + 1, 12) - pairsum("ONE", 2 * j, 2 * j, swap=True)
        return in_window(d, (2 * j, 2 * j))
    if kind == "two-1":
        e = expand_env(sugawara2(4 * j, level), level)
        d = e - pairsum("TS", 2 * j - 2, 2 * j, swap=True).scale(A1 ** (2 * j) * 2)
        return in_window(d, (2 * j, 2 * j - 2))
    if kind == "two-2":
        e = expand_env(sugawara2(4 * j + 2, level), level)
        d = e - pairsum("TS", 2 * j, 2 * j).scale(A1 ** (2 * j + 1))
        return in_window(d, (2 * j + 1, 2 * j - 1))
    if kind == "two-3":
        e = expand_env(sugawara2(4 * j + 1, level), level)
        d = (e - pairsum("TS", 2 * j, 2 * j).scale(A1 ** (2 * j))
             - pairsum("TS", 2 * j - 1, 2 * j + 1, swap=True).scale((-A1) ** (2 * j + 1) * 2))
        return in_window(d, (2 * j + 1, 2 * j - 1))
    if kind == "two-4":
        e = expand_env(sugawara2(4 * j + 3, level), level)
        d = e - pairsum("TS", 2 * j + 1, 2 * j + 1).scale(A1 ** (2 * j + 2))
        return in_window(d, (2 * j + 1, 2 * j + 1))
    raise ValueError(kind)


def gen_expansion_residual(fam, n):
    """E(fam_n) minus its leading part, as {TS index: Scalar}, with the bound."""
    if fam == "u":
        gs, lead, bound = {2 * n: ONE}, {2 * n + 1: (-A1) ** n, 2 * n: A1 ** n}, 2 * n + 2
    elif fam == "v":
        gs, lead, bound = {2 * n + 1: ONE}, {2 * n + 1: (-A1) ** (n + 1), 2 * n + 2: A1 ** n}, 2 * n + 3
    else:
        gs, lead, bound = {2 * n: A1, 2 * n + 1: ONE}, {2 * n: A1 ** (n + 1)}, 2 * n + 2
    out = {}
    for g, c in gs.items():
        for h, ch in _expand_gen(g, bound + 4):
            out[h] = out.get(h, ZERO) + c * ch
    for h, c in lead.items():
        out[h] = out.get(h, ZERO) - c
    return {h: c for h, c in out.items() if c}, bound


def case_expansion(p):
    if p["kind"] == "gen":
        bad = []
        for fam in ("u", "v", "y"):
            for n in range(-3, 4):
                rest, bound = gen_expansion_residual(fam, n)
                if any(h < bound for h in rest):
                    bad.append("%s_%d" % (fam, n))
        return not bad, "congruent", "; ".join(bad) or "congruent"
    err = expansion_case(p["kind"], p["j"])
    return err is None, "in window", err or "in window"


# --------------------------------------------------------------------------
# derivation identities

def _s2(k2, level):
    return sugawara2(k2, level)


def derivl_identity(kind, k, m=None, level=16):
    """(lhs, rhs) EnvElements for the derivation identities; k integer."""
    a = A1
    if kind == "1":
        lhs = derivation_act(series.u(m), _s2(2 * k, level))
        f1 = Scalar.const(m * (m - 1) * (2 * m - 1))
        f2 = Scalar.mono(Fraction(m * (m - 1) * (m - 2), 2), 2)
        rhs = (_s2(2 * k + 2 * m - 1, level).scale(2 * (k - m))
               + _s2(2 * k + 2 * m - 2, level).scale(a * (k - m)))
        cst = (f1 if m + k == 1 else ZERO) + (f2 if m + k == 2 else ZERO)
        rhs = rhs + EnvElement.scalar("TWO", cst)
    elif kind == "2":
        lhs = derivation_act(series.u(0), _s2(2 * k - 1, level))
        rhs = _s2(2 * k - 2, level).scale(2 * k - 1) - _s2(2 * k - 3, level).scale(a * (k - 1))
    elif kind == "3":
        lhs = derivation_act(series.v(0), _s2(2 * k, level))
        rhs = _s2(2 * k, level).scale(2 * k - 1) - _s2(2 * k - 1, level).scale(a * k)
    elif kind == "4":
        lhs = derivation_act(series.v(0), _s2(2 * k - 1, level))
        rhs = (_s2(2 * k - 1, level).scale(2 * k - 2) - _s2(2 * k - 2, level).scale(a * (k - 1))
               + _s2(2 * k - 3, level).scale(a * a * (k - 1)))
    elif kind == "5":
        lhs = derivation_act(series.u(1), _s2(-1, level))
        rhs = _s2(0, level).scale(-3) + _s2(-1, level).scale(2 * a)
    elif kind == "6":
        lhs = derivation_act(series.v(1), _s2(-2, level))
        rhs = _s2(0, level).scale(-5) + _s2(-1, level).scale(2 * a)
    else:
        raise ValueError(kind)
    return lhs, rhs


def case_derivl(p):
    lhs, rhs = derivl_identity(p["kind"], p["k"], p.get("m"))
    lhs = lhs.at_critical()
    ok = lhs.equal_mod(rhs)
    return ok, str(rhs), str(lhs)


def derivcoord_expected(fam, m, var, i):
    """The four coordinate-derivative formulas, used only as test expectations."""
    a = A1
    V = opers.OperPoly.var
    K = lambda s: opers.OperPoly.const(s)
    d = lambda x, y: 1 if x == y else 0
    h = Fraction(1, 2)
    if fam == "u" and var == "ALPHA":
        return (V("BETA", i - m) * (-(2 * i + 2 * m + 1)) + V("ALPHA", i - m + 1) * (a * (m + i + 1))
                + K(a * (-m * (m - 1) * (2 * m - 1) * d(i, m - 2))
                    + a ** 3 * (-h * m * (m - 1) * (m - 2) * d(i, m - 3))))
    if fam == "u":
        return (V("ALPHA", i - m + 1) * (-2 * (m + i + 1)) + V("BETA", i - m + 1) * (-(m + i + 1) * a)
                + K(Scalar.const(2 * m * (m - 1) * (2 * m - 1) * d(i, m - 2))
                    + a ** 2 * (m * (m - 1) * (m - 2) * d(i, m - 3))))
    if var == "ALPHA":
        return (V("ALPHA", i - m) * (-2 * (m + i + 1)) + V("BETA", i - m) * ((m + i + 1) * a)
                + V("ALPHA", i - m + 1) * (-(m + i + 1) * a ** 2)
                + K(a ** 4 * (h * m * (m - 1) * (m - 2) * d(i, m - 3))
                    + a ** 2 * (3 * h * m * (m - 1) * (2 * m - 1) * d(i, m - 2))
                    + Scalar.const(m * (2 * m - 1) * (2 * m + 1) * d(i, m - 1))))
    return (V("BETA", i - m) * (-(2 * m + 2 * i + 3)) + V("ALPHA", i - m + 1) * ((m + i + 1) * a)
            + K(a * (-m * (m - 1) * (2 * m - 1) * d(i, m - 2))
                + a ** 3 * (-h * m * (m - 1) * (m - 2) * d(i, m - 3))))


def case_derivcoord(p):
    fam, m = p["fam"], p["m"]
    field = _gen_fun(fam, m)
    bad = []
    for var in ("ALPHA", "BETA"):
        for i in range(-3, 4):
            got = opers.der_on_coord(field, opers.CoordVar(var, i))
            want = derivcoord_expected(fam, m, var, i)
            if got != want:
                bad.append("%s_%d: %s vs %s" % (var.lower(), i, got, want))
    return not bad, "formulas", "; ".join(bad) or "formulas"


# --------------------------------------------------------------------------
# FF equivariance

def ff_sides(n, m, level=12):
    var = opers.CoordVar("BETA", n)
    lhs = derivation_act(series.u(m), opers.ff_element(var, level)).at_critical()
    rhs = opers.ff_image(opers.der_on_coord(series.u(m), var), level)
    return lhs, rhs


def case_ff(p):
    lhs, rhs = ff_sides(p["n"], p["m"])
    return lhs.equal_mod(rhs), str(rhs), str(lhs)


# --------------------------------------------------------------------------
# hypergeometric opers

def hyper_memberships(lam, mu, nu):
    f = opers.hyper_oper(lam, mu, nu).to_fun()
    return (opers.op1_member(series.expand(f, "t", lam + 1), lam),
            opers.op1_member(series.expand(f, "s", mu + 1), mu),
            opers.op1_member(series.specialize_diag(f, nu + 1), nu))


def case_hyper(p):
    lam, mu, nu = p["lam"], p["mu"], p["nu"]
    got = hyper_memberships(lam, mu, nu)
    res = opers.hyper_ode_residual(lam, mu, nu)
    actual = "%s residual=%s" % (",".join(got), res)
    return got == ("yes",) * 3 and not res.terms, "yes,yes,yes residual=0", actual


def valid_triples(max_weight):
    for lam in range(max_weight + 1):
        for mu in range(lam, max_weight + 1):
            for nu in range(mu - lam, lam + mu + 1, 2):
                yield lam, mu, nu


# --------------------------------------------------------------------------
# Weyl modules

def coordinate_for_k2(k2):
    d = {"ALPHA": lambda n: -2 * n - 1, "BETA": lambda n: -2 - 2 * n}
    if k2 % 2:
        var = opers.CoordVar("ALPHA", -(k2 + 1) // 2)
    else:
        var = opers.CoordVar("BETA", -1 - k2 // 2)
    assert opers.ff_dict(var)["k2"] == d[var.family](var.index)
    return var


def case_weyl(p):
    lam, mu, k2 = p["lam"], p["mu"], p["k2"]
    mat = weyl.degree0_matrix(k2, lam, mu)
    mat2 = [[c * 2 for c in row] for row in mat]
    scal = weyl.block_scalars(mat2, lam, mu)
    var = coordinate_for_k2(k2)
    want = {nu: opers.hyper_oper(lam, mu, nu).value(var) for nu, _ in weyl.clebsch_components(lam, mu)}
    bad = []
    if scal is None:
        bad.append("not block-scalar")
    elif scal != want:
        bad.append("scalars %s" % {n: str(c) for n, c in scal.items()})
    one = weyl.degree0_matrix_one(k2, (lam, mu))
    at0 = [[Scalar.const(c.specialize_a0()) for c in row] for row in mat]
    if at0 != one:
        bad.append("a=0 mismatch")
    exp = "; ".join("nu=%d: %s" % (n, want[n]) for n in sorted(want))
    return not bad, exp, "; ".join(bad) or exp


def case_weyl_casimir(p):
    nu = p["nu"]
    mat = weyl.degree0_matrix_one(1, (nu,))
    want = opers.a_lambda(nu)
    ok = all(mat[i][j] * 2 == (want if i == j else 0)
             for i in range(nu + 1) for j in range(nu + 1))
    return ok, "%s*Id" % want, "ok" if ok else str(mat)


# --------------------------------------------------------------------------
# independence

def rank_at(rows, value):
    rows = [[c.evaluate(value) for c in r] for r in rows]
    r = 0
    for col in range(len(rows[0]) if rows else 0):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col] / rows[r][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def independence(k2s, level2, value=Fraction(7, 3)):
    ops = [sugawara2(k, level2) for k in k2s]
    monos = sorted({m for x in ops for m in x.terms})
    rows = [[x.terms.get(m, ZERO) for m in monos] for x in ops]
    return rank_at(rows, value), len(ops)


def case_independence(p):
    if p["kind"] == "rank":
        r, n = independence(range(-4, 4), 2)
        return r == n, str(n), str(r)
    i, j = p["i"], p["j"]
    prod = straighten_mul(sugawara2(i, 2), central(sugawara2(j, 2)))
    ok = prod.level == 2 and not prod.is_zero()
    return ok, "nonzero mod J(1)", "zero" if prod.is_zero() else "nonzero mod J(%s)" % (prod.level // 2)


# --------------------------------------------------------------------------
# registry

def _residue_cases(o):
    return ([("t^%d" % i, {"kind": "monomial", "i": i}) for i in range(-6, 7)]
            + [("derivative m=%d" % m, {"kind": "deriv", "m": m}) for m in range(-6, 7)])


def _duality_cases(o):
    out = [("pairing n=%d" % n, {"kind": "pairing", "n": n}) for n in range(-8, 9)]
    out += [("reconstruct #%d" % i, {"kind": "random", "seed": o["seed"], "index": i})
            for i in range(50)]
    return out


def _casimir_cases(o):
    out = [("killing and dual basis", {"kind": "killing"}), ("identities", {"kind": "identities"})]
    out += [("casimir brackets n=%d" % n, {"kind": "table", "n": n}) for n in range(-4, 5)]
    return out


def _plambda_cases(o):
    top = 8 if o["ranges"] == "acceptance" else 9
    return [("lambda=%d" % lam, {"lam": lam}) for lam in range(1, top + 1)]


def _flambda_cases(o):
    w = o["max_weight"] if o.get("max_weight") is not None else 4
    return [("lambda=%d mu=%d" % (l, m), {"lam": l, "mu": m})
            for l in range(w + 1) for m in range(l, w + 1)]


def _centrality_cases(o):
    k = o["kmax"]
    level2 = 2 * o["level"]
    out = [("k2=%d" % k2, {"k2": k2, "level2": level2}) for k2 in range(-2 * k, 2 * k + 1)]
    return out


def _generic_cases(o):
    return [("k2=%d m=%d" % (k2, m), {"k2": k2, "m": m}) for k2 in (-2, 0, 2) for m in range(-2, 3)]


def _specialization_cases(o):
    k = o["kmax"]
    off = o.get("index_offset", 0)
    return [("k2=%d" % k2, {"k2": k2, "level2": 6, "offset": off}) for k2 in range(-2 * k, 2 * k + 1)]


def _expansion_cases(o):
    out = [("generators", {"kind": "gen"})]
    for j in range(-2, 3):
        out.append(("one-variable even j=%d" % j, {"kind": "one-even", "j": j}))
        out.append(("one-variable odd j=%d" % j, {"kind": "one-odd", "j": j}))
    for j in range(-1, 2):
        for c in range(1, 5):
            out.append(("two-variable case %d j=%d" % (c, j), {"kind": "two-%d" % c, "j": j}))
    return out


def _derivl_cases(o):
    out = []
    for k in range(-2, 3):
        for m in range(-3, 4):
            out.append(("(1) k=%d m=%d" % (k, m), {"kind": "1", "k": k, "m": m}))
        for kind in ("2", "3", "4"):
            out.append(("(%s) k=%d" % (kind, k), {"kind": kind, "k": k}))
    out.append(("(5)", {"kind": "5", "k": 0}))
    out.append(("(6)", {"kind": "6", "k": 0}))
    return out


def _derivcoord_cases(o):
    return [("%s_%d" % (f, m), {"fam": f, "m": m}) for f in ("u", "v") for m in range(-3, 4)]


def _ff_cases(o):
    return [("beta_%d u_%d" % (n, m), {"n": n, "m": m}) for n in range(-2, 2) for m in range(3)]


def _hyper_cases(o):
    w = o["max_weight"] if o.get("max_weight") is not None else 3
    return [("(%d,%d,%d)" % t, {"lam": t[0], "mu": t[1], "nu": t[2]}) for t in valid_triples(w)]


def _weyl_cases(o):
    out = [("lambda=%d mu=%d k2=%d" % (l, m, k2), {"lam": l, "mu": m, "k2": k2})
           for l in range(3) for m in range(3) for k2 in range(-4, 5)]
    return out


def _weyl_casimir_cases(o):
    return [("nu=%d" % nu, {"nu": nu}) for nu in range(5)]


def _independence_cases(o):
    out = [("rank", {"kind": "rank"})]
    out += [("product k2=%d,%d" % (i, j), {"kind": "product", "i": i, "j": j})
            for i in range(-4, 4) for j in range(-4, 4)]
    return out


SUITES = {
    "residues": (_residue_cases, case_residues),
    "duality": (_duality_cases, case_duality),
    "casimir": (_casimir_cases, case_casimir),
    "plambda": (_plambda_cases, case_plambda),
    "flambda": (_flambda_cases, case_flambda),
    "centrality": (_centrality_cases, case_centrality),
    "centrality-generic": (_generic_cases, case_generic),
    "specialization": (_specialization_cases, case_specialization),
    "expansion": (_expansion_cases, case_expansion),
    "derivl": (_derivl_cases, case_derivl),
    "derivcoord": (_derivcoord_cases, case_derivcoord),
    "ff-equivariance": (_ff_cases, case_ff),
    "hyper": (_hyper_cases, case_hyper),
    "weyl": (_weyl_cases, case_weyl),
    "weyl-casimir": (_weyl_casimir_cases, case_weyl_casimir),
    "independence": (_independence_cases, case_independence),
}

GROUPS = {
    "centrality": ("centrality", "centrality-generic"),
    "weyl": ("weyl", "weyl-casimir"),
}


def expand_suite(name):
    if name == "all":
        return list(SUITES)
    return list(GROUPS.get(name, (name,)))


def run_case(suite, params):
    return SUITES[suite][1](params)


def suite_cases(suite, opts):
    return SUITES[suite][0](opts)
