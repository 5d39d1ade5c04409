from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from twopoint import series
from twopoint.env import (EnvElement, central, commutator, derivation_act, embed_one,
                          expand_env, expand_gen, format_monomial, jdeg, jdeg_lt, lstorto,
                          normal_pair, parse_monomial, RINGS, specialize_env,
                          sugawara1, sugawara2, word)
from twopoint.errors import NegativePowerOfA, ResultLevelEmpty, ZeroElement
from twopoint.liealg import BASIS, AffineTerm, Sl2Elt, affine_bracket, casimir_pairs
from twopoint.scalar import ONE, ZERO, Scalar
from twopoint.series import u, v, w, y

a = Scalar.mono(1, 1)


def gen(alg, alpha, g):
    return EnvElement.gen(alg, alpha, g)


def lie_fun(alpha, f):
    return EnvElement.from_lie_fun("TWO", alpha, f)


def pair(alg, g1, g2, swap=False):
    out = EnvElement(alg, {})
    for p, q, c in casimir_pairs():
        if swap:
            p, q = q, p
        out = out + (gen(alg, p, g1) * gen(alg, q, g2)).scale(c)
    return out


# -- products ----------------------------------------------------------------

def test_commutator_matches_affine_bracket():
    for (p, f), (q, g) in [(("e", u(1)), ("f", u(-1))), (("h", v(-1)), ("e", u(2))),
                           (("f", y(0)), ("e", v(-2)))]:
        lhs = commutator(lie_fun(p, f), lie_fun(q, g))
        rhs = EnvElement("TWO", {})
        for t in affine_bracket(AffineTerm(Sl2Elt.gen(p), f), AffineTerm(Sl2Elt.gen(q), g)):
            if t.lie.is_zero():
                rhs = rhs + EnvElement.C("TWO").scale(t.central)
            else:
                for name, c in t.lie.c.items():
                    rhs = rhs + EnvElement.from_lie_fun("TWO", name, t.fun, c)
        assert lhs == rhs


def test_product_examples():
    x = lie_fun("e", u(1))
    c = commutator(x, lie_fun("f", u(-1)))
    assert c == lie_fun("h", u(0)) + EnvElement.C("TWO").scale(8)
    assert c.at_critical() == lie_fun("h", u(0)) - 4
    assert x * EnvElement.scalar("TWO", 1) == x
    eu2, eu3 = gen("TWO", "e", 4), gen("TWO", "e", 6)
    assert (eu2 * eu3).terms == {(((4, 0), (6, 0)), 0): ONE}
    assert commutator(x, x).is_zero()


def test_straightening_reorders():
    p = gen("TWO", "f", 2) * gen("TWO", "e", 0)
    assert p == gen("TWO", "e", 0) * gen("TWO", "f", 2) - commutator(gen("TWO", "e", 0), gen("TWO", "f", 2))
    assert all(list(m) == sorted(m) for m, _ in p.terms)


def test_algebra_mismatch():
    with pytest.raises(ValueError):
        gen("TWO", "e", 0) * gen("ONE", "e", 0)


gen_st = st.tuples(st.sampled_from(BASIS), st.integers(-5, 4))


def small_element(draw_gens):
    out = EnvElement("TWO", {})
    for i, (alpha, g) in enumerate(draw_gens):
        out = out + gen("TWO", alpha, g).scale(i + 1)
    return out


@given(st.lists(gen_st, min_size=1, max_size=3), st.lists(gen_st, min_size=1, max_size=2),
       st.lists(gen_st, min_size=1, max_size=2))
def test_associativity_exact(xs, ys, zs):
    x, yy, z = small_element(xs), small_element(ys), small_element(zs)
    assert (x * yy) * z == x * (yy * z)


@given(st.lists(gen_st, min_size=1, max_size=2), st.lists(gen_st, min_size=1, max_size=2),
       st.lists(gen_st, min_size=1, max_size=2))
def test_associativity_truncated(xs, ys, zs):
    x = small_element(xs).truncate(8)
    yy, z = small_element(ys), small_element(zs)
    try:
        left, right = (x * yy) * z, x * (yy * z)
    except ResultLevelEmpty:
        return
    assert left.equal_mod(right)


def test_level_certification():
    s = sugawara2(0, 6)
    x = gen("TWO", "e", -3)
    p = s * x
    assert p.level is not None and p.level < 6
    # a central right operand keeps the left level
    q = gen("TWO", "e", -3).truncate(6) * central(sugawara2(0, 6))
    assert q.level == 6


def test_word_matches_products():
    gens_ = [(2, 2), (-1, 0), (0, 1)]
    direct = EnvElement.scalar("TWO", 1)
    for g, al in gens_:
        direct = direct * gen("TWO", BASIS[al], g)
    assert word("TWO", gens_) == direct


# -- normal ordering and Sugawara -------------------------------------------------

def test_normal_pair_examples():
    w2 = {4: ONE}
    w1 = {2: ONE}
    assert normal_pair("e", w2, "f", w1) == gen("TWO", "f", 2) * gen("TWO", "e", 4)
    assert normal_pair("e", w1, "f", w1) == gen("TWO", "e", 2) * gen("TWO", "f", 2)
    lhs = normal_pair("e", u(1), "f", y(2))
    assert lhs == lie_fun("e", u(1)) * lie_fun("f", y(2))


def sugawara1_oracle(k, level2):
    # direct sum over n of the ordered products, skipping J(level) terms
    out = EnvElement("ONE", {})
    for n in range(-20, 21):
        m = k - 1 - n
        if 2 * max(n, m) >= level2:
            continue
        lo, hi = min(n, m), max(n, m)
        for p, q, c in casimir_pairs():
            first, second = (p, q) if n <= m else (q, p)
            out = out + (gen("ONE", first, 2 * lo) * gen("ONE", second, 2 * hi)).scale(c)
    return out.truncate(level2)


@pytest.mark.parametrize("k", range(-4, 5))
@pytest.mark.parametrize("level2", [2, 4, 6])
def test_sugawara1_against_oracle(k, level2):
    assert sugawara1(k, level2) == sugawara1_oracle(k, level2)


def test_sugawara1_examples():
    # only n = 0 survives below level 1
    assert sugawara1(1, 2) == pair("ONE", 0, 0)
    for n in (1, 2, 3):
        for k in range(2 * n, 2 * n + 3):
            assert sugawara1(k, 2 * n).is_zero()


@pytest.mark.parametrize("k", [-2, -1, 0, 1, 2])
def test_sugawara1_central(k):
    s = sugawara1(k, 12)
    for alpha in BASIS:
        for g in range(-4, 5, 2):
            c = commutator(s, gen("ONE", alpha, g)).at_critical()
            assert c.level >= 4
            assert c.truncate(4).is_zero()


def test_sugawara2_integer_display():
    # integer index: sum over n of :(J u_n)(J t^(k-n) s^(k-n-1)): + :(J v_n)(J u_(k-n-1)):
    level = 6
    for k in (-1, 0, 1):
        out = EnvElement("TWO", {})
        for n in range(-12, 12):
            for f1, f2 in ((u(n), series.TwoVarFun.monomial(k - n, k - n - 1)),
                           (v(n), u(k - n - 1))):
                for p, q, c in casimir_pairs():
                    out = out + normal_pair(p, f1, q, f2).scale(c)
        assert sugawara2(2 * k, level) == out.truncate(level)


@pytest.mark.parametrize("k2", [-2, -1, 0, 1, 2])
def test_centrality_subset(k2):
    y_ = sugawara2(k2, 12)
    for alpha in BASIS:
        for f in (u(-1), u(1), v(0), v(-2)):
            c = commutator(y_, lie_fun(alpha, f)).at_critical()
            assert c.level >= 4
            assert c.truncate(4).is_zero()


@pytest.mark.parametrize("k2", [-2, 0, 2])
@pytest.mark.parametrize("m", [-2, -1, 0, 1, 2])
def test_generic_level_identity(k2, m):
    lhs = commutator(sugawara2(k2, 12), lie_fun("e", u(m)))
    base = lie_fun("e", w(k2) * series.deriv2(u(m)))
    rhs = base * EnvElement.C("TWO").scale(-2) - base
    assert lhs.max_cpow() == (1 if m else 0)
    assert lhs.equal_mod(rhs)


def test_lstorto_examples():
    assert lstorto(2, 6) == sugawara2(2, 6).scale(Scalar.mono(1, -1))
    for j in (-1, 0, 1):
        k2 = 4 * j + 3
        assert lstorto(k2, 6) == sugawara2(k2, 6).scale(Scalar.mono(1, -(2 * j + 2)))
        k2 = 4 * j + 1
        want = (sugawara2(4 * j + 2, 6) - sugawara2(k2, 6).scale(a)).scale(Scalar.mono(1, -2 * j - 2))
        assert lstorto(k2, 6) == want


# -- specialisation -----------------------------------------------------------------

def test_specialize_examples():
    assert specialize_env(lie_fun("e", u(3))) == gen("ONE", "e", 12)
    assert specialize_env(lie_fun("e", u(3)).scale(a)).is_zero()
    with pytest.raises(NegativePowerOfA):
        specialize_env(lie_fun("e", u(0)).scale(Scalar.mono(1, -1)))
    x = gen("TWO", "e", -1) * gen("TWO", "f", 2)
    sp = specialize_env(x)
    assert all(list(m) == sorted(m) for m, _ in sp.terms)


@pytest.mark.parametrize("k2", range(-4, 5))
@pytest.mark.parametrize("n2", [2, 4, 6])
def test_specialize_sugawara(k2, n2):
    # the diagonal image is the one-variable operator whose index is 2k
    got = specialize_env(sugawara2(k2, n2))
    assert got.level == 2 * n2
    assert got.equal_mod(sugawara1(k2, 2 * n2))


def test_specialize_is_multiplicative():
    x = gen("TWO", "e", -1) + gen("TWO", "h", 2)
    yy = gen("TWO", "f", 0) * gen("TWO", "e", -3)
    assert specialize_env(x * yy) == specialize_env(x) * specialize_env(yy)


# -- expansion ----------------------------------------------------------------------

@pytest.mark.parametrize("n", range(-3, 4))
def test_expand_generators(n):
    # leading parts: u_n ~ (-a)^n t^n + a^n s^n, v_n ~ (-a)^(n+1) t^n + a^n s^(n+1),
    # y_n ~ a^(n+1) s^n; every other index is above these
    def image(fam, level):
        out = {}
        for g, c in {"u": {2 * n: ONE}, "v": {2 * n + 1: ONE},
                     "y": {2 * n: a, 2 * n + 1: ONE}}[fam].items():
            e = expand_gen("e", g, level)
            for (mono, _), cc in e.terms.items():
                out[mono[0][0]] = out.get(mono[0][0], ZERO) + c * cc
        return {h: c for h, c in out.items() if c}

    cases = {"u": ({2 * n + 1: (-a) ** n, 2 * n: a ** n}, 2 * n + 2),
             "v": ({2 * n + 1: (-a) ** (n + 1), 2 * n + 2: a ** n}, 2 * n + 3),
             "y": ({2 * n: a ** (n + 1)}, 2 * n + 2)}
    for fam, (lead, bound) in cases.items():
        img = image(fam, bound + 6)
        for h, c in lead.items():
            assert img.get(h) == c
        assert all(h >= bound for h in img if h not in lead)


def test_expand_gen_against_series():
    f = u(-2)
    e = expand_gen("h", -4, 6)
    et = series.expand(f, "t", 3)
    es = series.expand(f, "s", 3)
    for (mono, _), c in e.terms.items():
        g = mono[0][0]
        want = et.terms.get((g - 1) // 2) if g % 2 else es.terms.get(g // 2)
        assert c == want


@settings(max_examples=25)
@given(st.lists(gen_st, min_size=1, max_size=2), st.lists(gen_st, min_size=1, max_size=2))
def test_expansion_is_multiplicative(xs, ys):
    x, yy = small_element(xs), small_element(ys)
    level = 6
    lhs = expand_env(x * yy, level)
    rhs = expand_env(x, level + 14) * expand_env(yy, level + 14)
    assert lhs.equal_mod(rhs, level)


def test_embed_one():
    x = gen("T", "e", 2)
    assert embed_one(x, "t").terms == {(((3, 0),), 0): ONE}
    assert embed_one(x, "s").terms == {(((2, 0),), 0): ONE}


def in_window(diff, target):
    assert diff.level is None or diff.level > target[0]
    for (mono, _), c in diff.terms.items():
        assert len(mono) <= 2
        if len(mono) == 2:
            assert jdeg(mono) > target


@pytest.mark.parametrize("j", range(-2, 3))
def test_one_variable_expansion(j):
    even = sugawara1(2 * j, 12) - pair("ONE", 2 * j - 2, 2 * j, swap=True).scale(2)
    in_window(even, (2 * j, 2 * j - 2))
    odd = sugawara1(2 * j + 1, 12) - pair("ONE", 2 * j, 2 * j, swap=True)
    in_window(odd, (2 * j, 2 * j))


@pytest.mark.parametrize("j", [-1, 0, 1])
def test_two_variable_expansion(j):
    lv = 10
    e1 = expand_env(sugawara2(4 * j, lv), lv)
    in_window(e1 - pair("TS", 2 * j - 2, 2 * j, swap=True).scale(a ** (2 * j) * 2), (2 * j, 2 * j - 2))
    e2 = expand_env(sugawara2(4 * j + 2, lv), lv)
    in_window(e2 - pair("TS", 2 * j, 2 * j).scale(a ** (2 * j + 1)), (2 * j + 1, 2 * j - 1))
    e3 = expand_env(sugawara2(4 * j + 1, lv), lv)
    d3 = (e3 - pair("TS", 2 * j, 2 * j).scale(a ** (2 * j))
          - pair("TS", 2 * j - 1, 2 * j + 1, swap=True).scale((-a) ** (2 * j + 1) * 2))
    in_window(d3, (2 * j + 1, 2 * j - 1))
    e4 = expand_env(sugawara2(4 * j + 3, lv), lv)
    in_window(e4 - pair("TS", 2 * j + 1, 2 * j + 1).scale(a ** (2 * j + 2)), (2 * j + 1, 2 * j + 1))


# -- derivations ----------------------------------------------------------------------

def test_derivation_example():
    got = derivation_act(u(1), lie_fun("e", v(-1)))
    assert got == lie_fun("e", v(-1).scale(a) - u(0))


def test_derivation_is_leibniz():
    x, yy = gen("TWO", "e", -2), gen("TWO", "f", 3)
    d = lambda z: derivation_act(v(0), z)
    assert d(x * yy) == d(x) * yy + x * d(yy)


def S(k2):
    return sugawara2(k2, 16)


def check_mod(lhs, rhs):
    assert lhs.at_critical().equal_mod(rhs)


@pytest.mark.parametrize("k", range(-2, 3))
@pytest.mark.parametrize("m", range(-3, 4))
def test_derivation_on_sugawara_u(k, m):
    f1 = Scalar.const(m * (m - 1) * (2 * m - 1)) if m + k == 1 else ZERO
    f2 = Scalar.mono(Fraction(m * (m - 1) * (m - 2), 2), 2) if m + k == 2 else ZERO
    rhs = (S(2 * k + 2 * m - 1).scale(2 * (k - m)) + S(2 * k + 2 * m - 2).scale(a * (k - m))
           + EnvElement.scalar("TWO", f1 + f2))
    check_mod(derivation_act(u(m), S(2 * k)), rhs)


def test_derivation_constant_example():
    d = derivation_act(u(2), S(-2)).at_critical()
    assert (d - S(1).scale(-6) - S(0).scale(-3 * a)).truncate(16).terms == {((), 0): Scalar.const(6)}


@pytest.mark.parametrize("k", range(-2, 3))
def test_derivation_on_sugawara_other(k):
    check_mod(derivation_act(u(0), S(2 * k - 1)),
              S(2 * k - 2).scale(2 * k - 1) - S(2 * k - 3).scale(a * (k - 1)))
    check_mod(derivation_act(v(0), S(2 * k)), S(2 * k).scale(2 * k - 1) - S(2 * k - 1).scale(a * k))
    check_mod(derivation_act(v(0), S(2 * k - 1)),
              S(2 * k - 1).scale(2 * k - 2) - S(2 * k - 2).scale(a * (k - 1))
              + S(2 * k - 3).scale(a * a * (k - 1)))


def test_derivation_low_cases():
    check_mod(derivation_act(u(1), S(-1)), S(0).scale(-3) + S(-1).scale(2 * a))
    check_mod(derivation_act(v(1), S(-2)), S(0).scale(-5) + S(-1).scale(2 * a))


# -- filtrations and text -----------------------------------------------------------------

def test_jdeg_examples():
    x = lie_fun("e", u(5))
    m, jd, lt = jdeg_lt(x)
    assert (m, jd) == (1, (10,)) and lt == x
    z = gen("TWO", "e", 2) * gen("TWO", "f", 4) + gen("TWO", "h", 14)
    m, jd, lt = jdeg_lt(z)
    assert (m, jd) == (2, (4, 2))
    assert lt == gen("TWO", "e", 2) * gen("TWO", "f", 4)
    with pytest.raises(ZeroElement):
        jdeg_lt(EnvElement("TWO", {}))


def merge(p, q):
    return tuple(sorted(p + q, reverse=True))


@given(st.lists(gen_st, min_size=1, max_size=3), st.lists(gen_st, min_size=1, max_size=3))
def test_jdeg_multiplicative(xs, ys):
    x = EnvElement.scalar("TWO", 1)
    for al, g in xs:
        x = x * gen("TWO", al, g)
    yy = EnvElement.scalar("TWO", 1)
    for al, g in ys:
        yy = yy * gen("TWO", al, g)
    if x.is_zero() or yy.is_zero():
        return
    mx, jx, _ = jdeg_lt(x)
    my, jy, _ = jdeg_lt(yy)
    mp, jp, _ = jdeg_lt(x * yy)
    assert mp == mx + my
    assert jp == merge(jx, jy)


def test_monomial_text():
    rg = RINGS["TWO"]
    mono = ((-2, 0), (1, 1))
    assert format_monomial(rg, mono) == "(e:u:-1)(h:v:0)"
    assert parse_monomial("TWO", "(e:u:-1)(h:v:0)") == mono


def test_to_json():
    j = sugawara1(1, 2).to_json()
    assert j["algebra"] == "ONE" and j["level2"] == 2
    assert {t["monomial"] for t in j["terms"]} == {"(h:t:0)", "(e:t:0)(f:t:0)", "(h:t:0)(h:t:0)"}
