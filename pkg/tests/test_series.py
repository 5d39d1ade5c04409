import pytest
from hypothesis import given, settings

from twopoint import series
from twopoint.errors import NegativePowerOfA, TruncationTooCoarse
from twopoint.scalar import ONE, ZERO, Scalar
from twopoint.series import (OneVarSeries, TwoVarFun, deriv2, expand, format_basis, from_basis,
                             parse_basis, parse_fun, parse_series, res2, specialize_diag, to_basis,
                             u, v, x, y)

from conftest import funs

a = Scalar.mono(1, 1)
t = lambda i: TwoVarFun.monomial(i, 0)
s = lambda j: TwoVarFun.monomial(0, j)


def same_expansions(f, g, order=8):
    return expand(f, "t", order) == expand(g, "t", order) and expand(f, "s", order) == expand(g, "s", order)


# -- products and derivatives -----------------------------------------------

def test_product_examples():
    assert u(1) * v(-2) == v(-1)
    assert (u(1) * v(-2)).terms == {(-1, 0): ONE}
    f = TwoVarFun({(2, -1): a, (0, 3): 2})
    assert f * TwoVarFun.const(1) == f
    assert u(3) * u(-5) == u(-2)


def test_product_truncation():
    f = TwoVarFun({(0, 0): 1}, trunc=2)
    g = TwoVarFun({(-1, 0): 1})
    assert (f * g).trunc == 1
    assert (f * f).trunc == 2


def test_derivative_table():
    for n in range(-4, 5):
        assert deriv2(u(n)) == (y(n - 1) + v(n - 1)).scale(n)
        assert deriv2(v(n)) == u(n).scale(2 * n + 1) - v(n - 1).scale(a * n)
    assert deriv2(TwoVarFun.const(1)).is_zero()


def test_derivative_truncation():
    assert deriv2(TwoVarFun({(0, 0): 1}, trunc=3)).trunc == 2


# -- residues ----------------------------------------------------------------

def test_residue_examples():
    assert res2(s(-1)) == ONE
    assert res2(TwoVarFun.monomial(-1, -1)) == ZERO
    assert res2(TwoVarFun.monomial(2, -2)) == a * 2


def test_residue_truncation_error():
    with pytest.raises(TruncationTooCoarse):
        res2(TwoVarFun({(0, 0): 1}, trunc=-1))
    assert res2(TwoVarFun({(0, -1): 1}, trunc=0)) == ONE


def test_residue_vanishes_low_total_degree():
    for i in range(-6, 5):
        for j in range(-6, 5):
            if i + j <= -2:
                assert res2(TwoVarFun.monomial(i, j)) == ZERO


def test_residue_as_sum_of_local_residues():
    # independent route: expand at both points and add the classical residues
    for i in range(-5, 6):
        for j in range(-5, 6):
            f = TwoVarFun.monomial(i, j)
            assert res2(f) == expand(f, "t", 2).res() + expand(f, "s", 2).res()


@given(funs)
def test_residue_kills_derivatives(f):
    assert res2(deriv2(f)) == ZERO


@given(funs)
def test_residue_local_sum_random(f):
    assert res2(f) == expand(f, "t", 1).res() + expand(f, "s", 1).res()


@given(funs)
def test_residue_specializes(f):
    # only a-nonnegative functions specialise
    g = f.scale(Scalar.mono(1, 2))
    if any(c.min_exp() < 0 for c in g.terms.values()):
        return
    assert res2(g).specialize_a0() == specialize_diag(g, 0).res().specialize_a0()


def test_derivative_residue_table():
    d = lambda p, q: 1 if p == q else 0
    for m in range(-6, 7):
        for n in range(-6, 7):
            assert res2(u(m) * deriv2(u(n))) == Scalar.const(2 * n * d(m, -n))
            assert res2(v(m) * deriv2(v(n))) == (Scalar.const((2 * n + 1) * d(m, -1 - n))
                                                 + Scalar.mono(n * d(m, -n), 2))
            assert res2(v(m) * deriv2(u(n))) == Scalar.mono(-n * d(m, -n), 1)
            assert res2(y(m) * deriv2(u(n))) == Scalar.mono(n * d(m, -n), 1)


# -- bases ---------------------------------------------------------------------

def test_basis_examples():
    assert to_basis(t(-1)) == {("V", -1): ONE}
    assert to_basis(u(5)) == {("U", 5): ONE}
    assert to_basis(t(2)) == {("U", 1): ONE, ("V", 0): a, ("U", 0): a * a}


def test_basis_against_expansion():
    # the expansion pair is injective, so it certifies basis conversion
    for i in range(-4, 5):
        for j in range(-4, 5):
            f = TwoVarFun.monomial(i, j)
            g = from_basis(to_basis(f))
            assert same_expansions(f, g, order=10)
            h = from_basis(to_basis(f, "XY"))
            assert same_expansions(f, h, order=10)


def test_xy_relation():
    for n in range(-3, 4):
        assert y(n) == u(n).scale(a) + v(n)


def test_duality():
    for n in range(-8, 9):
        for m in range(-8, 9):
            d = ONE if n == m else ZERO
            assert res2(u(n) * x(m)) == ZERO
            assert res2(u(n) * y(-m - 1)) == d
            assert res2(v(n) * x(-m - 1)) == d
            assert res2(v(n) * y(m)) == ZERO


@settings(max_examples=50)
@given(funs)
def test_reconstruction(f):
    g = TwoVarFun()
    for n in range(-12, 13):
        g = g + y(-n - 1, res2(f * u(n))) + x(-n - 1, res2(f * v(n)))
    assert g == f


def test_interleaved_families():
    assert series.w(3) == v(1)
    assert series.w(-4) == u(-2)
    assert series.z(-1) == y(-1)
    assert series.basis_to_w({("U", 2): ONE, ("V", -1): a}) == {4: ONE, -1: a}


# -- expansion and specialisation ------------------------------------------------

def test_expand_examples():
    e = expand(s(-1), "t", 3)
    assert e == OneVarSeries("t", {0: -Scalar.mono(1, -1), 1: -Scalar.mono(1, -2),
                                   2: -Scalar.mono(1, -3)}, 3)
    for n in range(-3, 4):
        assert expand(u(n), "t", n + 1) == OneVarSeries("t", {n: (-a) ** n}, n + 1)
    assert expand(u(0), "s", 5) == OneVarSeries("s", {0: ONE}, 5)


def test_expand_order_follows_truncation():
    f = TwoVarFun({(0, 0): 1}, trunc=2)
    assert expand(f, "t", 10).order == 2


def test_expand_by_substitution():
    # s = t - a, so expanding (s - t + a) gives zero
    f = s(1) - t(1) + TwoVarFun.const(a)
    assert not expand(f, "t", 6).terms
    assert not expand(f, "s", 6).terms


def test_specialize_examples():
    for n in range(-3, 4):
        assert specialize_diag(u(n), 20) == OneVarSeries("t", {2 * n: ONE}, 20)
        assert specialize_diag(v(n), 20) == OneVarSeries("t", {2 * n + 1: ONE}, 20)
    assert not specialize_diag(u(0).scale(a), 5).terms
    with pytest.raises(NegativePowerOfA):
        specialize_diag(u(0).scale(Scalar.mono(1, -1)), 5)


@given(funs)
def test_expand_commutes_with_derivative(f):
    for var in ("t", "s"):
        assert expand(deriv2(f), var, 4) == expand(f, var, 5).deriv()


@given(funs)
def test_specialize_commutes_with_derivative(f):
    g = f.scale(Scalar.mono(1, 1))
    if any(c.min_exp() < 0 for c in g.terms.values()):
        return
    assert specialize_diag(deriv2(g), 6) == specialize_diag(g, 7).deriv()


def test_series_coefficient_hidden():
    e = OneVarSeries("t", {0: ONE}, 2)
    with pytest.raises(TruncationTooCoarse):
        e.coeff(2)


# -- text ------------------------------------------------------------------------

@given(funs)
def test_fun_roundtrip(f):
    assert parse_fun(str(f)) == f
    b = to_basis(f)
    assert parse_basis(format_basis(b)) == b


def test_fun_text_examples():
    f = TwoVarFun({(1, -1): 2, (0, 0): Scalar({0: 1, 1: 1})}, trunc=3)
    assert str(f) == "(1 + a) + 2*t*s^-1 + O(u_3)"
    assert parse_fun(str(f)) == f
    assert format_basis(to_basis(t(2))) == "a^2*u_0 + a*v_0 + u_1"
    assert parse_fun("a^2*u_0 + a*v_0 + u_1") == t(2)


def test_series_roundtrip():
    e = expand(s(-2), "t", 3)
    assert parse_series(str(e)) == e
    assert str(OneVarSeries("t", {0: 3})) == "3"
