from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ffapprox import (GF, Poly, RatFunc, LaurentSeries, from_ratfunc, newton_lift,
                      laurent_roots, eval_series, HenselFailure, InseparableInput,
                      PrecisionError)
from ffapprox.laurent import INF

from oracles import mahler, naive_series_mul, series_of_poly_eval, random_poly, rng as mkrng

F2, F3, F5 = GF(2), GF(3), GF(5)


def series(F, v, coeffs, prec=INF):
    return LaurentSeries(F, v, coeffs, prec)


def exact_series(F):
    return st.tuples(st.integers(-5, 5),
                     st.lists(st.integers(0, F.q - 1), min_size=1, max_size=25)
                     ).map(lambda vc: LaurentSeries(F, vc[0], vc[1]))


# -- arithmetic --

@given(exact_series(F5), exact_series(F5))
def test_product_matches_schoolbook(a, b):
    assert a * b == naive_series_mul(a, b)


@given(exact_series(F3), exact_series(F3), exact_series(F3))
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(exact_series(F5), st.integers(5, 60))
def test_inverse(a, N):
    if not a.c:
        return
    inv = a.inv(N)
    prod = (a * inv).truncate(N + a.v)
    one = LaurentSeries.one(F5).truncate(N + a.v)
    assert prod.agrees_with(one, inv.prec + a.v)


def test_long_inverse_uses_newton_path():
    a = series(F5, 0, [1, 2, 3, 4, 1, 1])
    inv = a.inv(300)
    assert (a * inv).truncate(300).agrees_with(LaurentSeries.one(F5), 300)


def test_precision_is_pessimistic():
    a = series(F5, 0, [1, 2], 10)
    b = series(F5, 1, [1], 6)
    assert (a + b).prec == 6
    # (1 + ...)(z + ...): valuation 1, relative precision min(10, 5)
    assert (a * b).prec == 6
    with pytest.raises(PrecisionError):
        b.coeff(6)


def test_frobenius_is_pth_power():
    a = series(F3, -2, [1, 2, 0, 1])
    assert a.frobenius(1) == a * a * a
    assert a.frobenius(2) == a ** 9


def test_derivative_of_poly():
    t = Poly.t(F5)
    P = t ** 3 + t * 2 + 1
    assert LaurentSeries.from_poly(P).derivative() == LaurentSeries.from_poly(P.derivative())


def test_from_ratfunc_geometric():
    t = Poly.t(F3)
    s = from_ratfunc(RatFunc(Poly(F3, [1]), t - 1), 6)  # 1/(t-1) = z + z^2 + ...
    assert s == series(F3, 1, [1] * 5, 6)


def test_json_roundtrip():
    a = series(F5, -1, [1, 0, 3], 7)
    assert LaurentSeries.from_json(F5, a.to_json()) == a


def test_str():
    assert str(series(F2, 1, [1, 0, 0, 1], 20)) == "z + z^4 + O(z^20)"


# -- Newton lifting --

def test_mahler_q4_series():
    F = F2
    f = mahler(F, 4)
    r = newton_lift(f, LaurentSeries.monomial(F, 1), 20)
    assert str(r.series) == "z + z^4 + z^16 + O(z^20)"
    assert r.prec == 20


def test_mahler_lift_residual():
    F = F3
    f = mahler(F, 3)
    r = newton_lift(f, LaurentSeries.monomial(F, 1), 120)
    resid = series_of_poly_eval(f, r.series)
    assert resid.truncate(120 - 1).is_zero()
    # the root's coefficients sit at z^(3^k)
    assert [e for e in range(1, 120) if r.series.coeff(e)] == [1, 3, 9, 27, 81]


def test_hensel_rejects_ambiguous_seed():
    t = Poly.t(F5)
    f = [-(t * t) - 1, Poly(F5, ()), Poly(F5, [1])]
    # x^2 = t^2 + 1 has roots +-t + ...; the seed 0 is equidistant from both
    with pytest.raises(HenselFailure):
        newton_lift(f, LaurentSeries.zero(F5), 10)


def test_inseparable_rejected():
    t = Poly.t(F2)
    with pytest.raises(InseparableInput):
        newton_lift([t, Poly(F2, ()), Poly(F2, [1])], LaurentSeries.zero(F2), 10)


@given(st.integers(0, 10 ** 6))
def test_lifted_roots_satisfy_f(seed):
    rng = mkrng(seed)
    F = F5
    t = Poly.t(F)
    # (x - r1)(x - r2) with polynomial roots of distinct leading terms, plus a perturbation
    r1 = random_poly(F, 2, rng) + t ** 3
    r2 = random_poly(F, 1, rng)
    f = [r1 * r2 + 1, -(r1 + r2), Poly(F, [1])]
    res = laurent_roots(f, 30)
    for root in res.roots:
        val = eval_series(f, root.series)
        assert val.v >= 30 - 3 or val.is_zero()


# -- root finding --

def test_roots_mahler_and_skips():
    res = laurent_roots(mahler(F2, 4), 20)
    # one root near z, one near 1; the residue polynomial x^3 + 1 at valuation 0
    # keeps its two roots in GF(4)
    assert len(res.roots) == 2
    assert sorted(r.series.v for r in res.roots) == [0, 1]
    assert res.skipped == [{"kind": "residue_extension", "valuation": Fraction(0), "count": 2}]


def test_roots_sqrt_t2_plus_1():
    t = Poly.t(F3)
    res = laurent_roots([-(t * t + 1), Poly(F3, ()), Poly(F3, [1])], 8)
    # z^-1 (1 + z^2)^(1/2) by the binomial series, reduced mod 3
    got = sorted(str(r.series) for r in res.roots)
    assert got == ["2*z^-1 + z + 2*z^3 + 2*z^5 + z^7 + O(z^8)",
                   "z^-1 + 2*z + z^3 + z^5 + 2*z^7 + O(z^8)"]


def test_exact_polynomial_roots():
    t = Poly.t(F3)
    f = [t * (t + 1), -(t + t + 1), Poly(F3, [1])]  # (x - t)(x - t - 1)
    res = laurent_roots(f, 8)
    polys = sorted(r.series.exact().poly_part().c for r in res.roots)
    assert polys == sorted([t.c, (t + 1).c])


def test_ramified_skip():
    t = Poly.t(F5)
    res = laurent_roots([-t, Poly(F5, ()), Poly(F5, [1])], 8)
    assert res.roots == []
    assert res.skipped == [{"kind": "ramified", "valuation": Fraction(-1, 2), "count": 2}]
