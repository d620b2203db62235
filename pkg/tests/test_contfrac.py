from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ffapprox import (GF, Poly, RatFunc, LaurentSeries, newton_lift, laurent_roots,
                      cf_expand, convergents, exponent_estimate, approximation_audit,
                      wirsing_proximity, from_ratfunc, ContinuedFraction, RationalInput,
                      InsufficientData, IndistinguishableAtPrecision)

from oracles import mahler, random_poly, rng as mkrng

F2, F3, F5 = GF(2), GF(3), GF(5)


def mahler_root(F, q, N):
    return newton_lift(mahler(F, q), LaurentSeries.monomial(F, 1), N)


def pell_root(N):
    t = Poly.t(F3)
    return laurent_roots([-(t * t + 1), Poly(F3, ()), Poly(F3, [1])], N).roots[0]


# -- rational input --

@given(st.integers(0, 10 ** 6))
def test_rational_expansion_terminates_and_reconstructs(seed):
    rng = mkrng(seed)
    A = random_poly(F5, 8, rng)
    B = random_poly(F5, 6, rng) + Poly.t(F5) ** 7
    cf = cf_expand(RatFunc(A, B))
    assert cf.terminated
    last = convergents(cf)[-1]
    assert RatFunc(last.P, last.Q) == RatFunc(A, B)
    with pytest.raises(RationalInput):
        exponent_estimate(cf)


def test_convergent_recurrence_small():
    t = Poly.t(F3)
    cf = ContinuedFraction([t, t + t], 2)
    c = convergents(cf)
    # t + 1/(2t) = (2t^2 + 1)/(2t)
    assert (c[1].P, c[1].Q) == (t * t * 2 + 1, t * 2)


def test_exact_series_input_is_rational():
    s = from_ratfunc(RatFunc(Poly(F5, [1]), Poly.t(F5) - 1), 12).exact()
    assert cf_expand(s).terminated


# -- the best-approximation identity --

def test_convergent_error_valuation():
    """v(Q_n beta - P_n) = deg Q_{n+1} on certified indices."""
    beta = mahler_root(F3, 3, 200).series
    cf = cf_expand(beta)
    convs = convergents(cf, certified_only=True)
    for cur, nxt in zip(convs, convs[1:]):
        err = LaurentSeries.from_poly(cur.Q) * beta - LaurentSeries.from_poly(cur.P)
        assert err.v == nxt.Q.deg


def test_certified_quotients_stable_under_more_precision():
    lo = cf_expand(mahler_root(F2, 4, 150).series)
    hi = cf_expand(mahler_root(F2, 4, 400).series)
    assert hi.a[:lo.certified] == lo.a[:lo.certified]
    assert hi.certified > lo.certified


@given(st.integers(0, 10 ** 6))
def test_certification_is_sound_on_quadratics(seed):
    rng = mkrng(seed)
    t = Poly.t(F5)
    D = t * t + random_poly(F5, 1, rng)  # x^2 - D with D monic of degree 2: roots +-t + ...
    f = [-D, Poly(F5, ()), Poly(F5, [1])]
    lo = laurent_roots(f, 40).roots
    hi = laurent_roots(f, 120).roots
    for a, b in zip(sorted(lo, key=lambda r: r.series.c), sorted(hi, key=lambda r: r.series.c)):
        ca, cb = cf_expand(a), cf_expand(b)
        assert cb.a[:ca.certified] == ca.a[:ca.certified]
        for i in range(1, ca.certified):
            assert 2 * sum(p.deg for p in ca.a[1:i + 1]) < 40


# -- exponents --

def test_mahler_exponent_q4():
    rep = exponent_estimate(cf_expand(mahler_root(F2, 4, 400)))
    assert rep.running_sup == 4
    assert all(e <= 4 for e in rep.exponents)


def test_mahler_exponent_q3():
    rep = exponent_estimate(cf_expand(mahler_root(F3, 3, 300)))
    assert rep.running_sup == 3


def test_pell_exponents():
    rep = exponent_estimate(cf_expand(pell_root(60)))
    # deg a_0 = 1, later partial quotients have degree 1: e_n = 2 + 1/n
    assert rep.exponents[:5] == [2 + Fraction(1, n) for n in range(1, 6)]
    assert rep.running_sup == 3
    assert rep.tail_sup() < Fraction(5, 2)


def test_insufficient_data():
    beta = mahler_root(F2, 4, 3).series
    with pytest.raises(InsufficientData):
        exponent_estimate(cf_expand(beta))


def test_report_json():
    rep = exponent_estimate(cf_expand(pell_root(20)))
    js = rep.to_json()
    assert js["running_sup"] == str(rep.running_sup)
    assert js["rows"][0] == [1, 1, 1, "3"]


# -- audit and Wirsing proximity --

def test_audit_mahler_residual_constant():
    f = mahler(F2, 4)
    beta = mahler_root(F2, 4, 400)
    rows = approximation_audit(f, convergents(cf_expand(beta), True))
    assert rows
    assert {r.residual for r in rows} == {1}


def test_wirsing_proximity():
    t = Poly.t(F5)
    zero, one = Poly(F5, ()), Poly(F5, [1])
    beta = laurent_roots([-(t * t + 1), zero, one], 40).roots
    # alpha^2 = t^2 + 1 + 1/t, so alpha - beta ~ (1/t) / (2 t) has valuation 2
    alpha = laurent_roots([-(t ** 3 + t + 1), zero, t], 40).roots
    b = max(beta, key=lambda r: r.series.c)
    a = max(alpha, key=lambda r: r.series.c)
    assert a.series.lc == b.series.lc
    H, ratio = wirsing_proximity(b, a)
    assert (H, ratio) == (3, Fraction(2, 3))
    with pytest.raises(IndistinguishableAtPrecision):
        wirsing_proximity(b, b)
