import pytest
from hypothesis import given, strategies as st

from ffapprox import (GF, Poly, RatFunc, RatMatrix, rank, nullspace, solve, QuotientAlgebra,
                      power_sums, trace, inv_mod, NotInvertible)

from oracles import matrix_trace, split_power_sums, poly_from_roots, rng as mkrng, random_poly

F5 = GF(5)
F3 = GF(3)
t5 = Poly.t(F5)


def rat(F, num, den=(1,)):
    return RatFunc(Poly(F, list(num)), Poly(F, list(den)))


# -- matrices --

def test_rank_known():
    M = RatMatrix(F5, [[t5, 1], [t5 * t5, t5]])
    assert rank(M) == (1, 1)
    M = RatMatrix(F5, [[t5, 1], [1, t5]])
    assert rank(M) == (2, 0)


@given(st.integers(0, 10 ** 6), st.integers(1, 4), st.integers(1, 4))
def test_rank_nullity_and_kernel(seed, r, c):
    rng = mkrng(seed)
    rows = [[RatFunc(random_poly(F3, 2, rng), Poly(F3, [1, 1])) for _ in range(c)]
            for _ in range(r)]
    if r >= 2:
        rows[-1] = [x + y for x, y in zip(rows[0], rows[1])]  # force dependence
    M = RatMatrix(F3, rows, c)
    rk, kd = rank(M)
    assert rk + kd == c
    ker = nullspace(M)
    assert len(ker) == kd
    for v in ker:
        for row in rows:
            acc = RatFunc.constant(F3, 0)
            for a, b in zip(row, v):
                acc = acc + a * b
            assert not acc


def test_rank_is_transpose_invariant():
    rng = mkrng(4)
    rows = [[RatFunc(random_poly(F5, 1, rng)) for _ in range(4)] for _ in range(3)]
    M = RatMatrix(F5, rows, 4)
    assert rank(M)[0] == rank(M.transpose())[0]


def test_solve():
    M = RatMatrix(F5, [[t5, 1], [1, t5]])
    b = [RatFunc(t5 + 1), RatFunc(t5 + 1)]
    x = solve(M, b)
    assert x == [RatFunc(Poly(F5, [1]))] * 2
    inconsistent = RatMatrix(F5, [[t5, 1], [t5, 1]])
    assert solve(inconsistent, [RatFunc(t5), RatFunc(t5 + 1)]) is None


# -- quotient algebras --

def test_power_sums_split_oracle():
    rng = mkrng(11)
    for F in (GF(3), GF(5), GF(7)):
        for d in (2, 3, 4):
            roots = [random_poly(F, 2, rng) for _ in range(d)]
            f = poly_from_roots(roots)
            got = power_sums(f, 7)
            want = split_power_sums(roots, 7)
            assert [RatFunc(w) for w in want] == got


@given(st.integers(0, 10 ** 6), st.integers(2, 5))
def test_trace_matches_multiplication_matrix(seed, d):
    rng = mkrng(seed)
    F = GF(5)
    f = [random_poly(F, 2, rng) for _ in range(d)] + [Poly(F, [1, 1])]
    h = [random_poly(F, 2, rng) for _ in range(d)]
    assert trace(f, h) == matrix_trace(f, h)


def test_inverse_in_algebra():
    f = [-t5, Poly(F5, ()), Poly(F5, [1])]  # x^2 - t
    inv = inv_mod([0, 1], f)  # 1/x = x/t
    assert list(inv.c) == [RatFunc(Poly(F5, ())), RatFunc(Poly(F5, [1]), t5)]
    alg = QuotientAlgebra(f)
    x = alg.gen
    assert x * x.inv() == alg.one


def test_non_invertible_raises():
    f = [Poly(F5, ()), Poly(F5, [1]), Poly(F5, [1])]  # x (x + 1)
    with pytest.raises(NotInvertible):
        inv_mod([0, 1], f)


def test_separability():
    F2 = GF(2)
    t = Poly.t(F2)
    assert not QuotientAlgebra([t, Poly(F2, ()), Poly(F2, [1])]).is_separable()  # x^2 + t
    assert QuotientAlgebra([t, Poly(F2, [1]), Poly(F2, [1])]).is_separable()


def test_trace_gf4():
    F4 = GF(2, 2, [1, 1, 1])
    t = Poly.t(F4)
    f = [t, Poly(F4, [2]), Poly(F4, ()), Poly(F4, [1])]
    for h in ([0, 1], [t, Poly(F4, [3]), Poly(F4, [1])]):
        h = [c if isinstance(c, Poly) else Poly(F4, [c]) for c in h]
        assert trace(f, h) == matrix_trace(f, h)
