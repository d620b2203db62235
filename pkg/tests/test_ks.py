import pytest
from hypothesis import given, strategies as st

from ffapprox import (GF, Poly, RatFunc, CurveSpec, basis, ks_hyperelliptic, ks_superelliptic,
                      ks_thue, ks_thue_u2, ks_rank, search_max_rank, genus_thue,
                      genus_superelliptic, NotEtale, NotSquarefree, SpecViolation)
from ffapprox.ks import random_f, ks_matrix, thue_ceiling

from oracles import j_invariant_char3, random_poly, x_pow_minus_t, rng as mkrng

F3, F5, F7 = GF(3), GF(5), GF(7)


def short_weierstrass_oracle(a, b):
    """Closed form for y^2 = x^3 + a x + b: 6 (2 a b' - 3 a' b) / (4 a^3 + 27 b^2)."""
    A, B = RatFunc(a), RatFunc(b)
    num = (A * B.derivative() * 2 - A.derivative() * B * 3) * 6
    return num / (A * A * A * 4 + B * B * 27)


# -- basis and genus --

def test_basis_sizes_small():
    assert len(basis(CurveSpec("thue", 4))) == 3
    assert basis(CurveSpec("thue", 4)).pairs == [(0, 0), (0, 1), (1, 0)]
    assert basis(CurveSpec("superelliptic", 3, 2)).pairs == [(0, 1)]
    assert basis(CurveSpec("superelliptic", 4, 3)).pairs == [(0, 1), (0, 2), (1, 2)]


def test_spec_validation():
    for bad in (CurveSpec("thue", 3), CurveSpec("thue", 6, p=3),
                CurveSpec("superelliptic", 4, 2), CurveSpec("superelliptic", 5, 3, p=3),
                CurveSpec("conic", 4)):
        with pytest.raises(SpecViolation):
            bad.validate()


# -- elliptic curves --

def test_elliptic_frozen_entry():
    t = Poly.t(F5)
    zero, one = Poly(F5, ()), Poly(F5, [1])
    M = ks_hyperelliptic([one, t, zero, one])  # y^2 = x^3 + t x + 1
    assert M.entries[0, 0] == RatFunc(Poly(F5, [3]), t ** 3 + 3)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_elliptic_closed_form(p):
    F = GF(p)
    rng = mkrng(p)
    zero, one = Poly(F, ()), Poly(F, [1])
    checked = 0
    while checked < 6:
        a, b = random_poly(F, 2, rng), random_poly(F, 2, rng)
        try:
            M = ks_hyperelliptic([b, a, zero, one])
        except NotSquarefree:
            continue
        assert M.entries[0, 0] == short_weierstrass_oracle(a, b)
        checked += 1


def test_j_invariant_agreement_char3():
    """Over GF(3) with x^2 coefficient nonzero: KS vanishes exactly when j' = 0."""
    rng = mkrng(3)
    seen = {True: 0, False: 0}
    tries = 0
    while min(seen.values()) < 3 and tries < 400:
        tries += 1
        deg = 1 if tries % 3 else 0
        f = [random_poly(F3, deg, rng) for _ in range(3)] + [Poly(F3, [1])]
        if tries % 5 == 0:
            f = [Poly(F3, [c]) for c in (1, 2, 1)] + [Poly(F3, [1])]
            f[0] = f[0] + Poly.t(F3) ** 3
        j = j_invariant_char3(f) if f[2] else None
        if j is None:
            continue
        try:
            M = ks_hyperelliptic(f)
        except NotSquarefree:
            continue
        zero_j = not j.derivative()
        assert M.is_zero() == zero_j
        seen[zero_j] += 1
    assert min(seen.values()) >= 1


# -- superelliptic --

@given(st.integers(0, 10 ** 6))
def test_hyperelliptic_equals_superelliptic(seed):
    rng = mkrng(seed)
    F = F5
    f = random_f(F, 3, 1, rng)
    try:
        A = ks_hyperelliptic(f)
    except NotSquarefree:
        return
    assert A.entries == ks_superelliptic(f, 2).entries


@pytest.mark.parametrize("d,k,p", [(4, 3, 5), (5, 3, 7), (3, 4, 5), (4, 5, 3)])
def test_structural_vanishing(d, k, p):
    F = GF(p)
    rng = mkrng(d * 100 + k)
    while True:
        try:
            M = ks_superelliptic(random_f(F, d, 1, rng), k)
            break
        except NotSquarefree:
            continue
    b = M.basis.pairs
    for r, (_, j) in enumerate(b):
        for c, (_, n) in enumerate(b):
            if (j + n) % k:
                assert not M.entries[r, c]
    rep = ks_rank(M)
    assert rep.rank <= rep.ceiling <= rep.g


def test_isotrivial_families_vanish():
    assert ks_hyperelliptic(x_pow_minus_t(F5, 3)).is_zero()
    const = [Poly(F7, [c]) for c in (1, 3, 0, 1)]
    assert ks_hyperelliptic(const).is_zero()
    assert ks_superelliptic([Poly(F7, [c]) for c in (2, 1, 0, 0, 1)], 3).is_zero()


def test_ks_matrix_dispatch():
    f = random_f(F5, 3, 1, mkrng(0))
    assert ks_matrix(f, "hyperelliptic").entries == ks_matrix(f, "superelliptic", 2).entries
    with pytest.raises(SpecViolation):
        ks_matrix(f, "quintic")


# -- Thue --

def test_thue_not_etale_example():
    t = Poly.t(F3)
    zero = Poly(F3, ())
    with pytest.raises(NotEtale):
        ks_thue([t, t, zero, zero, Poly(F3, [1])])


def test_thue_antisymmetry_and_ceiling():
    rng = mkrng(5)
    done = 0
    while done < 2:
        f = random_f(F5, 4, 1, rng)
        try:
            M = ks_thue(f)
        except (NotEtale, NotSquarefree):
            continue
        assert ks_thue_u2(f).entries == (-M).entries
        assert ks_rank(M).rank <= thue_ceiling(M.basis) == 1
        done += 1


def test_thue_weight_pattern_d5():
    rng = mkrng(2)
    while True:
        f = random_f(F3, 5, 1, rng)
        try:
            M = ks_thue(f)
            break
        except (NotEtale, NotSquarefree):
            continue
    b = M.basis.pairs
    for r, (a1, b1) in enumerate(b):
        for c, (a2, b2) in enumerate(b):
            if a1 + b1 + a2 + b2 != 5 - 4:
                assert not M.entries[r, c]
    assert len(b) == genus_thue(5)


# -- search --

def test_search_is_reproducible():
    a = search_max_rank(5, 3, 2, 2, 8, 11)
    b = search_max_rank(5, 3, 2, 2, 8, 11)
    assert a.histogram == b.histogram
    assert [s[0] for s in a.samples] == [s[0] for s in b.samples]
    assert sum(a.histogram.values()) == 8
    assert a.g == genus_superelliptic(3, 2) == 1
