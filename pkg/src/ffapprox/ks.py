"""Kodaira-Spencer matrices of the Thue and superelliptic curves attached to f.

Entries are sums of residues over a Galois orbit of points.  They are
computed without factoring anything: the orbit is represented by a generic
point of a quotient algebra, the local expansion at that point is a power
series with coefficients in the algebra, and the sum over the orbit is the
algebra's trace down to GF(q)(t).

Matrices are defined up to one global sign; the sign used here is that of
the residues at the zeros of y (superelliptic) or of F_y (Thue).
"""

from dataclasses import dataclass, field as dc_field
from math import gcd

import numpy as np

from .algebra import QuotientAlgebra, xpoly_eval
from .errors import NotEtale, NotSquarefree, SpecViolation, WrongShape, PrecisionError
from .laurent import _poly_coeffs
from .linalg import RatMatrix, rank as _rank
from .poly import Poly, RatFunc, RationalFunctionField


@dataclass
class CurveSpec:
    kind: str          # "thue" or "superelliptic"
    d: int
    k: int = None
    p: int = None

    @classmethod
    def of(cls, kind, f, k=None):
        f = _poly_coeffs(f)
        return cls(kind, len(f) - 1, k, f[0].field.p)

    def validate(self):
        d, k, p = self.d, self.k, self.p
        if self.kind == "thue":
            if d < 4:
                raise SpecViolation(f"Thue curves need d >= 4 (got {d})")
            if p is not None and d % p == 0:
                raise SpecViolation(f"p = {p} divides d = {d}")
        elif self.kind == "superelliptic":
            if k is None or k < 2:
                raise SpecViolation("superelliptic curves need k >= 2")
            if gcd(k, d) != 1:
                raise SpecViolation(f"gcd(k, d) = gcd({k}, {d}) != 1")
            if p is not None and k % p == 0:
                raise SpecViolation(f"p = {p} divides k = {k}")
            if (d - 1) * (k - 1) < 2:
                raise SpecViolation("genus 0 curve")
        else:
            raise SpecViolation(f"unknown curve kind {self.kind!r}")
        return self

    @property
    def genus(self):
        if self.kind == "thue":
            return (self.d - 1) * (self.d - 2) // 2
        return (self.d - 1) * (self.k - 1) // 2


@dataclass
class DifferentialBasis:
    """Exponent pairs: (a, b) for x^a y^b dx/F_y, or (i, j) for x^i dx/y^j."""

    kind: str
    pairs: list

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def basis(spec):
    spec.validate()
    d, k = spec.d, spec.k
    if spec.kind == "thue":
        pairs = [(a, b) for a in range(d - 2) for b in range(d - 2 - a)]
    else:
        pairs = [(i, j) for i in range(d) for j in range(1, k) if (i + 1) * k + 1 <= j * d]
    return DifferentialBasis(spec.kind, sorted(pairs))


@dataclass
class KSMatrix:
    basis: DifferentialBasis
    entries: RatMatrix
    model: str
    k: int = None
    sign_convention: str = "residues at the zeros of y (or of F_y), positive"

    @property
    def g(self):
        return len(self.basis)

    def __getitem__(self, ij):
        return self.entries[ij]

    def is_zero(self):
        return self.entries.is_zero()

    def structural_ceiling(self):
        if self.model == "thue":
            return thue_ceiling(self.basis)
        return structural_ceiling(self.basis, self.k)

    def __neg__(self):
        return KSMatrix(self.basis, -self.entries, self.model, self.k, self.sign_convention)


def structural_ceiling(b, k):
    """Rank bound for superelliptic matrices from the j + n = k pattern."""
    nu = {}
    for _, j in b:
        nu[j] = nu.get(j, 0) + 1
    return sum(min(nu.get(j, 0), nu.get(k - j, 0)) for j in range(1, k))


def thue_ceiling(b):
    """Rank bound for Thue matrices.

    The automorphism (x, y) -> (z x, z y), z^d = 1, scales the integrand for
    ((a, b), (r, s)) by z^(a+b+r+s+4-2d); its residues cancel over each orbit
    unless a + b + r + s = d - 4.
    """
    d = max(a + bb for a, bb in b) + 3
    return sum(min(c + 1, d - 3 - c) for c in range(d - 3) if d - 4 - c >= 0)


@dataclass
class RankReport:
    rank: int
    kernel_dim: int
    g: int
    ceiling: int

    @property
    def max_rank(self):
        return self.rank == self.g


def ks_rank(M):
    r, kd = _rank(M.entries)
    return RankReport(r, kd, M.g, M.structural_ceiling())


# -- helpers --

def _field_of(f):
    return f[0].field


def _algebra(f):
    F = _field_of(f)
    alg = QuotientAlgebra(f, RationalFunctionField(F))
    if not alg.is_separable():
        raise NotSquarefree("f is not squarefree in x")
    return alg


def _derivs(f, dom):
    F = _field_of(f)
    ft = [dom.convert(c.derivative()) for c in f]
    fx = [dom.convert(c.scale(F.from_int(i))) for i, c in enumerate(f)][1:]
    return ft, fx


def ks_hyperelliptic(f):
    """Closed form for y^2 = f(x): entry (i, l) is the trace of 2 x^(i+l) f_t / f_x^2.

    At a zero P of y, x - P vanishes to order 2, so dx contributes
    2u du / f_x(P) and the residue is 2 P^(i+l) f_t(P) / f_x(P)^2.
    """
    f = _poly_coeffs(f)
    F = _field_of(f)
    d = len(f) - 1
    if F.p == 2 or d % 2 == 0:
        raise WrongShape("the hyperelliptic model needs p and d odd")
    spec = CurveSpec("superelliptic", d, 2, F.p).validate()
    b = basis(spec)
    alg = _algebra(f)
    ft, fx = _derivs(f, alg.dom)
    x = alg.gen
    core = xpoly_eval(ft, x, alg) * (xpoly_eval(fx, x, alg) ** 2).inv() * alg.dom.from_int(2)
    g = len(b)
    powers = [alg.one]
    for _ in range(2 * g):
        powers.append(powers[-1] * x)
    rows = [[alg.trace(powers[i + l] * core) for (l, _) in b] for (i, _) in b]
    return KSMatrix(b, RatMatrix(F, rows, g), "hyperelliptic", 2)


# -- truncated power series in u over an algebra, as lists of length M --

def _smul(a, b, M, zero):
    out = [zero] * M
    for i, x in enumerate(a[:M]):
        if x:
            for j in range(min(len(b), M - i)):
                y = b[j]
                if y:
                    out[i + j] = out[i + j] + x * y
    return out


def _sinv(a, M, zero):
    b0 = a[0].inv()
    out = [b0] + [zero] * (M - 1)
    for n in range(1, M):
        acc = zero
        for i in range(1, min(n, len(a) - 1) + 1):
            if a[i]:
                acc = acc + a[i] * out[n - i]
        out[n] = -(b0 * acc)
    return out


def _sderiv(a, dom):
    return [a[i] * dom.from_int(i) for i in range(1, len(a))] + [a[0] * 0]


def _sadd(a, b):
    return [x + y for x, y in zip(a, b)]


def _seval(coeffs, X, M, zero, one):
    """sum coeffs[i] X^i for scalar coefficients (Horner)."""
    acc = [zero] * M
    for c in reversed(coeffs):
        acc = _smul(acc, X, M, zero)
        acc[0] = acc[0] + one * c
    return acc


def _stimes(a, c):
    return [x * c for x in a]


def ks_superelliptic(f, k):
    """Residues at the zeros of y for y^k = f(x), summed by a trace.

    X(u) is the expansion of x at the generic zero of y, with f(X(u)) = u^k;
    the entry for ((i, j), (l, n)) is the trace of the coefficient of
    u^(j+n-1) in X^(i+l) f_t(X) X'(u) / f_x(X).
    """
    f = _poly_coeffs(f)
    F = _field_of(f)
    d = len(f) - 1
    spec = CurveSpec("superelliptic", d, k, F.p).validate()
    b = basis(spec)
    alg = _algebra(f)
    dom = alg.dom
    ft, fx = _derivs(f, dom)
    zero, one = alg.zero, alg.one
    top = max(j + n for _, j in b for _, n in b)
    M = top + 1
    # Newton iteration for f(X) = u^k in A[[u]] / (u^M)
    target = [zero] * M
    if k < M:
        target[k] = one
    X = [alg.gen] + [zero] * (M - 1)
    fcoeffs = [dom.convert(c) for c in f]
    good = 1
    while good < M:
        resid = [a - b_ for a, b_ in zip(_seval(fcoeffs, X, M, zero, one), target)]
        der = _seval(fx, X, M, zero, one)
        X = [a - b_ for a, b_ in zip(X, _smul(resid, _sinv(der, M, zero), M, zero))]
        good *= 2
    check = [a - b_ for a, b_ in zip(_seval(fcoeffs, X, M, zero, one), target)]
    if any(check):
        raise PrecisionError("local expansion did not converge")
    common = _smul(_smul(_seval(ft, X, M, zero, one), _sderiv(X, alg), M, zero),
                   _sinv(_seval(fx, X, M, zero, one), M, zero), M, zero)
    imax = max(i for i, _ in b)
    pw = [common]
    for _ in range(2 * imax):
        pw.append(_smul(pw[-1], X, M, zero))
    rows = []
    for (i, j) in b:
        rows.append([alg.trace(pw[i + l][j + n - 1]) for (l, n) in b])
    return KSMatrix(b, RatMatrix(F, rows, len(b)), "superelliptic", k)


# -- Thue curves F(x, y) = 1 --

def _thue_setup(f):
    """The residue algebra B = C[w]/(w^d - 1/F(1, s)) with C = F(t)[s]/(F_y(1, s)).

    On F_y = 0 one has x != 0, and with s = y/x the points are cut out by
    F_y(1, s) = 0 and x^d F(1, s) = 1.
    """
    F = _field_of(f)
    d = len(f) - 1
    K = RationalFunctionField(F)
    # F(1, s) = sum f_i s^(d-i): ascending in s the coefficients are f_d .. f_0
    F1 = [K.convert(c) for c in reversed(f)]
    G = [F1[m + 1] * K.from_int(m + 1) for m in range(d)]  # d/ds
    # F_y(1, s) = sum (d - i) f_i s^(d-i-1) is exactly the s-derivative of F(1, s)
    while G and not G[-1]:
        G.pop()
    if len(G) < 2:
        raise NotEtale("F_y(1, s) is constant")
    C = QuotientAlgebra(G, K)
    if not C.is_separable():
        raise NotEtale("F_y(1, s) is not squarefree: the zeros of F_y are not simple")
    val = xpoly_eval(F1, C.gen, C)
    try:
        c = val.inv()
    except ArithmeticError:
        raise NotEtale("F(1, s) vanishes at a zero of F_y") from None
    B = QuotientAlgebra([-c] + [C.zero] * (d - 1) + [C.one], C)
    w = B.gen
    return B, w, w * B.element([C.gen])


def _hom_terms(f):
    """Coefficients of F(x, y) = sum f_i x^i y^(d-i) as {(i, d-i): f_i}."""
    d = len(f) - 1
    return {(i, d - i): c for i, c in enumerate(f) if c}


def _seval2(terms, X, Y, M, zero, one, dom):
    """Series of a bivariate polynomial given as {(i, j): coefficient}."""
    if not terms:
        return [zero] * M
    mi = max(i for i, _ in terms)
    mj = max(j for _, j in terms)
    xp, yp = [[one] + [zero] * (M - 1)], [[one] + [zero] * (M - 1)]
    for _ in range(mi):
        xp.append(_smul(xp[-1], X, M, zero))
    for _ in range(mj):
        yp.append(_smul(yp[-1], Y, M, zero))
    acc = [zero] * M
    for (i, j), c in terms.items():
        acc = _sadd(acc, _stimes(_smul(xp[i], yp[j], M, zero), dom.convert(c)))
    return acc


def _partial(terms, var, F):
    out = {}
    for (i, j), c in terms.items():
        e = (i, j)[var]
        if e % F.p:
            key = (i - 1, j) if var == 0 else (i, j - 1)
            out[key] = c.scale(F.from_int(e))
    return out


def _thue_residues(f, exps):
    """{(A, Bexp): sum of Res x^A y^B F_t dx / (F_y^2 F_x) over the zeros of F_y}."""
    F = _field_of(f)
    B, xbar, ybar = _thue_setup(f)
    K = B.ratfunc_field()
    zero, one = B.zero, B.one
    M = 4
    terms = _hom_terms(f)
    Fx, Fy = _partial(terms, 0, F), _partial(terms, 1, F)
    Ft = {key: c.derivative() for key, c in terms.items() if c.derivative()}
    Y = [ybar, one] + [zero] * (M - 2)
    X = [xbar] + [zero] * (M - 1)
    target = {(0, 0): Poly(F, [1])}
    good = 2  # F(xbar, ybar + u) - 1 = O(u^2)
    while good < M:
        resid = _sadd(_seval2(terms, X, Y, M, zero, one, B),
                      _stimes(_seval2(target, X, Y, M, zero, one, B), B.from_int(-1)))
        der = _seval2(Fx, X, Y, M, zero, one, B)
        X = [a - b_ for a, b_ in zip(X, _smul(resid, _sinv(der, M, zero), M, zero))]
        good *= 2
    resid = _sadd(_seval2(terms, X, Y, M, zero, one, B),
                  _stimes(_seval2(target, X, Y, M, zero, one, B), B.from_int(-1)))
    if any(resid):
        raise PrecisionError("local expansion did not converge")
    fy = _seval2(Fy, X, Y, M, zero, one, B)
    if fy[0]:
        raise NotEtale("F_y does not vanish at the generic point")
    fy_u = fy[1:] + [zero]          # F_y / u
    inv_fy_u = _sinv(fy_u, M, zero)
    inv_fy2 = _smul(inv_fy_u, inv_fy_u, M, zero)  # u^2 / F_y^2
    common = _smul(_smul(_seval2(Ft, X, Y, M, zero, one, B), _sderiv(X, B), M, zero),
                   _smul(inv_fy2, _sinv(_seval2(Fx, X, Y, M, zero, one, B), M, zero),
                         M, zero), M, zero)
    out = {}
    for (A, Bexp) in exps:
        mono = _seval2({(A, Bexp): Poly(F, [1])}, X, Y, M, zero, one, B)
        out[(A, Bexp)] = B.absolute_trace(_smul(mono, common, M, zero)[1])
    return out


def _thue_basis(f):
    f = _poly_coeffs(f)
    F = _field_of(f)
    d = len(f) - 1
    if d % F.p == 0:
        raise WrongShape(f"p = {F.p} divides d = {d}")
    spec = CurveSpec("thue", d, None, F.p).validate()
    if not f[0]:
        raise SpecViolation("f(0) = 0: f is divisible by x")
    _algebra(f)
    return f, F, basis(spec)


def ks_thue(f):
    """Residues of x^(a+r) y^(b+s) F_t dx / (F_y^2 F_x) at the zeros of F_y.

    The smooth model is automatic here: Euler's relation x F_x + y F_y = d F
    shows F_x and F_y never vanish together on F = 1 when p does not divide d.
    """
    f, F, b = _thue_basis(f)
    exps = {(a + r, bb + s) for (a, bb) in b for (r, s) in b}
    res = _thue_residues(f, exps)
    rows = [[res[(a + r, bb + s)] for (r, s) in b] for (a, bb) in b]
    return KSMatrix(b, RatMatrix(F, rows, len(b)), "thue")


def ks_thue_u2(f):
    """The same pairing computed from the other chart: residues at the zeros of F_x.

    Swapping x and y turns the zeros of F_x into the zeros of F_y of the
    reversed form, and dx/F_y = -dy/F_x supplies the sign.
    """
    f, F, b = _thue_basis(f)
    rev = list(reversed(f))
    if not rev[0]:
        raise SpecViolation("leading coefficient vanishes")
    exps = {(bb + s, a + r) for (a, bb) in b for (r, s) in b}
    res = _thue_residues(rev, exps)
    rows = [[-res[(bb + s, a + r)] for (r, s) in b] for (a, bb) in b]
    return KSMatrix(b, RatMatrix(F, rows, len(b)), "thue")


def ks_matrix(f, model, k=None):
    if model == "hyperelliptic":
        return ks_hyperelliptic(f)
    if model == "superelliptic":
        return ks_superelliptic(f, k)
    if model == "thue":
        return ks_thue(f)
    raise SpecViolation(f"unknown model {model!r}")


# -- random search --

@dataclass
class SearchReport:
    p: int
    d: int
    k: int
    coeff_deg_bound: int
    count: int
    seed: int
    histogram: dict = dc_field(default_factory=dict)
    witnesses: list = dc_field(default_factory=list)
    samples: list = dc_field(default_factory=list)
    g: int = 0
    ceiling: int = 0
    rejected: int = 0


def random_f(F, d, bound, rng):
    """Random f of x-degree d with coefficient t-degrees <= bound."""
    while True:
        f = [Poly(F, [F.random_element(rng) for _ in range(bound + 1)]) for _ in range(d + 1)]
        if f[-1] and f[0]:
            return f


def search_max_rank(p, d, k, coeff_deg_bound, count, seed):
    """Sample ``count`` squarefree f and tabulate the KS rank of y^k = f(x)."""
    from .field import GF
    from .riccati import riccati_test
    spec = CurveSpec("superelliptic", d, k, p).validate()
    F = GF(p)
    rng = np.random.default_rng(seed)
    rep = SearchReport(p, d, k, coeff_deg_bound, count, seed, g=spec.genus,
                       ceiling=structural_ceiling(basis(spec), k))
    K = RationalFunctionField(F)
    while len(rep.samples) < count:
        f = random_f(F, d, coeff_deg_bound, rng)
        if not QuotientAlgebra(f, K).is_separable():
            rep.rejected += 1
            continue
        M = ks_hyperelliptic(f) if k == 2 else ks_superelliptic(f, k)
        r = ks_rank(M).rank
        ric = riccati_test(f).riccati
        rep.histogram[r] = rep.histogram.get(r, 0) + 1
        rep.samples.append((f, r, ric))
        if r == spec.genus:
            rep.witnesses.append(f)
    rep.histogram = dict(sorted(rep.histogram.items()))
    return rep
