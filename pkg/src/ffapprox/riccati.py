"""Differential classification of an algebraic series beta with minimal polynomial f.

Differentiating f(t, beta) = 0 gives beta' = -f_t(beta) / f_x(beta), an
element of F(t)[x]/(f) and hence a polynomial in beta of degree < d.  beta
satisfies a Riccati equation exactly when that polynomial has degree <= 2.
"""

from dataclasses import dataclass
from itertools import combinations

from .algebra import QuotientAlgebra, xpoly_eval
from .errors import InseparableInput, WrongShape
from .laurent import _poly_coeffs
from .linalg import RatMatrix, nullspace
from .mpoly import MPoly
from .poly import Poly, RatFunc, RationalFunctionField, as_ratfunc


@dataclass
class DerivativeExpansion:
    """beta' = sum coeffs[i] * beta^i; ``n`` is the top nonzero index (-1 if beta' = 0)."""

    coeffs: list
    n: int

    @property
    def d(self):
        return len(self.coeffs)


@dataclass
class FrobeniusWitness:
    """beta^(p^s) = (a beta + b) / (c beta + d)."""

    s: int
    a: RatFunc
    b: RatFunc
    c: RatFunc
    d: RatFunc

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)


@dataclass
class Classification:
    riccati: bool
    n: int
    frobenius: object = None
    quartic_char2_obstruction: object = None


def _separable_algebra(f):
    f = _poly_coeffs(f)
    if len(f) < 2:
        raise ValueError("f must have positive degree in x")
    F = f[0].field
    alg = QuotientAlgebra(f, RationalFunctionField(F))
    if not alg.is_separable():
        raise InseparableInput("f is not separable in x")
    return f, F, alg


def beta_prime(f):
    """Expansion of beta' in the power basis of F(t)[x]/(f)."""
    f, F, alg = _separable_algebra(f)
    dom = alg.dom
    ft = [dom.convert(c.derivative()) for c in f]
    fx = [dom.convert(c.scale(F.from_int(i))) for i, c in enumerate(f)][1:]
    x = alg.gen
    val = -(xpoly_eval(ft, x, alg) * xpoly_eval(fx, x, alg).inv())
    coeffs = list(val.c)
    n = max((i for i, c in enumerate(coeffs) if c), default=-1)
    return DerivativeExpansion(coeffs, n)


def riccati_test(f):
    exp = beta_prime(f)
    return Classification(exp.n <= 2, exp.n)


def _frobenius_power(alg, s):
    p = alg.dom.field.p
    y = alg.gen
    for _ in range(s):
        y = y ** p
    return y


def frobenius_test(f, s):
    """A Moebius witness for beta^(p^s), or ``None`` if there is none."""
    f, F, alg = _separable_algebra(f)
    if len(f) - 1 < 2:
        raise WrongShape("beta is rational; the Frobenius test needs degree >= 2")
    if s < 1:
        raise ValueError("s must be >= 1")
    x = alg.gen
    Y = _frobenius_power(alg, s)
    cols = [x, alg.one, -(x * Y), -Y]
    M = RatMatrix(F, [[col.c[i] for col in cols] for i in range(alg.d)], 4)
    kernel = nullspace(M)
    cands = list(kernel) + [[u + v for u, v in zip(k1, k2)]
                            for k1, k2 in combinations(kernel, 2)]
    for v in cands:
        a, b, c, d = v
        if a * d - b * c:
            lead = next(e for e in v if e)
            inv = lead.inv()
            return FrobeniusWitness(s, *[e * inv for e in v])
    return None


def frobenius_sweep(f, S):
    """First witness for s = 1..S, or ``None``."""
    for s in range(1, S + 1):
        w = frobenius_test(f, s)
        if w is not None:
            return w
    return None


def quartic_char2_condition(f):
    """a c' + a' c for f = x^4 + a x^3 + b x^2 + c x + d in characteristic 2.

    A nonzero value rules out a Riccati equation for beta.
    """
    f = [as_ratfunc(c) for c in f]
    while f and not f[-1]:
        f.pop()
    if not f:
        raise WrongShape("zero polynomial")
    F = f[0].field
    if F.p != 2 or len(f) != 5:
        raise WrongShape("needs characteristic 2 and degree 4")
    lead = f[4].inv()
    a, c = f[3] * lead, f[1] * lead
    return a * c.derivative() + a.derivative() * c


def classify(f, frobenius_sweep_to=0):
    cls = riccati_test(f)
    if frobenius_sweep_to:
        f2 = _poly_coeffs(f)
        if len(f2) > 2:
            cls.frobenius = frobenius_sweep(f2, frobenius_sweep_to)
    f2 = _poly_coeffs(f)
    if f2[0].field.p == 2 and len(f2) == 5:
        cls.quartic_char2_obstruction = quartic_char2_condition(f2)
    return cls


_NAMES = ("b", "b1", "b2", "b3", "a0", "a1", "a2", "a3")


def cross_ratio_identity_check(p, mutate=False):
    """Cleared numerator of the derivative of the cross ratio of four conjugates.

    Each conjugate obeys b_i' = a2 b_i^2 + a1 b_i + a0 (plus a3 b_i^3 when
    ``mutate``).  The identity says the result is the zero polynomial for a
    Riccati right-hand side; the cubic term survives.
    """
    b, b1, b2, b3, a0, a1, a2, a3 = MPoly.gens(p, _NAMES)

    def deriv(x):
        out = a2 * x * x + a1 * x + a0
        return out + a3 * x * x * x if mutate else out

    db, db1, db2, db3 = (deriv(x) for x in (b, b1, b2, b3))
    # the four terms share the denominator (b-b1)(b3-b2)(b-b2)(b3-b1)
    return ((db - db1) * (b3 - b2) * (b - b2) * (b3 - b1)
            + (db3 - db2) * (b - b1) * (b - b2) * (b3 - b1)
            - (db - db2) * (b - b1) * (b3 - b2) * (b3 - b1)
            - (db3 - db1) * (b - b1) * (b3 - b2) * (b - b2))
