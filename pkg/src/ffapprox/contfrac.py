"""Continued fractions in GF(q)((1/t)), convergents and exponent estimates.

Over a function field, the convergents P_n/Q_n of beta satisfy
``|beta - P_n/Q_n| = |Q_n|^-1 |Q_{n+1}|^-1`` exactly. So the approximation
exponent seen at step n is ``2 + deg a_{n+1} / deg Q_n``, a rational number
that needs no floating point.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import (IndistinguishableAtPrecision, InsufficientData, RationalInput,
                     ZeroDenominator, DomainError)
from .laurent import INF, LaurentSeries, AlgebraicSeries, _poly_coeffs
from .poly import Poly, RatFunc


@dataclass
class ContinuedFraction:
    """Partial quotients ``a`` of an expansion.

    Only ``a[:certified]`` are guaranteed to be partial quotients of the
    series itself; the rest belong to its truncation.  ``terminated`` is set
    for exact (rational) input whose expansion ends.
    """

    a: list
    certified: int
    terminated: bool = False
    prec: object = INF

    def __len__(self):
        return len(self.a)

    def degrees(self):
        return [p.deg for p in self.a]


@dataclass(frozen=True)
class Convergent:
    P: Poly
    Q: Poly
    n: int


@dataclass
class ExponentReport:
    """Rows are (n, deg a_{n+1}, deg Q_n, e_n); ``running_sup`` is max e_n."""

    rows: list
    running_sup: Fraction
    certified: int

    @property
    def exponents(self):
        return [r[3] for r in self.rows]

    def sup_from(self, min_deg_q):
        """max e_n over rows whose deg Q_n is at least ``min_deg_q``."""
        vals = [r[3] for r in self.rows if r[2] >= min_deg_q]
        return max(vals) if vals else None

    def tail_sup(self, fraction=Fraction(1, 2)):
        """Sup over the rows with deg Q_n in the top part of the certified range.

        A finite stand-in for the lim sup: early rows are dropped.
        """
        if not self.rows:
            return None
        top = self.rows[-1][2]
        return self.sup_from(top * fraction)

    def to_json(self):
        return {"rows": [[n, da, dq, str(e)] for n, da, dq, e in self.rows],
                "running_sup": str(self.running_sup), "certified": self.certified}


def _euclid(A, B, limit):
    """Partial quotients of A/B (B != 0) by the Euclidean algorithm."""
    out = []
    while B and len(out) < limit:
        q, r = divmod(A, B)
        out.append(q)
        A, B = B, r
    return out, not B


def cf_expand(beta, limit=10 ** 6):
    """Continued fraction of a series (or of an exact rational function).

    For a series known below z^N, the quotient a_{n+1} is certified while
    2*deg Q_{n+1} < N: a perturbation of valuation >= N then moves the
    complete quotient by less than 1, leaving its polynomial part intact.
    """
    if isinstance(beta, AlgebraicSeries):
        beta = beta.series
    if isinstance(beta, Poly):
        beta = RatFunc(beta)
    if isinstance(beta, RatFunc):
        a, done = _euclid(beta.num, beta.den, limit)
        return ContinuedFraction(a, len(a), done, INF)
    F = beta.field
    if beta.is_exact:
        if not beta.c:
            return ContinuedFraction([Poly(F, ())], 1, True, INF)
        M = max(0, beta.v + len(beta.c) - 1)
        A, _ = beta.truncate(M + 1).to_fraction()
        a, done = _euclid(A, Poly.monomial(F, M), limit)
        return ContinuedFraction(a, len(a), done, INF)
    N = beta.prec
    if N <= 0:
        return ContinuedFraction([], 0, False, N)
    A, M = beta.to_fraction()
    a, _ = _euclid(A, Poly.monomial(F, M), limit)
    # certification: a_0 needs prec > 0; a_{n+1} needs 2 deg Q_{n+1} < N
    certified = 1 if a else 0
    deg_q = 0
    for i in range(1, len(a)):
        deg_q += a[i].deg
        if 2 * deg_q >= N:
            break
        certified = i + 1
    return ContinuedFraction(a, certified, False, N)


def convergents(cf, certified_only=False):
    """(P_n, Q_n) from P_n = a_n P_{n-1} + P_{n-2}, likewise for Q."""
    a = cf.a[:cf.certified] if certified_only else cf.a
    if not a:
        return []
    F = a[0].field
    one, zero = Poly(F, [1]), Poly(F, ())
    p_prev, q_prev = one, zero
    p_cur, q_cur = a[0], one
    out = [Convergent(p_cur, q_cur, 0)]
    for n in range(1, len(a)):
        p_prev, p_cur = p_cur, a[n] * p_cur + p_prev
        q_prev, q_cur = q_cur, a[n] * q_cur + q_prev
        out.append(Convergent(p_cur, q_cur, n))
    return out


def exponent_estimate(cf):
    """Exact exponents e_n = 2 + deg a_{n+1}/deg Q_n over certified indices."""
    if cf.terminated:
        raise RationalInput("the expansion terminates: the input is rational")
    if cf.certified < 2:
        raise InsufficientData("need at least two certified partial quotients")
    rows = []
    deg_q = 0
    best = None
    for n in range(1, cf.certified - 1):
        deg_q += cf.a[n].deg
        da = cf.a[n + 1].deg
        e = 2 + Fraction(da, deg_q)
        best = e if best is None else max(best, e)
        rows.append((n, da, deg_q, e))
    if best is None:
        raise InsufficientData("no certified index with deg Q_n >= 1")
    return ExponentReport(rows, best, cf.certified)


@dataclass
class AuditRow:
    n: int
    deg_y: int
    deg_m: object
    prediction: int
    residual: object


def approximation_audit(f, convs):
    """deg of m = F(P_n, Q_n) against d*deg Q_n - deg Q_n - deg Q_{n+1}.

    ``F(x, y) = y^d f(x/y)`` is the homogenization of f; the last convergent
    is only used as Q_{n+1}.
    """
    f = _poly_coeffs(f)
    d = len(f) - 1
    rows = []
    for cur, nxt in zip(convs, convs[1:]):
        P, Q = cur.P, cur.Q
        if not Q:
            raise ZeroDenominator(f"convergent {cur.n} has Q = 0")
        m = homogenize_eval(f, P, Q)
        pred = d * Q.deg - Q.deg - nxt.Q.deg
        dm = m.deg if m else None
        rows.append(AuditRow(cur.n, Q.deg, dm, pred, None if dm is None else dm - pred))
    return rows


def homogenize_eval(f, x, y):
    """sum f_i x^i y^(d-i)."""
    f = _poly_coeffs(f)
    d = len(f) - 1
    if not y:
        raise ZeroDenominator("y = 0")
    F = f[0].field
    ypow = [Poly(F, [1])]
    for _ in range(d):
        ypow.append(ypow[-1] * y)
    acc = Poly(F, ())
    xp = Poly(F, [1])
    for i, c in enumerate(f):
        acc = acc + c * xp * ypow[d - i]
        xp = xp * x
    return acc


def height(f):
    """Max t-degree of the coefficients of a defining polynomial."""
    f = _poly_coeffs(f)
    return max(c.deg for c in f if c)


def wirsing_proximity(beta, alpha):
    """(H, v(beta - alpha)/H) with H the height of alpha's polynomial."""
    H = height(alpha.f)
    if H <= 0:
        raise DomainError("alpha has height 0")
    diff = beta.series - alpha.series
    if not diff.c:
        raise IndistinguishableAtPrecision(
            f"beta - alpha vanishes to the available precision {diff.prec}")
    return H, Fraction(diff.v, H)
