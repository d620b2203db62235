"""Truncated Laurent series in z = 1/t and roots of f(t, x) inside GF(q)((1/t)).

A ``LaurentSeries`` knows its coefficients for z-exponents ``v .. prec-1``.
``prec`` is either an int or ``INF``; the latter marks an exact Laurent
polynomial whose unstored coefficients are zero.  Arithmetic propagates the
pessimistic precision (sum: min of precisions; product and quotient: by
relative precision), so a result never claims a coefficient it cannot know.

``|x| = q^(-v(x))`` is the absolute value at the infinite place: a polynomial
g in t has valuation ``-deg g``.
"""

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .errors import HenselFailure, InseparableInput, PrecisionError
from .poly import Poly, RatFunc, mul_coeffs
from .algebra import QuotientAlgebra

INF = math.inf


class LaurentSeries:
    __slots__ = ("field", "v", "c", "prec")

    def __init__(self, field, v, coeffs, prec=INF):
        c = list(coeffs)
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        c = c[k:]
        v = v + k
        if prec == INF:
            while c and c[-1] == 0:
                c.pop()
            if not c:
                v = INF
        else:
            prec = int(prec)
            if not c or v >= prec:
                c, v = [], prec
            else:
                c = c[:prec - v] + [0] * max(0, prec - v - len(c))
        self.field, self.v, self.c, self.prec = field, v, tuple(c), prec

    # -- constructors --

    @classmethod
    def zero(cls, field, prec=INF):
        return cls(field, 0, [], prec)

    @classmethod
    def one(cls, field):
        return cls(field, 0, [1])

    @classmethod
    def monomial(cls, field, e, c=1):
        """c * z^e (exact)."""
        return cls(field, e, [c])

    @classmethod
    def from_poly(cls, P):
        """Exact expansion of a polynomial in t."""
        if not P:
            return cls.zero(P.field)
        return cls(P.field, -P.deg, list(reversed(P.c)))

    # -- queries --

    @property
    def is_exact(self):
        return self.prec == INF

    def is_zero(self):
        """True if no nonzero coefficient is known (zero to precision)."""
        return not self.c

    @property
    def rel_prec(self):
        return self.prec - self.v if self.c else 0

    def coeff(self, e):
        if e >= self.prec:
            raise PrecisionError(f"coefficient of z^{e} is beyond precision {self.prec}")
        if not self.c or e < self.v:
            return 0
        i = e - self.v
        return self.c[i] if i < len(self.c) else 0

    @property
    def lc(self):
        return self.c[0] if self.c else 0

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.field, self.v, self.c, self.prec) == (other.field, other.v, other.c, other.prec)

    def __hash__(self):
        return hash((self.v, self.c, self.prec))

    def agrees_with(self, other, upto):
        """Coefficients of z^e agree for all e < upto."""
        lo = min(self.v if self.c else upto, other.v if other.c else upto)
        return all(self.coeff(e) == other.coeff(e) for e in range(int(min(lo, upto)), upto))

    # -- precision control --

    def truncate(self, N):
        """Forget everything at and beyond z^N."""
        if N >= self.prec:
            if self.is_exact:
                return LaurentSeries(self.field, self.v if self.c else N, self.c, N)
            return self
        return LaurentSeries(self.field, self.v if self.c else N, self.c, N)

    def exact(self):
        """Treat the known coefficients as an exact Laurent polynomial."""
        if self.is_exact:
            return self
        return LaurentSeries(self.field, self.v if self.c else 0, self.c, INF)

    # -- arithmetic --

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, Poly):
            return LaurentSeries.from_poly(other)
        if isinstance(other, int):
            return LaurentSeries(self.field, 0, [self.field.from_int(other)])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        prec = min(self.prec, o.prec)
        if not self.c:
            return o.truncate(prec) if prec != INF else o
        if not o.c:
            return self.truncate(prec) if prec != INF else self
        v = min(self.v, o.v)
        if prec == INF:
            end = max(self.v + len(self.c), o.v + len(o.c))
        else:
            end = prec
        if end <= v:
            return LaurentSeries(F, prec, [], prec)
        out = [0] * (end - v)
        for s in (self, o):
            off = s.v - v
            for i, x in enumerate(s.c[:max(0, end - s.v)]):
                out[off + i] = F.add(out[off + i], x)
        return LaurentSeries(F, v, out, prec)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return LaurentSeries(F, self.v if self.c else self.prec, [F.neg(x) for x in self.c],
                             self.prec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        if self.is_exact and not self.c or o.is_exact and not o.c:
            return LaurentSeries.zero(F)
        va = self.v if self.c else self.prec
        vb = o.v if o.c else o.prec
        prec = va + vb + min(self.rel_prec if self.c else 0 if not self.is_exact else INF,
                             o.rel_prec if o.c else 0 if not o.is_exact else INF)
        if not self.c or not o.c:
            return LaurentSeries(F, prec, [], prec)
        a, b = list(self.c), list(o.c)
        if prec != INF:
            keep = int(prec - va - vb)
            a, b = a[:keep], b[:keep]
        prod = mul_coeffs(F, a, b)
        return LaurentSeries(F, va + vb, prod, prec)

    __rmul__ = __mul__

    def scale(self, k):
        F = self.field
        if not k:
            return LaurentSeries(F, self.prec, [], self.prec) if not self.is_exact else \
                LaurentSeries.zero(F)
        return LaurentSeries(F, self.v, [F.mul(x, k) for x in self.c], self.prec)

    def shift(self, k):
        """Multiply by z^k."""
        if not self.c:
            return LaurentSeries(self.field, self.prec + k, [], self.prec + k)
        return LaurentSeries(self.field, self.v + k, self.c, self.prec + k)

    def inv(self, prec=None):
        """Multiplicative inverse.

        For an exact series ``prec`` (absolute) must be given; for a truncated
        one the natural precision ``prec - 2v`` is used (or the smaller
        requested value).
        """
        if not self.c:
            raise ZeroDivisionError("inverse of a series that is zero to precision")
        F = self.field
        natural = self.prec - 2 * self.v if not self.is_exact else INF
        if prec is None:
            if natural == INF:
                raise PrecisionError("inverse of an exact series needs an explicit precision")
            prec = natural
        prec = min(prec, natural)
        n = int(prec + self.v)  # number of coefficients of the inverse
        if n <= 0:
            return LaurentSeries(F, prec, [], prec)
        return LaurentSeries(F, -self.v, _series_inverse(F, self.c, n), prec)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def div(self, other, prec):
        """self / other to absolute precision at most ``prec``."""
        if not other.c:
            raise ZeroDivisionError("division by a series that is zero to precision")
        va = self.v if self.c else self.prec
        need = prec - va  # absolute precision required of the inverse
        q = self * other.inv(need)
        return q.truncate(prec) if q.prec > prec else q

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result, base = LaurentSeries.one(self.field), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self):
        """d/dt: the coefficient of z^(e+1) is -e times that of z^e."""
        F = self.field
        if not self.c:
            return LaurentSeries(F, self.prec + 1, [], self.prec + 1) if not self.is_exact \
                else self
        out = [F.neg(F.mul(F.from_int(self.v + i), x)) for i, x in enumerate(self.c)]
        return LaurentSeries(F, self.v + 1, out, self.prec + 1)

    def frobenius(self, s=1):
        """The p^s-th power, computed coefficientwise."""
        F = self.field
        e = F.p ** s
        if not self.c:
            return LaurentSeries(F, self.prec * e, [], self.prec * e) if not self.is_exact \
                else self
        out = [0] * ((len(self.c) - 1) * e + 1)
        for i, x in enumerate(self.c):
            out[i * e] = F.pow(x, e)
        prec = self.prec * e if not self.is_exact else INF
        return LaurentSeries(F, self.v * e, out, prec)

    # -- conversion --

    def poly_part(self):
        """The polynomial (in t) made of the terms z^e with e <= 0."""
        if self.prec <= 0:
            raise PrecisionError("polynomial part is not certified")
        if not self.c or self.v > 0:
            return Poly(self.field, ())
        top = -self.v
        coeffs = [self.coeff(-k) for k in range(top + 1)]
        return Poly(self.field, coeffs)

    def to_fraction(self):
        """(A, M) with the known part of the series equal to A / t^M.

        Only for finite precision; M = prec - 1.
        """
        if self.is_exact:
            raise PrecisionError("to_fraction needs a truncated series")
        M = self.prec - 1
        F = self.field
        if not self.c:
            return Poly(F, ()), M
        # coefficient of z^e becomes coefficient of t^(M - e)
        out = [0] * (M - self.v + 1)
        for i, x in enumerate(self.c):
            out[M - (self.v + i)] = x
        if M < 0:
            raise PrecisionError("series has no certified coefficients at or above z^0")
        return Poly(F, out), M

    def __repr__(self):
        return f"LaurentSeries({self})"

    def __str__(self):
        terms = []
        F = self.field
        for i, x in enumerate(self.c):
            if not x:
                continue
            e = self.v + i
            cs = str(x) if F.n == 1 else str(F.vector(x))
            mono = "1" if e == 0 else ("z" if e == 1 else f"z^{e}")
            terms.append(mono if x == 1 and e != 0 else (cs if e == 0 else f"{cs}*{mono}"))
        body = " + ".join(terms) if terms else "0"
        if self.is_exact:
            return body
        return f"{body} + O(z^{self.prec})"

    def to_json(self):
        F = self.field
        return {"valuation": None if not self.c else int(self.v),
                "coeffs": [F.vector(x) for x in self.c],
                "prec": None if self.is_exact else int(self.prec)}

    @classmethod
    def from_json(cls, field, data):
        prec = data.get("prec")
        v = data.get("valuation")
        coeffs = [field.element(x if isinstance(x, list) else [x]) for x in data["coeffs"]]
        return cls(field, 0 if v is None else int(v), coeffs, INF if prec is None else int(prec))


def _series_inverse(F, c, n):
    """First n coefficients of 1/(c0 + c1 z + ...) with c0 != 0."""
    c = list(c[:n]) + [0] * max(0, n - len(c))
    inv0 = F.inv(c[0])
    if F.n == 1 and n > 64:
        # Newton iteration b <- b (2 - c b), doubling the precision
        p = F.p
        b = [inv0]
        k = 1
        while k < n:
            k = min(2 * k, n)
            cb = mul_coeffs(F, c[:k], b)[:k]
            cb = [(-x) % p for x in cb]
            cb[0] = (cb[0] + 2) % p
            b = mul_coeffs(F, b, cb)[:k]
        return b
    b = [inv0] + [0] * (n - 1)
    for k in range(1, n):
        acc = 0
        for i in range(1, min(k, len(c) - 1) + 1):
            if c[i] and b[k - i]:
                acc = F.add(acc, F.mul(c[i], b[k - i]))
        b[k] = F.neg(F.mul(inv0, acc))
    return b


def from_ratfunc(r, N):
    """Expansion of a rational function at t = infinity, known below z^N."""
    if isinstance(r, Poly):
        r = RatFunc(r)
    F = r.field
    if not r.num:
        return LaurentSeries.zero(F, N)
    num = LaurentSeries.from_poly(r.num)
    if r.den.deg == 0:
        s = num.scale(F.inv(r.den.lc))
        return s.truncate(N)
    den = LaurentSeries.from_poly(r.den)
    return (num * den.inv(N - num.v)).truncate(N)


# -- polynomials in x with coefficients in GF(q)[t] --

def _poly_coeffs(f):
    out = []
    for c in f:
        out.append(c.num if isinstance(c, RatFunc) and c.is_poly() else c)
    while out and not out[-1]:
        out.pop()
    return out


def x_derivative(f):
    F = f[0].field
    return _poly_coeffs([c.scale(F.from_int(i)) for i, c in enumerate(f)][1:]) or [Poly(F, ())]


def t_derivative(f):
    return [c.derivative() for c in f]


def eval_series(f, x):
    """f(x) for f an x-polynomial with ``Poly`` coefficients and x a series."""
    acc = LaurentSeries.from_poly(f[-1])
    for c in reversed(f[:-1]):
        acc = acc * x + LaurentSeries.from_poly(c)
    return acc


def taylor_shift(coeffs, s):
    """Coefficients (series) of g(s + y) in y, given those of g."""
    b = list(coeffs)
    n = len(b) - 1
    for k in range(n):
        for i in range(n - 1, k - 1, -1):
            b[i] = b[i] + s * b[i + 1]
    return b


def check_separable(f):
    F = f[0].field
    fx = x_derivative(f)
    if not any(fx):
        raise InseparableInput("f_x vanishes identically")
    alg = QuotientAlgebra(list(f))
    if not alg.is_separable():
        raise InseparableInput("f and f_x share a factor")


@dataclass
class AlgebraicSeries:
    """A root of ``f`` in GF(q)((1/t)) known below z^prec."""

    f: list
    series: LaurentSeries
    d: int
    slack: int = 0
    seed_agreement: object = None
    newton_steps: int = 0
    residual_valuation: object = None

    @property
    def prec(self):
        return self.series.prec

    @property
    def field(self):
        return self.series.field


def _valuation(s):
    return s.v if s.c else INF


def _isolates_root(g):
    """Newton-polygon test that y = 0 is closer to exactly one root of g(y).

    ``g`` holds exact series coefficients of g(y) = f(x0 + y).  The segment
    from (0, v(g0)) to (1, v(g1)) must be strictly steeper than the segment
    from (1, v(g1)) to any later point: then one root sits at distance
    v(g0) - v(g1) and every other root is strictly farther away.
    """
    v0, v1 = _valuation(g[0]), _valuation(g[1])
    if v1 == INF:
        return False
    if v0 == INF:
        return True
    for k in range(2, len(g)):
        vk = _valuation(g[k])
        if vk == INF:
            continue
        if (k - 1) * (v0 - v1) <= v1 - vk:
            return False
    return True


def newton_lift(f, seed, N):
    """Lift ``seed`` to a root of ``f`` known below z^N.

    ``f`` is an ascending list of ``Poly`` coefficients in x.  The seed's known
    coefficients are read as an exact Laurent polynomial; it must be strictly
    closer to one root of f than that root is to any other root (checked with
    the Newton polygon of f(seed + y)), else ``HenselFailure``.
    """
    f = _poly_coeffs(f)
    if len(f) < 2:
        raise ValueError("f must have positive degree in x")
    check_separable(f)
    F = f[0].field
    d = len(f) - 1
    if d == 1:
        series = from_ratfunc(RatFunc(-f[0], f[1]), N)
        return AlgebraicSeries(list(f), series, 1, 0, None, 0, INF)
    fx = x_derivative(f)
    fcoeffs = [LaurentSeries.from_poly(c) for c in f]
    x = seed.exact()
    g = taylor_shift(fcoeffs, x)
    if not _isolates_root(g):
        raise HenselFailure("seed does not isolate a single root of f")
    kappa = _valuation(g[0]) - _valuation(g[1])
    agreement = kappa
    steps = 0
    while kappa < N:
        fx_val = eval_series(fx, x)
        f_val = eval_series(f, x)
        x = (x - f_val.div(fx_val, N)).exact()
        steps += 1
        new_f, new_fx = eval_series(f, x), eval_series(fx, x)
        new_kappa = _valuation(new_f) - _valuation(new_fx)
        if new_kappa <= kappa:
            raise PrecisionError("Newton iteration stalled")
        kappa = new_kappa
    series = x.truncate(N)
    resid = eval_series(f, series.exact())
    rv = _valuation(resid)
    slack = 0 if rv == INF else max(0, int(N - rv))
    return AlgebraicSeries(list(f), series, d, slack, agreement, steps, rv)


# -- root finding in the residue field --

def _poly_powmod(base, e, mod):
    result = Poly(base.field, [1])
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        e >>= 1
        if e:
            base = (base * base) % mod
    return result


def field_roots(R):
    """Distinct roots in GF(q) of a polynomial R (variable name immaterial)."""
    F = R.field
    if R.deg <= 0:
        return []
    if F.q <= 1 << 12:
        return [a for a in F.elements() if R(a) == 0]
    y = Poly(F, [0, 1])
    g = R.gcd(_poly_powmod(y, F.q, R) - y)
    rng = np.random.default_rng(0x5EED)
    return sorted(_split_linear(g, rng))


def _split_linear(g, rng):
    F = g.field
    if g.deg <= 0:
        return []
    if g.deg == 1:
        return [F.neg(g.monic().c[0])]
    y = Poly(F, [0, 1])
    while True:
        a = F.random_element(rng)
        if F.p == 2:
            # trace map y -> sum (a y)^(2^i) splits roots by absolute trace
            h = Poly(F, [0, a]) % g
            acc = h
            for _ in range(F.n - 1):
                h = (h * h) % g
                acc = acc + h
        else:
            acc = _poly_powmod(y + Poly(F, [a]), (F.q - 1) // 2, g) - Poly(F, [1])
        d = g.gcd(acc)
        if 0 < d.deg < g.deg:
            return _split_linear(d, rng) + _split_linear(g // d, rng)


def _multiplicity(R, c):
    lin = Poly(R.field, [R.field.neg(c), 1])
    m = 0
    while R and R(c) == 0:
        R = R // lin
        m += 1
    return m


@dataclass
class RootSearch:
    roots: list
    skipped: list = dc_field(default_factory=list)


def _lower_hull(points):
    hull = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above the segment hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def laurent_roots(f, N):
    """All roots of f lying in GF(q)((1/t)), each known below z^N.

    Roots needing a ramified or residue-field extension are not returned;
    they are listed in ``skipped`` with their count and valuation.
    """
    f = _poly_coeffs(f)
    check_separable(f)
    F = f[0].field
    out = RootSearch([])
    coeffs = [LaurentSeries.from_poly(c) for c in f]
    _search(f, coeffs, LaurentSeries.zero(F), -INF, N, out)
    return out


def _search(f, g, prefix, mu_min, N, out):
    F = prefix.field
    while len(g) > 1 and not g[0].c:
        # the prefix itself is an exact root
        out.roots.append(AlgebraicSeries(list(f), prefix.truncate(N), len(f) - 1, 0, INF, 0, INF))
        g = g[1:]
    if len(g) <= 1:
        return
    pts = [(i, g[i].v) for i in range(len(g)) if g[i].c]
    hull = _lower_hull(pts)
    for (i0, v0), (i1, v1) in zip(hull, hull[1:]):
        mu = Fraction(-(v1 - v0), i1 - i0)
        if mu <= mu_min:
            continue
        count = i1 - i0
        if mu.denominator != 1:
            out.skipped.append({"kind": "ramified", "valuation": mu, "count": count})
            continue
        mu = int(mu)
        V = v0 + i0 * mu
        res = [0] * (count + 1)
        for i in range(i0, i1 + 1):
            if g[i].c and g[i].v + i * mu == V:
                res[i - i0] = g[i].lc
        R = Poly(F, res)
        found = 0
        for c in field_roots(R):
            if c == 0:
                continue
            m = _multiplicity(R, c)
            found += m
            step = LaurentSeries.monomial(F, mu, c)
            if m == 1:
                out.roots.append(newton_lift(f, prefix + step, N))
            else:
                shifted = taylor_shift(g, step)
                _search(f, shifted, prefix + step, mu, N, out)
        if found < count:
            out.skipped.append({"kind": "residue_extension", "valuation": Fraction(mu),
                                "count": count - found})
