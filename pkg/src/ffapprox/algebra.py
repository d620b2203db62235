"""Quotient algebras R[x]/(f) over a coefficient domain R.

The usual domain is GF(q)(t) (``RationalFunctionField``), giving the algebra
in which a generic root of f lives.  A ``QuotientAlgebra`` is itself a valid
coefficient domain, so towers such as C[w]/(w^d - c) with
C = GF(q)(t)[s]/(g) are built by nesting.

Traces are computed from power sums of the roots of f, which come from the
Newton recurrence in the direction e -> p only: that direction never divides
by an integer and so stays valid in characteristic p.
"""

from .errors import InseparableInput, NotInvertible
from .linalg import RatMatrix, solve
from .poly import Poly, RatFunc, RationalFunctionField


# -- dense polynomials in x over a domain, as ascending lists --

def _xtrim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def _xsub(a, b, zero):
    n = max(len(a), len(b))
    a = list(a) + [zero] * (n - len(a))
    b = list(b) + [zero] * (n - len(b))
    return _xtrim([x - y for x, y in zip(a, b)])


def _xmul(a, b, zero):
    if not a or not b:
        return []
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return _xtrim(out)


def _xdivmod(a, b, dom):
    a, b = _xtrim(a), _xtrim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = len(b) - 1
    if len(a) <= db:
        return [], a
    inv = dom.inv(b[-1])
    rem = list(a)
    quo = [dom.zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i] * inv
        if c:
            quo[i - db] = c
            for j in range(db):
                if b[j]:
                    rem[i - db + j] = rem[i - db + j] - c * b[j]
        rem[i] = dom.zero
    return _xtrim(quo), _xtrim(rem[:db])


def xpoly_gcd(a, b, dom):
    """Monic gcd of two x-polynomials over a field domain."""
    a, b = _xtrim(a), _xtrim(b)
    while b:
        a, b = b, _xdivmod(a, b, dom)[1]
    if not a:
        return a
    inv = dom.inv(a[-1])
    return [c * inv for c in a]


def xpoly_derivative(a, dom):
    return _xtrim([dom.from_int(i) * c for i, c in enumerate(a)][1:])


def _domain_of(coeffs):
    for c in coeffs:
        if isinstance(c, (Poly, RatFunc)):
            return RationalFunctionField(c.field)
        if isinstance(c, AlgElem):
            return c.alg
    raise TypeError("cannot infer a coefficient domain from integer coefficients")


def power_sums(f, m, dom=None):
    """Power sums p_0 .. p_m of the roots of the x-polynomial ``f``.

    ``f`` is an ascending coefficient list.  It is made monic first; then
    p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k.
    """
    if dom is None:
        dom = _domain_of(f)
    f = _xtrim([dom.convert(c) for c in f])
    if not f:
        raise ValueError("power sums of the zero polynomial")
    d = len(f) - 1
    inv = dom.inv(f[-1])
    # monic coefficients c_0 .. c_{d-1}; e_k = (-1)^k c_{d-k}
    c = [x * inv for x in f[:-1]]
    p = [dom.from_int(d)]
    for k in range(1, m + 1):
        acc = dom.zero
        for i in range(1, min(k - 1, d) + 1):
            acc = acc - c[d - i] * p[k - i]
        if k <= d:
            acc = acc - dom.from_int(k) * c[d - k]
        p.append(acc)
    return p


class QuotientAlgebra:
    """The algebra dom[x]/(f) with elements reduced to degree < deg f."""

    def __init__(self, f, dom=None):
        if dom is None:
            dom = _domain_of(f)
        f = _xtrim([dom.convert(c) for c in f])
        if len(f) < 2:
            raise ValueError("modulus must have positive degree")
        self.dom = dom
        self.f = tuple(f)
        self.d = len(f) - 1
        inv = dom.inv(f[-1])
        self._monic = tuple(c * inv for c in f[:-1])
        self._psums = tuple(power_sums(f, self.d - 1, dom))
        self.is_field = False
        self.zero = AlgElem(self, [dom.zero] * self.d)
        self.one = AlgElem(self, [dom.one] + [dom.zero] * (self.d - 1))
        self.gen = self.element([dom.zero, dom.one]) if self.d > 1 else self.element(
            [-self._monic[0]])

    def __eq__(self, other):
        return isinstance(other, QuotientAlgebra) and other.dom == self.dom and other.f == self.f

    def __hash__(self):
        return hash(("QuotientAlgebra", self.f))

    def __repr__(self):
        return f"QuotientAlgebra(deg={self.d}, over {self.dom!r})"

    # -- domain protocol (so that algebras nest) --

    def from_int(self, k):
        return self.element([self.dom.from_int(k)])

    def convert(self, x):
        if isinstance(x, AlgElem):
            if x.alg is not self and x.alg != self:
                raise TypeError("element of a different algebra")
            return x
        return self.element([self.dom.convert(x)])

    def dim(self):
        return self.d * self.dom.dim()

    def to_vector(self, x):
        out = []
        for c in x.c:
            out.extend(self.dom.to_vector(c))
        return out

    def from_vector(self, v):
        k = self.dom.dim()
        return self.element([self.dom.from_vector(v[i * k:(i + 1) * k]) for i in range(self.d)])

    def ratfunc_field(self):
        dom = self.dom
        while isinstance(dom, QuotientAlgebra):
            dom = dom.dom
        return dom

    # -- elements --

    def element(self, coeffs):
        """Reduce an arbitrary x-polynomial (ascending coefficients) mod f."""
        dom = self.dom
        r = [dom.convert(c) for c in coeffs]
        d, g = self.d, self._monic
        for i in range(len(r) - 1, d - 1, -1):
            c = r[i]
            if c:
                base = i - d
                for j in range(d):
                    if g[j]:
                        r[base + j] = r[base + j] - c * g[j]
        r = r[:d] + [dom.zero] * max(0, d - len(r))
        return AlgElem(self, r)

    def mul(self, a, b):
        zero = self.dom.zero
        prod = [zero] * (2 * self.d - 1)
        for i, x in enumerate(a.c):
            if x:
                for j, y in enumerate(b.c):
                    if y:
                        prod[i + j] = prod[i + j] + x * y
        return self.element(prod)

    def power_sums(self, m):
        return power_sums(self.f, m, self.dom)

    def trace(self, h):
        """Trace of ``h`` over the coefficient domain."""
        h = self.convert(h)
        acc = self.dom.zero
        for c, p in zip(h.c, self._psums):
            if c:
                acc = acc + c * p
        return acc

    def absolute_trace(self, h):
        """Trace all the way down to GF(q)(t) through nested algebras."""
        tr = self.trace(h)
        if isinstance(self.dom, QuotientAlgebra):
            return self.dom.absolute_trace(tr)
        return tr

    def is_separable(self):
        if not self.dom.is_field:
            raise TypeError("separability test needs a field of coefficients")
        fx = xpoly_derivative(list(self.f), self.dom)
        if not fx:
            return False
        return len(xpoly_gcd(list(self.f), fx, self.dom)) == 1

    def inv(self, a):
        a = self.convert(a)
        if not a:
            raise NotInvertible("zero is not invertible")
        if self.dom.is_field:
            return self._inv_xgcd(a)
        return self._inv_linear(a)

    def _inv_xgcd(self, a):
        dom = self.dom
        r0, r1 = list(self.f), _xtrim(a.c)
        s0, s1 = [], [dom.one]
        while r1:
            q, r = _xdivmod(r0, r1, dom)
            r0, r1 = r1, r
            s0, s1 = s1, _xsub(s0, _xmul(q, s1, dom.zero), dom.zero)
        if len(r0) != 1:
            raise NotInvertible("element shares a factor with the modulus")
        inv = dom.inv(r0[0])
        return self.element([c * inv for c in s0])

    def _inv_linear(self, a):
        # fast path: a = gamma * x^m with gamma invertible in the domain
        nz = [i for i, c in enumerate(a.c) if c]
        if len(nz) == 1 and self._is_binomial():
            m = nz[0]
            g = self.dom.inv(a.c[m])
            # x^d = c0 with c0 = -monic[0]; x^{-m} = x^{d-m} / c0
            c0 = -self._monic[0]
            if m == 0:
                return self.element([g])
            return self.element([self.dom.zero] * (self.d - m) + [g * self.dom.inv(c0)])
        F = self.ratfunc_field()
        n = self.dim()
        basis = []
        for k in range(n):
            e = [F.zero] * n
            e[k] = F.one
            basis.append(self.to_vector(a * self.from_vector(e)))
        M = RatMatrix(F.field, [list(r) for r in zip(*basis)], n)
        x = solve(M, self.to_vector(self.one))
        if x is None:
            raise NotInvertible("element is a zero divisor")
        return self.from_vector(x)

    def _is_binomial(self):
        return all(not c for c in self._monic[1:]) and bool(self._monic[0])


class AlgElem:
    """Element of a ``QuotientAlgebra``: coefficient tuple of length deg f."""

    __slots__ = ("alg", "c")

    def __init__(self, alg, coeffs):
        self.alg = alg
        self.c = tuple(coeffs)

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, AlgElem):
            return self.c == other.c
        try:
            return self.c == self.alg.convert(other).c
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def _coerce(self, other):
        if isinstance(other, AlgElem) and other.alg is self.alg:
            return other
        try:
            return self.alg.convert(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.alg, [x + y for x, y in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.alg, [-x for x in self.c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.alg, [x - y for x, y in zip(self.c, o.c)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if not isinstance(other, AlgElem) or other.alg is not self.alg:
            if isinstance(other, AlgElem) and other.alg == self.alg:
                return self.alg.mul(self, other)
            # scalar from the coefficient domain
            try:
                s = self.alg.dom.convert(other)
            except TypeError:
                return NotImplemented
            return AlgElem(self.alg, [x * s for x in self.c])
        return self.alg.mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result, base = self.alg.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inv(self):
        return self.alg.inv(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def trace(self):
        return self.alg.trace(self)

    def __repr__(self):
        return "AlgElem(" + ", ".join(str(x) for x in self.c) + ")"


def xpoly_eval(coeffs, x, alg):
    """Horner evaluation of an x-polynomial (domain coefficients) at an element."""
    acc = alg.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _as_algebra(f):
    if isinstance(f, QuotientAlgebra):
        return f
    return QuotientAlgebra(f)


def _require_separable(alg):
    if not alg.is_separable():
        raise InseparableInput("gcd(f, f_x) is not constant")


def trace(f, h):
    """Sum of h over the roots of f; ``h`` is an element or an x-polynomial."""
    alg = _as_algebra(f)
    _require_separable(alg)
    if not isinstance(h, AlgElem):
        h = alg.element(h if isinstance(h, (list, tuple)) else [h])
    return alg.trace(h)


def inv_mod(g, f):
    """Inverse of the x-polynomial (or element) ``g`` modulo ``f``."""
    alg = _as_algebra(f)
    if not isinstance(g, AlgElem):
        g = alg.element(g if isinstance(g, (list, tuple)) else [g])
    return alg.inv(g)
