"""Polynomials over GF(q) in the variable t, and rational functions in t.

``Poly`` stores an ascending tuple of field element codes with no trailing
zeros.  The zero polynomial has degree ``DEG_ZERO`` (negative infinity), so
``deg(a*b) == deg(a) + deg(b)`` holds without special cases.

Integers mixed into arithmetic are read through the ring map Z -> GF(p).
"""

import numpy as np

from .field import GF

DEG_ZERO = float("-inf")

# below this length schoolbook multiplication beats Kronecker packing
_KRON_MIN = 24


def _kron_mul(a, b, p):
    """Product of two coefficient lists over GF(p) via one big-integer multiply."""
    bound = min(len(a), len(b)) * (p - 1) ** 2
    for width, dtype in ((1, "<u1"), (2, "<u2"), (4, "<u4"), (8, "<u8")):
        if bound < 1 << (8 * width):
            break
    x = int.from_bytes(np.asarray(a, dtype=dtype).tobytes(), "little")
    y = int.from_bytes(np.asarray(b, dtype=dtype).tobytes(), "little")
    n = len(a) + len(b) - 1
    raw = (x * y).to_bytes(n * width, "little")
    return (np.frombuffer(raw, dtype=dtype) % p).tolist()


def _school_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [c % p for c in out]


def mul_coeffs(F, a, b):
    """Multiply two ascending coefficient sequences over ``F``."""
    if not a or not b:
        return []
    if F.n == 1:
        if min(len(a), len(b)) >= _KRON_MIN:
            return _kron_mul(a, b, F.p)
        return _school_mul(a, b, F.p)
    add, mul = F.add, F.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return out


def _gcd_prime(a, b, p):
    """Monic gcd of trimmed coefficient lists over GF(p)."""
    if min(len(a), len(b)) > 24:
        return _gcd_prime_np(a, b, p)
    while b:
        db = len(b) - 1
        inv = pow(b[-1], p - 2, p)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i] * inv % p
            if c:
                base = i - db
                for j in range(db):
                    a[base + j] = (a[base + j] - c * b[j]) % p
            a.pop()
        while a and not a[-1]:
            a.pop()
        a, b = b, a
    if a and a[-1] != 1:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return tuple(a)


def _gcd_prime_np(a, b, p):
    # same Euclid, one vectorized row update per quotient term
    a = np.array(a, dtype=np.int64)
    b = np.array(b, dtype=np.int64)
    while len(b):
        db = len(b) - 1
        inv = pow(int(b[-1]), p - 2, p)
        low = b[:db]
        for i in range(len(a) - 1, db - 1, -1):
            c = int(a[i]) * inv % p
            if c:
                a[i - db:i] = (a[i - db:i] - c * low) % p
        a = a[:db]
        nz = np.flatnonzero(a)
        a = a[:nz[-1] + 1] if len(nz) else a[:0]
        a, b = b, a
    out = [int(x) for x in a]
    if out and out[-1] != 1:
        inv = pow(out[-1], p - 2, p)
        out = [x * inv % p for x in out]
    return tuple(out)


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


class Poly:
    """Immutable polynomial in t over a finite field."""

    __slots__ = ("field", "c")

    def __init__(self, field, coeffs=()):
        self.field = field
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def _raw(cls, field, c):
        obj = object.__new__(cls)
        obj.field = field
        obj.c = tuple(c)
        return obj

    @classmethod
    def from_ints(cls, field, ints):
        """Polynomial whose coefficients are integers read modulo p."""
        return cls(field, [field.from_int(k) for k in ints])

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    @classmethod
    def monomial(cls, field, k, c=1):
        return cls(field, [0] * k + [c])

    @classmethod
    def t(cls, field):
        return cls.monomial(field, 1)

    # -- basic queries --

    @property
    def deg(self):
        return len(self.c) - 1 if self.c else DEG_ZERO

    @property
    def lc(self):
        return self.c[-1] if self.c else 0

    def __bool__(self):
        return bool(self.c)

    def is_constant(self):
        return len(self.c) <= 1

    def coeff(self, k):
        return self.c[k] if 0 <= k < len(self.c) else 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.c == other.c
        if isinstance(other, int):
            return self.c == Poly(self.field, [self.field.from_int(other)]).c
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.c))

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly(self.field, [self.field.from_int(other)])
        return None

    # -- ring operations --

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F, a, b = self.field, self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        if F.n == 1:
            p = F.p
            out = [(x + y) % p for x, y in zip(a, b)] + list(a[len(b):])
        else:
            out = [F.add(x, y) for x, y in zip(a, b)] + list(a[len(b):])
        return Poly(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        if F.n == 1:
            return Poly._raw(F, [-x % F.p for x in self.c])
        return Poly._raw(F, [F.neg(x) for x in self.c])

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
        return Poly._raw(self.field, mul_coeffs(self.field, self.c, o.c))

    __rmul__ = __mul__

    def scale(self, k):
        """Multiply by the field element code ``k``."""
        F = self.field
        if not k:
            return Poly._raw(F, ())
        if F.n == 1:
            return Poly._raw(F, [x * k % F.p for x in self.c])
        return Poly._raw(F, [F.mul(x, k) for x in self.c])

    def shift(self, k):
        """Multiply by t^k (k >= 0)."""
        if not self.c:
            return self
        return Poly._raw(self.field, (0,) * k + self.c)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly(self.field, [1]), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.c:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        db = len(o.c) - 1
        rem = list(self.c)
        if len(rem) <= db:
            return Poly._raw(F, ()), self
        quo = [0] * (len(rem) - db)
        b = o.c
        inv = F.inv(b[-1])
        if F.n == 1:
            p = F.p
            for i in range(len(rem) - 1, db - 1, -1):
                c = rem[i] * inv % p
                if c:
                    quo[i - db] = c
                    base = i - db
                    for j in range(db):
                        rem[base + j] = (rem[base + j] - c * b[j]) % p
                rem[i] = 0
        else:
            for i in range(len(rem) - 1, db - 1, -1):
                c = F.mul(rem[i], inv)
                if c:
                    quo[i - db] = c
                    base = i - db
                    for j in range(db):
                        rem[base + j] = F.sub(rem[base + j], F.mul(c, b[j]))
                rem[i] = 0
        return Poly(F, quo), Poly(F, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other):
        """Exact quotient; raises ``ArithmeticError`` if the division leaves a remainder."""
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self):
        if not self.c or self.c[-1] == 1:
            return self
        return self.scale(self.field.inv(self.c[-1]))

    def derivative(self):
        F = self.field
        return Poly(F, [F.mul(F.from_int(i), x) for i, x in enumerate(self.c)][1:])

    def __call__(self, x):
        """Evaluate at a field element code."""
        F = self.field
        acc = 0
        for c in reversed(self.c):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def compose_shift(self, a):
        """The polynomial t -> self(t + a) for a field element code ``a``."""
        out = Poly(self.field, ())
        lin = Poly(self.field, [a, 1])
        for c in reversed(self.c):
            out = out * lin + Poly(self.field, [c])
        return out

    # -- gcd --

    def gcd(self, other):
        """Monic gcd (zero if both are zero)."""
        F = self.field
        if F.n == 1:
            return Poly._raw(F, _gcd_prime(list(self.c), list(other.c), F.p))
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other):
        """Return (g, s, u) with g = s*self + u*other and g monic."""
        F = self.field
        r0, r1 = self, other
        s0, s1 = Poly(F, [1]), Poly(F, ())
        u0, u1 = Poly(F, ()), Poly(F, [1])
        while r1:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            u0, u1 = u1, u0 - q * u1
        if not r0:
            return r0, s0, u0
        inv = F.inv(r0.lc)
        return r0.scale(inv), s0.scale(inv), u0.scale(inv)

    # -- display --

    def __repr__(self):
        return f"Poly({_fmt_poly(self, 't')})"

    def __str__(self):
        return _fmt_poly(self, "t")

    def to_json(self):
        """Ascending list of coefficient vectors."""
        return [self.field.vector(c) for c in self.c]

    @classmethod
    def from_json(cls, field, data):
        return cls(field, [field.element(v if isinstance(v, list) else [v]) for v in data])


def _fmt_coeff(F, c):
    if F.n == 1:
        return str(c)
    return "(" + " + ".join(f"{d}*a^{i}" for i, d in enumerate(F.vector(c)) if d) + ")"


def _fmt_poly(poly, var):
    if not poly.c:
        return "0"
    F = poly.field
    terms = []
    for k in range(len(poly.c) - 1, -1, -1):
        c = poly.c[k]
        if not c:
            continue
        cs = _fmt_coeff(F, c)
        if k == 0:
            terms.append(cs)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            terms.append(mono if c == 1 else f"{cs}*{mono}")
    return " + ".join(terms)


class RatFunc:
    """Element of GF(q)(t) as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc) and den is None:
            self.num, self.den = num.num, num.den
            return
        if den is None:
            den = Poly(num.field, [1])
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = num, Poly(num.field, [1])
            return
        if den.deg > 0:
            g = num.gcd(den)
            if g.deg > 0:
                num, den = num // g, den // g
        if den.lc != 1:
            inv = den.field.inv(den.lc)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def constant(cls, field, c):
        return cls._raw(Poly(field, [c]), Poly(field, [1]))

    @classmethod
    def from_int(cls, field, k):
        return cls.constant(field, field.from_int(k))

    @property
    def field(self):
        return self.num.field

    @property
    def deg(self):
        """Degree at infinity: deg num - deg den."""
        return self.num.deg - self.den.deg

    def __bool__(self):
        return bool(self.num)

    def is_poly(self):
        return self.den.deg == 0

    def is_constant(self):
        return self.den.deg == 0 and self.num.deg <= 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den.deg == 0:
            return hash(self.num)
        return hash(("RatFunc", self.num.c, self.den.c))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc._raw(other, Poly(other.field, [1]))
        if isinstance(other, int):
            return RatFunc.from_int(self.field, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num:
            return o
        if not o.num:
            return self
        if self.den == o.den:
            if self.den.deg == 0:
                return RatFunc._raw(self.num + o.num, self.den)
            return RatFunc(self.num + o.num, self.den)
        if self.den.deg == 0:
            return RatFunc._raw(self.num * o.den + o.num, o.den)
        if o.den.deg == 0:
            return RatFunc._raw(self.num + o.num * self.den, self.den)
        g = self.den.gcd(o.den)
        if g.deg > 0:
            a, b = self.den // g, o.den // g
            return RatFunc(self.num * b + o.num * a, a * o.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

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
        if not self.num or not o.num:
            return RatFunc._raw(Poly(self.field, ()), Poly(self.field, [1]))
        if self.den.deg == 0 and o.den.deg == 0:
            return RatFunc._raw(self.num * o.num, self.den)
        # cross-cancel before multiplying to keep the gcds small
        g1 = self.num.gcd(o.den) if o.den.deg > 0 else None
        g2 = o.num.gcd(self.den) if self.den.deg > 0 else None
        n1, d2 = (self.num // g1, o.den // g1) if g1 is not None and g1.deg > 0 else (self.num, o.den)
        n2, d1 = (o.num // g2, self.den // g2) if g2 is not None and g2.deg > 0 else (o.num, self.den)
        num, den = n1 * n2, d1 * d2
        if den.lc != 1:
            inv = den.field.inv(den.lc)
            num, den = num.scale(inv), den.scale(inv)
        return RatFunc._raw(num, den)

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        inv = self.field.inv(self.num.lc)
        return RatFunc._raw(self.den.scale(inv), self.num.scale(inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        return RatFunc._raw(self.num ** e, self.den ** e)

    def scale(self, k):
        return RatFunc._raw(self.num.scale(k), self.den) if k else RatFunc._raw(
            Poly(self.field, ()), Poly(self.field, [1]))

    def derivative(self):
        if self.den.deg == 0:
            return RatFunc._raw(self.num.derivative(), self.den)
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(),
                       self.den * self.den)

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.deg == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def derive(r):
    """Formal t-derivative of a ``Poly`` or ``RatFunc``."""
    return r.derivative()


def as_ratfunc(x, field=None):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc._raw(x, Poly(x.field, [1]))
    if isinstance(x, int) and field is not None:
        return RatFunc.from_int(field, x)
    raise TypeError(f"cannot read {x!r} as a rational function")


class RationalFunctionField:
    """The field GF(q)(t) as a coefficient domain for quotient algebras."""

    is_field = True

    def __init__(self, field):
        self.field = field
        self.zero = RatFunc.constant(field, 0)
        self.one = RatFunc.constant(field, 1)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.field == self.field

    def __hash__(self):
        return hash(("RationalFunctionField", self.field))

    def from_int(self, k):
        return RatFunc.from_int(self.field, k)

    def convert(self, x):
        return as_ratfunc(x, self.field)

    def inv(self, x):
        return x.inv()

    def dim(self):
        return 1

    def to_vector(self, x):
        return [x]

    def from_vector(self, v):
        return v[0]

    def __repr__(self):
        return f"{self.field!r}(t)"


__all__ = ["GF", "Poly", "RatFunc", "RationalFunctionField", "DEG_ZERO", "derive",
           "as_ratfunc", "mul_coeffs"]
