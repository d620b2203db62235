"""Finite fields GF(p^n) with a user-supplied modulus.

Elements are plain ints in ``range(q)``: the element
``c_0 + c_1 a + ... + c_{n-1} a^{n-1}`` (``a`` a root of the modulus) is
encoded as ``c_0 + c_1 p + ... + c_{n-1} p^{n-1}``.  The prime field is
therefore embedded as the codes ``0 .. p-1`` and ``0``/``1`` are the field's
zero and one in every extension.

For prime fields arithmetic is done directly modulo p.  For extensions with
``q <= 2**20`` exp/log tables over a primitive element are built once at
construction; larger extensions fall back to coefficient-vector arithmetic.
"""

from functools import reduce

from .errors import FieldError

_TABLE_LIMIT = 1 << 20


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _prime_factors(n):
    out, m, i = [], n, 2
    while i * i <= m:
        if m % i == 0:
            out.append(i)
            while m % i == 0:
                m //= i
        i += 1
    if m > 1:
        out.append(m)
    return out


# -- dense polynomials over Z/p as ascending int lists (modulus handling only) --

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _trim(a[:dm] if len(a) > dm else a)


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, m, p)


def _ppowmod(a, e, m, p):
    result, base = [1], _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible_mod_p(modulus, p):
    """Rabin-style test: no factor of degree <= n/2 shares a root with x^(p^i) - x."""
    m = _trim([c % p for c in modulus])
    n = len(m) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(n // 2):
        xp = _ppowmod(xp, p, m, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(m, _trim(diff), p)
        if len(g) > 1:
            return False
    return True


class GF:
    """The finite field with ``p**n`` elements defined by ``modulus``.

    ``modulus`` is an ascending coefficient list of an irreducible degree-n
    polynomial over Z/p; it is normalized to be monic.  It may be omitted when
    ``n == 1``.
    """

    __slots__ = ("p", "n", "q", "modulus", "_exp", "_log")

    def __init__(self, p, n=1, modulus=None):
        if not isinstance(p, int) or not is_prime(p) or p >= 1 << 16:
            raise FieldError(f"characteristic must be a prime below 2^16, got {p!r}")
        if not isinstance(n, int) or n < 1:
            raise FieldError(f"extension degree must be a positive int, got {n!r}")
        if modulus is None:
            if n != 1:
                raise FieldError("an extension field needs an explicit modulus")
            modulus = [0, 1]
        modulus = [int(c) % p for c in modulus]
        _trim(modulus)
        if len(modulus) != n + 1:
            raise FieldError(f"modulus must have degree {n}")
        if n == 1:
            modulus = [0, 1]
        inv = pow(modulus[-1], p - 2, p)
        modulus = tuple(c * inv % p for c in modulus)
        if n > 1 and not is_irreducible_mod_p(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p, self.n, self.q = p, n, p ** n
        self.modulus = modulus
        self._exp = self._log = None
        if n > 1 and self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers --

    def _build_tables(self):
        q, p, m = self.q, self.p, list(self.modulus)
        order = q - 1
        factors = _prime_factors(order)
        for g in range(p, q):
            v = self.vector(g)
            if all(_ppowmod(v, order // ell, m, p) != [1] for ell in factors):
                break
        else:  # pragma: no cover - a primitive element always exists
            raise FieldError("no primitive element found")
        exp = [0] * (2 * order)
        log = [0] * q
        cur = [1]
        gv = self.vector(g)
        for i in range(order):
            code = self._encode(cur)
            exp[i] = exp[i + order] = code
            log[code] = i
            cur = _pmulmod(cur, gv, m, p)
        self._exp, self._log = exp, log

    def _encode(self, digits):
        code = 0
        for d in reversed(digits):
            code = code * self.p + d
        return code

    def vector(self, a):
        """Coefficient vector (length n) of the element code ``a``."""
        out = []
        for _ in range(self.n):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def element(self, vec):
        """Element code of a coefficient vector (shorter vectors are zero-padded)."""
        vec = [int(c) for c in vec]
        if len(vec) > self.n or any(not 0 <= c < self.p for c in vec):
            raise FieldError(f"invalid element vector {vec} for GF({self.p}^{self.n})")
        return self._encode(vec)

    def from_int(self, k):
        return int(k) % self.p

    # -- arithmetic --

    def add(self, a, b):
        if self.n == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        va, vb = self.vector(a), self.vector(b)
        return self._encode([(x + y) % self.p for x, y in zip(va, vb)])

    def neg(self, a):
        if self.n == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self._encode([-x % self.p for x in self.vector(a)])

    def sub(self, a, b):
        if self.n == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.n == 1:
            return a * b % self.p
        if not a or not b:
            return 0
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        prod = _pmulmod(self.vector(a), self.vector(b), list(self.modulus), self.p)
        return self._encode(prod)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        if self.n == 1:
            return pow(a, e, self.p)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def sum(self, items):
        return reduce(self.add, items, 0)

    def elements(self):
        return range(self.q)

    def random_element(self, rng):
        return int(rng.integers(self.q))

    # -- identity --

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.n, self.modulus) == (
            other.p, other.n, other.modulus)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.n}, modulus={list(self.modulus)})"

    def to_json(self):
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), int(data.get("n", 1)), data.get("modulus"))
