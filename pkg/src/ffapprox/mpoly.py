"""Sparse multivariate polynomials over GF(p), for small symbolic identities."""


class MPoly:
    """Polynomial in ``len(names)`` variables; terms map exponent tuples to ints mod p."""

    __slots__ = ("p", "names", "terms")

    def __init__(self, p, names, terms=None):
        self.p = p
        self.names = tuple(names)
        self.terms = {}
        for mono, c in (terms or {}).items():
            c %= p
            if c:
                self.terms[tuple(mono)] = c

    @classmethod
    def var(cls, p, names, name):
        i = list(names).index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(names)))
        return cls(p, names, {mono: 1})

    @classmethod
    def const(cls, p, names, c):
        return cls(p, names, {(0,) * len(names): c})

    @classmethod
    def gens(cls, p, names):
        return [cls.var(p, names, n) for n in names]

    def _lift(self, other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return MPoly.const(self.p, self.names, other)
        return None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(self.p, self.names, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.p, self.names, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return MPoly(self.p, self.names, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = MPoly.const(self.p, self.names, 1)
        for _ in range(e):
            result = result * self
        return result

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def divisible_by(self, name):
        """Every monomial contains the variable ``name``."""
        i = self.names.index(name)
        return all(m[i] > 0 for m in self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(self.names, m) if e)
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)
