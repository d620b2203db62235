"""Which algebraic series satisfy a Riccati equation.

beta' is a polynomial in beta of degree < d with coefficients in GF(q)(t).
Degree <= 2 is the Riccati case that escapes Osgood's bound.  Moebius images
of a Riccati series stay Riccati; a Frobenius witness beta^(p^s) =
(a beta + b)/(c beta + d) certifies the special subclass that contains
Mahler's series.
"""

import numpy as np

from ffapprox import (GF, Poly, beta_prime, riccati_test, frobenius_test, classify,
                      cross_ratio_identity_check)


def mahler(F, q):
    t = Poly.t(F)
    return [Poly(F, [1]), -t] + [Poly(F, ())] * (q - 2) + [t]


def moebius_image(f, a, b, c, d):
    """Minimal polynomial of (a beta + b)/(c beta + d)."""
    F = f[0].field
    D = len(f) - 1

    def mul(u, v):
        out = [Poly(F, ())] * (len(u) + len(v) - 1)
        for i, x in enumerate(u):
            for j, y in enumerate(v):
                out[i + j] = out[i + j] + x * y
        return out

    acc = [Poly(F, ())] * (D + 1)
    for i, fi in enumerate(f):
        term = [fi]
        for _ in range(i):
            term = mul(term, [-b, d])
        for _ in range(D - i):
            term = mul(term, [a, -c])
        acc = [x + y for x, y in zip(acc, term + [Poly(F, ())] * (D + 1 - len(term)))]
    return acc


def show(label, f):
    exp = beta_prime(f)
    cls = riccati_test(f)
    print(f"{label}: beta' has degree {exp.n} in beta, Riccati = {cls.riccati}")


def main():
    F3 = GF(3)
    t = Poly.t(F3)
    f = mahler(F3, 3)
    show("Mahler cubic over GF(3)", f)
    w = frobenius_test(f, 1)
    print(f"  Frobenius witness: beta^3 = ({w.a} beta + {w.b}) / ({w.c} beta + {w.d})")

    g = moebius_image(f, t, Poly(F3, [1]), Poly(F3, [1]), t + 1)
    show("its image under beta -> (t beta + 1)/(beta + t + 1)", g)

    F5 = GF(5)
    rng = np.random.default_rng(1)
    h = [Poly(F5, [F5.random_element(rng) for _ in range(3)]) for _ in range(4)]
    h.append(Poly(F5, [1]))
    show("a random quartic over GF(5)", h)

    F2 = GF(2)
    t2, one = Poly.t(F2), Poly(F2, [1])
    q = [t2 * t2 + 1, one, t2 + 1, t2, one]
    cls = classify(q)
    print(f"quartic over GF(2) with a = t, c = 1: a c' + a' c = "
          f"{cls.quartic_char2_obstruction}, Riccati = {cls.riccati}")

    print("cross-ratio derivative for Riccati conjugates:",
          ["zero" if not cross_ratio_identity_check(p) else "nonzero" for p in (2, 3, 5, 7)])
    m = cross_ratio_identity_check(5, mutate=True)
    print(f"with a cubic term added: {len(m)} surviving monomials, all divisible by a3:",
          m.divisible_by("a3"))


if __name__ == "__main__":
    main()
