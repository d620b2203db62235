"""Mahler's series and its approximation exponent.

Over GF(p) the series beta = sum_i t^(-q^i) with q = p^s satisfies
beta^q = beta - 1/t, so t x^q - t x + 1 is its minimal polynomial.  Its
approximation exponent equals its degree q, the largest value the
Liouville bound permits.  This script lifts the root, expands it as a
continued fraction and prints the exact exponents e_n = 2 + deg a_{n+1}/deg Q_n.
"""

from ffapprox import (GF, Poly, LaurentSeries, newton_lift, cf_expand, convergents,
                      exponent_estimate, approximation_audit)


def mahler(F, q):
    t = Poly.t(F)
    return [Poly(F, [1]), -t] + [Poly(F, ())] * (q - 2) + [t]


def main():
    for p, q, N in ((3, 3, 300), (2, 4, 400)):
        F = GF(p)
        f = mahler(F, q)
        beta = newton_lift(f, LaurentSeries.monomial(F, 1), N)
        print(f"GF({p}), q = {q}: beta = {beta.series.truncate(q ** 2 + 1)} ...")
        cf = cf_expand(beta)
        print(f"  {cf.certified} certified partial quotients; a_0 = {cf.a[0]}, "
              f"deg a_1.. = {cf.degrees()[1:9]} ...")
        rep = exponent_estimate(cf)
        print("  n  deg a_n+1  deg Q_n  e_n")
        for n, da, dq, e in rep.rows[:6]:
            print(f"  {n:<3}{da:<11}{dq:<9}{e}")
        print(f"  running sup = {rep.running_sup}")
        audit = approximation_audit(f, convergents(cf, certified_only=True))
        residuals = sorted({row.residual for row in audit})
        print(f"  deg F(P_n, Q_n) minus the asymptotic prediction: {residuals}\n")


if __name__ == "__main__":
    main()
