"""Kodaira-Spencer matrices of the curves attached to beta.

A root beta of f gives two curve families over the t-line: the Thue curve
F(x, y) = 1 and the superelliptic curves y^k = f(x).  Their Kodaira-Spencer
matrices are computed as traces of residues; full rank is the hypothesis
under which the height inequality yields exponent bounds.
"""

from ffapprox import (GF, Poly, ks_hyperelliptic, ks_superelliptic, ks_thue, ks_thue_u2,
                      ks_rank, search_max_rank)


def main():
    F5 = GF(5)
    t = Poly.t(F5)
    zero, one = Poly(F5, ()), Poly(F5, [1])

    M = ks_hyperelliptic([one, t, zero, one])
    print(f"y^2 = x^3 + t x + 1 over GF(5): KS = [{M.entries[0, 0]}]")
    M = ks_hyperelliptic([-t, zero, zero, one])
    print(f"y^2 = x^3 - t (isotrivial):       KS = [{M.entries[0, 0]}]")

    f = [t + 2, t, one, t * 3 + 1, one]
    M = ks_superelliptic(f, 3)
    r = ks_rank(M)
    print(f"\ny^3 = f(x) with deg f = 4: basis {M.basis.pairs}")
    for row in M.entries.nonzero_mask():
        print("  " + " ".join("*" if x else "." for x in row))
    print(f"  rank {r.rank} of genus {r.g}; pairing ceiling {r.ceiling}")

    F3 = GF(3)
    s = Poly.t(F3)
    g = [s + 2, s, Poly(F3, [1]), Poly(F3, ()), Poly(F3, [1])]
    U1, U2 = ks_thue(g), ks_thue_u2(g)
    print(f"\nThue curve of a quartic over GF(3): rank {ks_rank(U1).rank} of genus {U1.g}")
    print("  the second chart gives the negated matrix:", U2.entries == (-U1).entries)

    rep = search_max_rank(7, 5, 2, 2, 30, 0)
    print(f"\n30 random quintics over GF(7), y^2 = f(x): rank histogram {rep.histogram},"
          f" {len(rep.witnesses)} of full rank {rep.g}")


if __name__ == "__main__":
    main()
