"""Exponent bounds and what each one assumes.

The certificate lists the unconditional Liouville and Osgood bounds, the
bounds that need a maximal-rank Kodaira-Spencer map, and those that further
assume a Vojta-type inequality.  Each row records its hypothesis and whether
the computed evidence supports it.
"""

from ffapprox import GF, Poly, certificate, thue_bound, superelliptic_bound, wirsing_limit


def print_certificate(label, cert):
    print(label)
    for group in ("unconditional", "theorem2_conditional", "vojta_conditional"):
        for row in getattr(cert, group):
            flag = " (vacuous)" if row.vacuous else ""
            print(f"  {group:<21}{row.name:<26}{str(row.value):<8}{row.status}{flag}")
    for note in cert.notes:
        print(f"  note: {note}")
    print()


def main():
    print("d   thue    superelliptic(k=2)  wirsing limit r=1")
    for d in (5, 7, 9, 11):
        print(f"{d:<4}{str(thue_bound(d)):<8}{str(superelliptic_bound(d, 2)):<20}"
              f"{wirsing_limit(d, 1)}")
    print()

    F7 = GF(7)
    t = Poly.t(F7)
    f = [t + 1, t * t, Poly(F7, [3]), t, t * t + 1, Poly(F7, [1])]
    print_certificate("generic quintic over GF(7)", certificate(f, k_list=(2, 3), thue=True))

    F3 = GF(3)
    s = Poly.t(F3)
    mahler = [Poly(F3, [1]), -s, Poly(F3, ()), s]
    print_certificate("Mahler cubic over GF(3)", certificate(mahler, k_list=(2,),
                                                             frobenius_sweep=2))


if __name__ == "__main__":
    main()
