"""Genus formulas, exponent bounds and the certificate that assembles them.

Every bound is an exact ``Fraction``.  Bounds that rest on a hypothesis carry
the hypothesis as a label; the certificate records whether measured evidence
supports it, but a measurement never turns a conditional bound into an
unconditional one.  The epsilon terms of the height inequalities are left
symbolic.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd

from .errors import DomainError, SpecViolation, NotEtale, NotSquarefree, WrongShape
from .laurent import _poly_coeffs

NOT_RICCATI = "not Riccati"
MAX_RANK = "maximal rank KS"
MAX_RANK_VOJTA = "maximal rank KS + Vojta inequality"


def _int(name, v, lo):
    if not isinstance(v, int) or v < lo:
        raise DomainError(f"{name} must be an integer >= {lo}, got {v!r}")


def genus_thue(d):
    _int("d", d, 4)
    return (d - 1) * (d - 2) // 2


def genus_superelliptic(d, k):
    _int("d", d, 2)
    _int("k", k, 2)
    if gcd(d, k) != 1:
        raise DomainError(f"gcd(d, k) = gcd({d}, {k}) != 1")
    return (d - 1) * (k - 1) // 2


def osgood_bound(d):
    _int("d", d, 2)
    return Fraction(d // 2 + 1)


def osgood_alternative(d):
    """The other rendering, floor((d+3)/2); one larger for odd d."""
    _int("d", d, 2)
    return Fraction((d + 3) // 2)


def thue_bound(d):
    _int("d", d, 4)
    return Fraction(d, 2) + Fraction(d, d - 1)


def vojta_thue(d):
    _int("d", d, 4)
    return Fraction(2 * d, d - 1)


def superelliptic_bound(d, k):
    if genus_superelliptic(d, k) <= 1:
        raise DomainError("needs genus > 1")
    return Fraction(d + 3, 2) + Fraction(1, k - 1)


def vojta_superelliptic(k):
    _int("k", k, 2)
    return 2 + Fraction(2, k - 1)


def _check_r(d, r):
    _int("r", r, 1)
    if d is not None and r >= d:
        raise DomainError(f"need r < d (got r={r}, d={d})")


def wirsing_bound(d, r, k):
    """Bound from ((d-1)(k-1)-2)/kr <= 2(2kr + (1+d-e)(k-1))/kr, solved for e."""
    _check_r(d, r)
    _int("k", k, 2)
    return Fraction(d + 3, 2) + Fraction(2 * k * r + 1, k - 1)


def wirsing_limit(d, r):
    _check_r(d, r)
    return Fraction(d + 3 + 4 * r, 2)


def wirsing_relevant(d, r):
    """The limit beats Liouville only when r < (d-3)/4."""
    return 4 * r < d - 3


def vojta_wirsing(r):
    _int("r", r, 2)
    return Fraction(2 * r + 2)


def height_multiplier(g, i):
    """max((2g-2)/(g-i), 2); the epsilon is not included."""
    _int("g", g, 2)
    if not isinstance(i, int) or not 0 <= i < g:
        raise DomainError(f"need 0 <= i < g (got i={i!r}, g={g})")
    return max(Fraction(2 * g - 2, g - i), Fraction(2))


# -- certificate --

@dataclass
class BoundRow:
    name: str
    value: Fraction
    hypothesis: str = None
    status: str = "active"
    vacuous: bool = False
    note: str = None

    def to_json(self):
        out = {"name": self.name, "value": str(self.value), "hypothesis": self.hypothesis,
               "status": self.status, "vacuous": self.vacuous}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class BoundCertificate:
    d: int
    unconditional: list = dc_field(default_factory=list)
    theorem2_conditional: list = dc_field(default_factory=list)
    vojta_conditional: list = dc_field(default_factory=list)
    hierarchy: list = dc_field(default_factory=list)
    evidence: dict = dc_field(default_factory=dict)
    notes: list = dc_field(default_factory=list)

    def rows(self):
        return self.unconditional + self.theorem2_conditional + self.vojta_conditional

    def row(self, name):
        return next(r for r in self.rows() if r.name == name)

    def to_json(self):
        return {"d": self.d,
                "unconditional": [r.to_json() for r in self.unconditional],
                "theorem2_conditional": [r.to_json() for r in self.theorem2_conditional],
                "vojta_conditional": [r.to_json() for r in self.vojta_conditional],
                "hierarchy": self.hierarchy, "evidence": self.evidence, "notes": self.notes}


def _row(d, name, value, hypothesis, status, note=None):
    return BoundRow(name, value, hypothesis, status, value > d, note)


def _ks_evidence(f, model, k):
    from .ks import ks_matrix, ks_rank
    try:
        M = ks_matrix(f, model, k)
    except (NotEtale, NotSquarefree, SpecViolation, WrongShape) as exc:
        return {"model": model, "k": k, "error": f"{type(exc).__name__}: {exc}"}
    r = ks_rank(M)
    return {"model": model, "k": k, "g": r.g, "rank": r.rank, "kernel_dim": r.kernel_dim,
            "max_rank": r.max_rank, "structural_ceiling": r.ceiling, "zero": M.is_zero()}


def _hierarchy(ev):
    g = ev["g"]
    if g < 2:
        return None
    mults = [[i, str(height_multiplier(g, i))] for i in range(g)]
    kd = ev["kernel_dim"]
    return {"model": ev["model"], "k": ev["k"], "g": g, "kernel_dim": kd,
            "multipliers": mults,
            "applicable": str(height_multiplier(g, kd)) if kd < g else None}


def certificate(f, k_list=(), frobenius_sweep=0, thue=False):
    """Classify f and list every bound the evidence allows, with its hypothesis.

    Irreducibility of f is assumed, not checked.
    """
    from .riccati import classify
    f = _poly_coeffs(f)
    F = f[0].field
    d = len(f) - 1
    if d < 2:
        raise DomainError("beta must be irrational: d >= 2")
    cls = classify(f, frobenius_sweep)
    cert = BoundCertificate(d)
    cert.notes.append("irreducibility of f is assumed by the caller")
    w = cls.frobenius
    cert.evidence = {
        "riccati": cls.riccati, "n": cls.n,
        "frobenius": None if w is None else {"s": w.s, "abcd": [str(x) for x in w.as_tuple()]},
        "quartic_char2_obstruction": None if cls.quartic_char2_obstruction is None
        else str(cls.quartic_char2_obstruction),
        "ks": [],
    }
    cert.unconditional.append(_row(d, "dirichlet", Fraction(2), None, "active",
                                   "lower bound for every irrational beta"))
    cert.unconditional.append(_row(d, "liouville", Fraction(d), None, "active"))
    cert.unconditional.append(_row(
        d, "osgood", osgood_bound(d), NOT_RICCATI,
        "hypothesis-failed" if cls.riccati else "active",
        f"alternative rendering floor((d+3)/2) = {osgood_alternative(d)}"))

    for k in k_list:
        model = "hyperelliptic" if k == 2 and F.p % 2 and d % 2 else "superelliptic"
        try:
            g = genus_superelliptic(d, k)
        except DomainError as exc:
            cert.notes.append(f"k={k} skipped: {exc}")
            continue
        if k % F.p == 0:
            cert.notes.append(f"k={k} skipped: p divides k")
            continue
        ev = _ks_evidence(f, model, k)
        cert.evidence["ks"].append(ev)
        if g <= 1:
            cert.notes.append(f"k={k}: genus {g} is below the height-inequality range")
            continue
        status = "conditional" if ev.get("max_rank") else "hypothesis-failed"
        cert.theorem2_conditional.append(
            _row(d, f"superelliptic(k={k})", superelliptic_bound(d, k), MAX_RANK, status))
        cert.vojta_conditional.append(
            _row(d, f"vojta_superelliptic(k={k})", vojta_superelliptic(k), MAX_RANK_VOJTA, status))
        h = _hierarchy(ev) if "g" in ev else None
        if h:
            cert.hierarchy.append(h)

    if thue:
        if d < 4 or d % F.p == 0:
            cert.notes.append("Thue model skipped: needs d >= 4 and p not dividing d")
        else:
            ev = _ks_evidence(f, "thue", None)
            cert.evidence["ks"].append(ev)
            status = "conditional" if ev.get("max_rank") else "hypothesis-failed"
            cert.theorem2_conditional.append(_row(d, "thue", thue_bound(d), MAX_RANK, status))
            cert.vojta_conditional.append(
                _row(d, "vojta_thue", vojta_thue(d), MAX_RANK_VOJTA, status))
            h = _hierarchy(ev) if "g" in ev else None
            if h:
                cert.hierarchy.append(h)

    for r in range(1, d):
        note = None if wirsing_relevant(d, r) else "not below Liouville (needs r < (d-3)/4)"
        cert.vojta_conditional.append(_row(
            d, f"wirsing_limit(r={r})", wirsing_limit(d, r),
            MAX_RANK + " for y^k = f(x) with k arbitrarily large", "unmeasured", note))
        if r > 1:
            cert.vojta_conditional.append(_row(
                d, f"vojta_wirsing(r={r})", vojta_wirsing(r), MAX_RANK_VOJTA, "unmeasured"))
    return cert
