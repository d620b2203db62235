"""Command-line driver.

Inputs are JSON spec files::

    {"field": {"p": 2, "n": 1, "modulus": [0, 1]},
     "poly_f": [[[1]], [[0], [1]], [], [], [[0], [1]]],
     "precision": 200}

``poly_f`` lists the x-coefficients in ascending order; each is a
t-polynomial given as an ascending list of field-element vectors (bare ints
are accepted for prime fields).  Reports have a ``stable`` section that is
byte-identical across runs with the same input and a ``volatile`` section
holding timings.

Exit codes: 0 success, 2 precondition violation or bad input, 1 anything else.
"""

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from .errors import PreconditionError, RationalInput, FieldError
from .field import GF
from .poly import Poly, RatFunc


class SpecFileError(PreconditionError):
    pass


# -- spec files --

def _elem(F, x):
    if isinstance(x, bool):
        raise SpecFileError("booleans are not field elements")
    if isinstance(x, int):
        x = [x]
    if not isinstance(x, list) or not all(isinstance(c, int) and not isinstance(c, bool)
                                          for c in x):
        raise SpecFileError(f"bad field element {x!r}")
    if any(not 0 <= c < F.p for c in x):
        raise SpecFileError(f"field element {x!r} has digits outside [0, {F.p})")
    try:
        return F.element(x)
    except FieldError as exc:
        raise SpecFileError(str(exc)) from None


def parse_spec(data):
    """(field, f, extras) from a decoded spec dict."""
    if not isinstance(data, dict):
        raise SpecFileError("spec must be a JSON object")
    fd = data.get("field")
    if not isinstance(fd, dict) or "p" not in fd:
        raise SpecFileError("missing field.p")
    try:
        F = GF(fd["p"], fd.get("n", 1), fd.get("modulus"))
    except (TypeError, ValueError) as exc:
        raise SpecFileError(f"bad field: {exc}") from None
    raw = data.get("poly_f")
    if not isinstance(raw, list) or not raw:
        raise SpecFileError("poly_f must be a non-empty list")
    f = []
    for c in raw:
        if not isinstance(c, list):
            raise SpecFileError("each coefficient of poly_f must be a list")
        f.append(Poly(F, [_elem(F, x) for x in c]))
    while f and not f[-1]:
        f.pop()
    if len(f) < 2:
        raise SpecFileError("f must have positive degree in x")
    g = f[0]
    for c in f[1:]:
        g = g.gcd(c) if g else c
    if g.deg > 0:
        raise SpecFileError("f is not content-free")
    extras = {key: data[key] for key in ("k", "seed_series", "precision") if key in data}
    return F, f, extras


def normalize_spec(data):
    F, f, extras = parse_spec(data)
    out = {"field": F.to_json(), "poly_f": [c.to_json() for c in f]}
    out.update(extras)
    return out


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, default=_default) + "\n"


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (Poly, RatFunc)):
        return str(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def load_spec(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecFileError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"{path} is not valid JSON: {exc}") from None
    norm = normalize_spec(data)
    digest = hashlib.sha256(json.dumps(norm, sort_keys=True).encode()).hexdigest()
    F, f, extras = parse_spec(norm)
    return F, f, extras, digest


def _fstr(f):
    return [str(c) for c in f]


# -- subcommands: each returns (results, warnings) --

def cmd_roots(args, F, f, extras):
    from .laurent import laurent_roots
    N = args.prec or extras.get("precision", 20)
    res = laurent_roots(f, N)
    roots = [{"valuation": r.series.v if r.series.c else None, "prec": N,
              "series": str(r.series), "coeffs": r.series.to_json(), "slack": r.slack}
             for r in res.roots]
    warnings = [f"skipped {s['count']} root(s) of valuation {s['valuation']}: {s['kind']}"
                for s in res.skipped]
    skipped = [{**s, "valuation": str(s["valuation"])} for s in res.skipped]
    return {"d": len(f) - 1, "roots": roots, "skipped": skipped}, warnings


def _series_root(args, F, f, extras, N):
    from .laurent import LaurentSeries, laurent_roots, newton_lift
    if "seed_series" in extras:
        seed = LaurentSeries.from_json(F, extras["seed_series"])
        return newton_lift(f, seed, N), []
    res = laurent_roots(f, N)
    warnings = [f"skipped {s['count']} root(s): {s['kind']}" for s in res.skipped]
    if not res.roots:
        raise PreconditionError("f has no root in GF(q)((1/t))")
    idx = args.root or 0
    if not 0 <= idx < len(res.roots):
        raise PreconditionError(f"root index {idx} out of range (found {len(res.roots)})")
    return res.roots[idx], warnings


def cmd_exponent(args, F, f, extras):
    from .contfrac import approximation_audit, cf_expand, convergents, exponent_estimate
    if len(f) == 2:
        raise RationalInput("f has degree 1: beta is rational")
    N = args.prec or extras.get("precision", 200)
    root, warnings = _series_root(args, F, f, extras, N)
    cf = cf_expand(root.series)
    rep = exponent_estimate(cf)
    convs = convergents(cf, certified_only=True)
    audit = approximation_audit(f, convs)
    if cf.certified < len(cf.a):
        warnings.append(f"{len(cf.a) - cf.certified} partial quotient(s) beyond the "
                        f"certified range at precision {N}")
    return {
        "d": len(f) - 1, "prec": N, "certified": cf.certified,
        "partial_quotient_degrees": [a.deg if a else None for a in cf.a[:cf.certified]],
        "rows": [{"n": n, "deg_a_next": da, "deg_Q": dq, "e": str(e)}
                 for n, da, dq, e in rep.rows],
        "running_sup": str(rep.running_sup),
        "tail_sup": str(rep.tail_sup()),
        "audit": [{"n": a.n, "deg_y": a.deg_y, "deg_m": a.deg_m, "prediction": a.prediction,
                   "residual": a.residual} for a in audit],
    }, warnings


def cmd_classify(args, F, f, extras):
    from .riccati import beta_prime, classify
    cls = classify(f, args.frobenius_sweep)
    exp = beta_prime(f)
    w = cls.frobenius
    return {
        "d": len(f) - 1, "beta_prime": [str(c) for c in exp.coeffs], "n": cls.n,
        "riccati": cls.riccati, "frobenius_sweep": args.frobenius_sweep,
        "frobenius": None if w is None else {"s": w.s, "a": str(w.a), "b": str(w.b),
                                             "c": str(w.c), "d": str(w.d)},
        "quartic_char2_obstruction": None if cls.quartic_char2_obstruction is None
        else str(cls.quartic_char2_obstruction),
    }, []


def cmd_ks(args, F, f, extras):
    from .ks import ks_matrix, ks_rank
    k = args.k or extras.get("k")
    model = args.model
    if model is None:
        model = "hyperelliptic" if k == 2 else "superelliptic" if k else "thue"
    M = ks_matrix(f, model, k)
    r = ks_rank(M)
    return {
        "model": model, "k": M.k, "basis": [list(p) for p in M.basis.pairs],
        "matrix": [[str(x) for x in row] for row in M.entries.tolist()],
        "rank": r.rank, "kernel_dim": r.kernel_dim, "g": r.g, "max_rank": r.max_rank,
        "structural_ceiling": r.ceiling, "nonzero_mask": M.entries.nonzero_mask(),
        "sign_convention": M.sign_convention,
    }, []


def cmd_certificate(args, F, f, extras):
    from .bounds import certificate
    ks = [int(x) for x in args.k_list.split(",") if x.strip()] if args.k_list else []
    cert = certificate(f, ks, args.frobenius_sweep, args.thue)
    return cert.to_json(), list(cert.notes)


def cmd_search(args):
    from .ks import search_max_rank
    rep = search_max_rank(args.p, args.d, args.k, args.coeff_bound, args.count, args.seed)
    return {
        "p": rep.p, "d": rep.d, "k": rep.k, "coeff_bound": rep.coeff_deg_bound,
        "count": rep.count, "seed": rep.seed, "g": rep.g, "structural_ceiling": rep.ceiling,
        "histogram": {str(r): c for r, c in rep.histogram.items()},
        "witnesses": [_fstr(f) for f in rep.witnesses],
        "samples": [{"f": _fstr(f), "rank": r, "riccati": ric} for f, r, ric in rep.samples],
        "rejected_not_squarefree": rep.rejected,
    }, []


# -- output --

def _text(report):
    lines = [f"command: {report['command']}"]
    if report.get("input_digest"):
        lines.append(f"input:   sha256 {report['input_digest'][:16]}")
    for key, val in report["stable"]["results"].items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{key}:")
            for item in val:
                lines.append("  " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            lines.append(f"{key}: {val}")
    for w in report["stable"]["warnings"]:
        lines.append(f"warning: {w}")
    lines.append(f"time:    {report['volatile']['elapsed_s']:.3f} s")
    return "\n".join(lines) + "\n"


def build_parser():
    ap = argparse.ArgumentParser(prog="ffapprox",
                                 description="Diophantine approximation over GF(q)(t).")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_spec(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("specfile")
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        return p

    p = with_spec("roots", "roots of f in GF(q)((1/t))")
    p.add_argument("--prec", type=int)
    p = with_spec("exponent", "continued fraction and exponent estimate of a root")
    p.add_argument("--prec", type=int)
    p.add_argument("--root", type=int, default=0)
    p = with_spec("classify", "Riccati and Frobenius classification")
    p.add_argument("--frobenius-sweep", type=int, default=4)
    p = with_spec("ks", "Kodaira-Spencer matrix and rank")
    p.add_argument("--model", choices=("hyperelliptic", "superelliptic", "thue"))
    p.add_argument("--k", type=int)
    p = with_spec("certificate", "all applicable exponent bounds")
    p.add_argument("--k-list", default="")
    p.add_argument("--thue", action="store_true")
    p.add_argument("--frobenius-sweep", type=int, default=4)
    p = sub.add_parser("search", help="random search for maximal-rank KS")
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--coeff-bound", type=int, default=3)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return ap


COMMANDS = {"roots": cmd_roots, "exponent": cmd_exponent, "classify": cmd_classify,
            "ks": cmd_ks, "certificate": cmd_certificate}


def run(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    report = {"command": " ".join(["ffapprox"] + list(argv if argv is not None
                                                       else sys.argv[1:]))}
    try:
        if args.command == "search":
            report["input_digest"] = None
            results, warnings = cmd_search(args)
        else:
            F, f, extras, digest = load_spec(args.specfile)
            report["input_digest"] = digest
            results, warnings = COMMANDS[args.command](args, F, f, extras)
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - reported as an internal error
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    report["stable"] = {"results": results, "warnings": warnings}
    report["volatile"] = {"elapsed_s": time.perf_counter() - start}
    out.write(dumps(report) if args.format == "json" else _text(report))
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
