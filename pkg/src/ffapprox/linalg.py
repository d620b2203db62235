"""Dense matrices over GF(q)(t): rank, kernels and linear solves.

Rank uses fraction-free (Bareiss) elimination over GF(q)[t] after clearing
the denominators of each row, so intermediate entries stay polynomials whose
size is bounded by the minors of the input.  Kernels and solves use plain
Gauss-Jordan over the rational function field; they are only ever applied to
small systems.
"""

from .poly import Poly, RatFunc, as_ratfunc


class RatMatrix:
    """Immutable rows x cols matrix with ``RatFunc`` entries."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, entries, cols=None):
        entries = tuple(tuple(as_ratfunc(x, field) for x in row) for row in entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(row) != cols for row in entries):
            raise ValueError("ragged matrix")
        self.field = field
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    @classmethod
    def zeros(cls, field, rows, cols):
        z = RatFunc.constant(field, 0)
        return cls(field, [[z] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, field, n):
        z, o = RatFunc.constant(field, 0), RatFunc.constant(field, 1)
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.entries == other.entries and self.cols == other.cols

    def __hash__(self):
        return hash(self.entries)

    def __neg__(self):
        return RatMatrix(self.field, [[-x for x in row] for row in self.entries], self.cols)

    def scale(self, r):
        return RatMatrix(self.field, [[x * r for x in row] for row in self.entries], self.cols)

    def is_zero(self):
        return not any(x for row in self.entries for x in row)

    def transpose(self):
        return RatMatrix(self.field, [list(col) for col in zip(*self.entries)], self.rows)

    def nonzero_mask(self):
        return [[bool(x) for x in row] for row in self.entries]

    def tolist(self):
        return [list(row) for row in self.entries]

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"RatMatrix([{body}])"


def _row_lcm(row):
    lcm = None
    for x in row:
        if x and x.den.deg > 0:
            lcm = x.den if lcm is None else lcm * (x.den // lcm.gcd(x.den))
    return lcm


def _poly_rows(M):
    F = M.field
    out = []
    for row in M.entries:
        lcm = _row_lcm(row)
        if lcm is None:
            out.append([x.num for x in row])
        else:
            out.append([(x.num * (lcm // x.den)) if x else Poly(F, ()) for x in row])
    return out


def bareiss_echelon(rows):
    """Fraction-free echelon form of a list of polynomial rows.

    Returns (rank, pivot_columns).  Every division performed is exact; an
    inexact division raises, which would indicate a bug rather than bad input.
    """
    A = [list(r) for r in rows]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    if not nrows:
        return 0, []
    F = A[0][0].field if ncols else None
    prev = Poly(F, [1]) if F is not None else None
    r = 0
    pivots = []
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pr = A[r]
        pv = pr[col]
        for i in range(r + 1, nrows):
            row = A[i]
            a = row[col]
            for j in range(col + 1, ncols):
                v = pv * row[j]
                if a:
                    v = v - a * pr[j]
                row[j] = v.exquo(prev) if prev.deg > 0 else v.scale(prev.field.inv(prev.lc))
            row[col] = Poly(F, ())
        prev = pv
        pivots.append(col)
        r += 1
    return r, pivots


def rank(M):
    """(rank, kernel_dim) of a ``RatMatrix`` over GF(q)(t)."""
    if M.rows == 0 or M.cols == 0:
        return 0, M.cols
    r, _ = bareiss_echelon(_poly_rows(M))
    return r, M.cols - r


def _rref(M):
    """Reduced row echelon form over GF(q)(t) (list of lists) and pivot columns."""
    A = [list(row) for row in M.entries]
    nrows, ncols = M.rows, M.cols
    pivots = []
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = A[r][col].inv()
        A[r] = [x * inv for x in A[r]]
        for i in range(nrows):
            if i != r and A[i][col]:
                c = A[i][col]
                A[i] = [x - c * y for x, y in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
    return A, pivots


def nullspace(M):
    """Basis of the right kernel {v : M v = 0} as lists of ``RatFunc``."""
    F = M.field
    A, pivots = _rref(M)
    free = [j for j in range(M.cols) if j not in pivots]
    zero, one = RatFunc.constant(F, 0), RatFunc.constant(F, 1)
    basis = []
    for fj in free:
        v = [zero] * M.cols
        v[fj] = one
        for i, pj in enumerate(pivots):
            v[pj] = -A[i][fj]
        basis.append(v)
    return basis


def solve(M, b):
    """One solution x of M x = b, or ``None`` if the system is inconsistent."""
    F = M.field
    aug = RatMatrix(F, [list(row) + [bi] for row, bi in zip(M.entries, b)], M.cols + 1)
    A, pivots = _rref(aug)
    if M.cols in pivots:
        return None
    x = [RatFunc.constant(F, 0)] * M.cols
    for i, pj in enumerate(pivots):
        x[pj] = A[i][M.cols]
    return x
