"""Exact matrix routines: integer Hermite normal form, rational and F_p linear algebra.

Matrices are lists of rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), ncols, tuple(int(x) for r in rows for x in r))

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf(m):
    """Row Hermite normal form (upper triangular, positive pivots, entries above pivots reduced).

    Accepts an IntMatrix or a list of rows and returns the same kind.  Zero rows
    are moved to the bottom so the shape is preserved.
    """
    wrap = isinstance(m, IntMatrix)
    a = m.to_rows() if wrap else [list(map(int, r)) for r in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        # gcd-combine every row below r into row r at column c
        for i in range(r + 1, nrows):
            if a[i][c] == 0:
                continue
            if a[r][c] == 0:
                a[r], a[i] = a[i], a[r]
                continue
            g, x, y = _xgcd(a[r][c], a[i][c])
            u, v = a[r][c] // g, a[i][c] // g
            ra, rb = a[r], a[i]
            a[r] = [x * s + y * t for s, t in zip(ra, rb)]
            a[i] = [u * t - v * s for s, t in zip(ra, rb)]
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        piv = a[r][c]
        for i in range(r):
            q = a[i][c] // piv
            if q:
                a[i] = [s - q * t for s, t in zip(a[i], a[r])]
        r += 1
    return IntMatrix.from_rows(a) if wrap else a


def det_int(m) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    a = [list(map(int, r)) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_frac(m) -> Fraction:
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    d = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            d = -d
        d *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return d


def inverse_frac(m) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [r[n:] for r in a]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def vecmat(v, m):
    return [sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0]))]


def transpose(a):
    return [list(r) for r in zip(*a)]


# ---------------------------------------------------------------- F_p

def rref_mod_p(m, p):
    """Reduced row echelon form over F_p; returns (rows, pivot columns)."""
    a = [[x % p for x in r] for r in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a[:r], pivots


def rank_mod_p(m, p) -> int:
    if not m:
        return 0
    return len(rref_mod_p(m, p)[1])


def kernel_mod_p(m, p) -> list[list[int]]:
    """Basis of the right kernel {x : m x = 0} over F_p."""
    ncols = len(m[0]) if m else 0
    rows, pivots = rref_mod_p(m, p) if m else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for row, pc in zip(rows, pivots):
            v[pc] = -row[fcol] % p
        basis.append(v)
    return basis


def left_kernel_mod_p(m, p) -> list[list[int]]:
    """Basis of {x : x m = 0} over F_p for an r x c matrix m."""
    if not m:
        return []
    return kernel_mod_p(transpose(m), p)
