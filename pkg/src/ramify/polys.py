"""Univariate polynomials over the integers and over prime fields.

Coefficient sequences are stored constant term first.  The zero polynomial
is the empty tuple and has degree -1 (standing in for minus infinity).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime
from .errors import InvalidArgument


def _strip(c) -> list:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in _strip(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


# ---------------------------------------------------------------- Z[x] / Q[x]

def padd(a, b):
    n = max(len(a), len(b))
    return _strip([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def psub(a, b):
    n = max(len(a), len(b))
    return _strip([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def pdivmod(a, b):
    """Division with remainder over Q (exact over Z when b is monic)."""
    a = list(a)
    b = _strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lb = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(_strip(a)) >= len(b):
        a = _strip(a)
        shift = len(a) - len(b)
        c = a[-1] if lb == 1 else Fraction(a[-1]) / lb
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        a = _strip(a)
    return _strip(q), _strip(a)


def pderiv(a):
    return _strip([i * a[i] for i in range(1, len(a))])


def power_sums(f, count: int) -> list[int]:
    """Power sums s_0..s_{count-1} of the roots of the monic integer polynomial f (Newton)."""
    n = len(f) - 1
    # write f = x^n + c1 x^{n-1} + ... + cn
    c = [f[n - i] for i in range(n + 1)]
    s = [n] + [0] * (count - 1)
    for k in range(1, count):
        acc = -k * c[k] if k <= n else 0
        for i in range(1, min(k, n + 1)):
            acc -= c[i] * s[k - i]
        s[k] = acc
    return s[:count]


# ---------------------------------------------------------------- F_p[x]

@dataclass(frozen=True)
class ModPoly:
    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs=()):
        object.__setattr__(self, "p", int(p))
        object.__setattr__(self, "coeffs", tuple(_strip([int(a) % p for a in coeffs])))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        from .parse import render_poly

        return f"{render_poly(IntPoly(self.coeffs))} (mod {self.p})"


def mstrip(a, p):
    return _strip([x % p for x in a])


def madd(a, b, p):
    n = max(len(a), len(b))
    return _strip([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def msub(a, b, p):
    n = max(len(a), len(b))
    return _strip([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def mmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip([x % p for x in out])


def mdivmod(a, b, p):
    a = mstrip(a, p)
    b = mstrip(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] = (a[i + shift] - c * y) % p
        a = _strip(a)
    return _strip(q), a


def mmod(a, b, p):
    return mdivmod(a, b, p)[1]


def mmonic(a, p):
    a = mstrip(a, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def mgcd(a, b, p):
    a, b = mstrip(a, p), mstrip(b, p)
    while b:
        a, b = b, mmod(a, b, p)
    return mmonic(a, p)


def mpowmod(a, e, m, p):
    result = [1]
    base = mmod(a, m, p)
    while e:
        if e & 1:
            result = mmod(mmul(result, base, p), m, p)
        base = mmod(mmul(base, base, p), m, p)
        e >>= 1
    return result


def mderiv(a, p):
    return _strip([i * a[i] % p for i in range(1, len(a))])


def _pth_root(a, p):
    # a(x) = b(x^p) over F_p, and b^p = a since Frobenius fixes F_p
    return [a[i] for i in range(0, len(a), p)]


def _squarefree(f, p):
    """Squarefree decomposition of a monic f: list of (squarefree monic factor, multiplicity)."""
    if len(f) <= 1:
        return []
    out = []
    df = mderiv(f, p)
    if not df:
        return [(g, k * p) for g, k in _squarefree(_pth_root(f, p), p)]
    c = mgcd(f, df, p)
    w = mdivmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = mgcd(w, c, p)
        z = mdivmod(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = mdivmod(c, y, p)[0]
    if len(c) > 1:
        out.extend((g, k * p) for g, k in _squarefree(_pth_root(c, p), p))
    return out


def _distinct_degree(f, p):
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = mpowmod(h, p, f, p)
        g = mgcd(f, msub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = mdivmod(f, g, p)[0]
            h = mmod(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree_cz(f, d, p, rng):
    """Cantor-Zassenhaus splitting of a squarefree f whose factors all have degree d (odd p)."""
    n = len(f) - 1
    if n == d:
        return [f]
    e = (p**d - 1) // 2
    while True:
        a = mstrip([rng.randrange(p) for _ in range(n)], p)
        if len(a) < 2:
            continue
        g = mgcd(f, a, p)
        if 1 < len(g) < len(f):
            break
        b = msub(mpowmod(a, e, f, p), [1], p)
        g = mgcd(f, b, p)
        if 1 < len(g) < len(f):
            break
    h = mdivmod(f, g, p)[0]
    return _equal_degree_cz(g, d, p, rng) + _equal_degree_cz(mmonic(h, p), d, p, rng)


def _berlekamp(f, p):
    """Deterministic Berlekamp splitting of a squarefree monic f."""
    from .linalg import kernel_mod_p

    n = len(f) - 1
    if n <= 1:
        return [f]
    # Q - I, rows are x^{p i} mod f
    rows = []
    xp = mpowmod([0, 1], p, f, p)
    cur = [1]
    for i in range(n):
        r = cur + [0] * (n - len(cur))
        r[i] = (r[i] - 1) % p
        rows.append(r)
        cur = mmod(mmul(cur, xp, p), f, p)
    # v (as coefficient row vector) with v (Q - I) = 0
    cols = [[rows[i][j] for i in range(n)] for j in range(n)]
    basis = kernel_mod_p(cols, p)
    factors = [f]
    for v in basis:
        if len(factors) == len(basis):
            break
        v = mstrip(v, p)
        if len(v) <= 1:
            continue
        # h is the product of gcd(h, v - s) over s in F_p
        factors = [g for h in factors for g in (mgcd(h, msub(v, [s], p), p) for s in range(p)) if len(g) > 1]
    return factors


def factor_mod_p(f: ModPoly, seed: int = 0) -> list[tuple[ModPoly, int]]:
    """Factor f into monic irreducibles over F_p; returns [(factor, multiplicity)] sorted."""
    p = f.p
    if not is_prime(p):
        raise InvalidArgument(f"modulus {p} is not prime")
    if not f.coeffs:
        raise InvalidArgument("cannot factor the zero polynomial")
    rng = random.Random(seed)
    mono = mmonic(list(f.coeffs), p)
    out = []
    for sq, k in _squarefree(mono, p):
        for g, d in _distinct_degree(sq, p):
            parts = _berlekamp(g, p) if p == 2 else _equal_degree_cz(g, d, p, rng)
            out.extend((tuple(h), k) for h in parts)
    out.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    return [(ModPoly(p, h), k) for h, k in out]


def is_irreducible_mod_p(coeffs, p: int) -> bool:
    f = mmonic(list(coeffs), p)
    n = len(f) - 1
    if n < 1:
        return False
    if mgcd(f, mderiv(f, p), p) != [1]:
        return False
    dd = _distinct_degree(f, p)
    return len(dd) == 1 and dd[0][1] == n
