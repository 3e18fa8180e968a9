"""Number fields given by a monic defining polynomial, with their maximal order.

An order is carried as a list of rows of Fractions: row i holds the coordinates
of the i-th basis element in the power basis 1, t, ..., t^(n-1) of the root t.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd, lcm

from .arith import factor_int, primes_up_to, valuation
from .errors import InvalidArgument, ReduciblePolynomial
from .linalg import det_frac, det_int, hnf, inverse_frac, left_kernel_mod_p, vecmat
from .parse import parse_poly, render_poly
from .polys import IntPoly, ModPoly, factor_mod_p, pderiv, pdivmod, power_sums
from .splitting import dedekind_index_divides

log = logging.getLogger(__name__)

SCREEN_PRIMES = 25


@dataclass(frozen=True)
class NumberField:
    min_poly: IntPoly
    basis_num: tuple[tuple[int, ...], ...]
    basis_den: int
    disc: int
    poly_disc: int
    signature: tuple[int, int]
    irreducibility_certified: bool = True

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    @property
    def index(self) -> int:
        """[O_L : Z[t]]."""
        return self.basis_den**self.degree // abs(det_int(self.basis_num))

    @cached_property
    def basis(self) -> list[list[Fraction]]:
        return [[Fraction(x, self.basis_den) for x in row] for row in self.basis_num]

    @cached_property
    def basis_inverse(self) -> list[list[Fraction]]:
        return inverse_frac(self.basis)

    @cached_property
    def mult_table(self) -> list[list[list[int]]]:
        """table[i][j] = coordinates of w_i * w_j in the integral basis."""
        return multiplication_table(self.basis, self.min_poly.coeffs)

    def mul(self, a, b, p=None):
        """Multiply two elements given in integral-basis coordinates (optionally mod p)."""
        return mul_coords(a, b, self.mult_table, p)

    def to_json(self) -> dict:
        return {
            "min_poly": list(self.min_poly.coeffs),
            "disc": str(self.disc),
            "signature": list(self.signature),
            "basis_num": [list(r) for r in self.basis_num],
            "basis_den": self.basis_den,
        }

    def __str__(self):
        return f"Q[x]/({render_poly(self.min_poly)})"


# ---------------------------------------------------------------- element arithmetic

def mul_power(a, b, f):
    """Product of two power-basis coordinate vectors modulo the monic polynomial f."""
    n = len(f) - 1
    prod = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
    for k in range(2 * n - 2, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n):
                prod[k - n + i] -= c * f[i]
    return prod[:n]


def multiplication_table(basis, f) -> list[list[list[int]]]:
    n = len(basis)
    inv = inverse_frac(basis)
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            c = vecmat(mul_power(basis[i], basis[j], f), inv)
            if any(x.denominator != 1 for x in c):
                raise ArithmeticError("basis does not span a ring")
            table[i][j] = table[j][i] = [int(x) for x in c]
    return table


def mul_coords(a, b, table, p=None):
    n = len(table)
    out = [0] * n
    for i, x in enumerate(a):
        if not x:
            continue
        row = table[i]
        for j, y in enumerate(b):
            if not y:
                continue
            xy = x * y
            for k, t in enumerate(row[j]):
                if t:
                    out[k] += xy * t
    if p is not None:
        out = [v % p for v in out]
    return out


def pow_coords(a, e, table, p, one):
    result = list(one)
    base = [x % p for x in a]
    while e:
        if e & 1:
            result = mul_coords(result, base, table, p)
        base = mul_coords(base, base, table, p)
        e >>= 1
    return result


# ---------------------------------------------------------------- discriminant, signature

def poly_discriminant(f: IntPoly) -> int:
    """disc of a monic polynomial as the determinant of the power-sum matrix."""
    n = f.degree
    s = power_sums(f.coeffs, 2 * n - 1)
    return det_int([[s[i + j] for j in range(n)] for i in range(n)])


def count_real_roots(f: IntPoly) -> int:
    """Number of distinct real roots by an exact Sturm sequence."""
    seq = [list(f.coeffs), pderiv(list(f.coeffs))]
    while len(seq[-1]) > 1:
        _, r = pdivmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])

    def changes(signs):
        signs = [s for s in signs if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def sgn(x):
        return (x > 0) - (x < 0)

    at_pos = [sgn(q[-1]) for q in seq]
    at_neg = [sgn(q[-1]) * (-1) ** (len(q) - 1) for q in seq]
    return changes(at_neg) - changes(at_pos)


# ---------------------------------------------------------------- irreducibility

def _subset_sums(degs):
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return sums


def screen_irreducible(f: IntPoly, pdisc: int) -> None:
    """Raise ReduciblePolynomial unless f is irreducible over Q.

    Factor-degree patterns modulo the first good primes usually certify
    irreducibility; otherwise an exact factorisation over Z decides.
    """
    n = f.degree
    if n <= 1:
        return
    if pdisc == 0:
        raise ReduciblePolynomial(f"{render_poly(f)} has a repeated factor")
    possible = set(range(n + 1))
    tried = 0
    for q in primes_up_to(2000):
        if pdisc % q == 0:
            continue
        degs = [g.degree for g, k in factor_mod_p(ModPoly(q, f.coeffs)) for _ in range(k)]
        possible &= _subset_sums(degs)
        if possible == {0, n}:
            return
        tried += 1
        if tried == SCREEN_PRIMES:
            break
    from sympy import Poly, symbols

    x = symbols("x")
    _, factors = Poly(list(reversed(f.coeffs)), x).factor_list()
    if len(factors) > 1 or factors[0][1] > 1:
        shown = " * ".join(f"({g.as_expr()})^{k}" if k > 1 else f"({g.as_expr()})" for g, k in factors)
        raise ReduciblePolynomial(f"{render_poly(f)} = {shown}")


# ---------------------------------------------------------------- maximal order

def canonical_basis(rows) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Lower-triangular HNF of a full-rank rational basis, as (numerators, denominator)."""
    d = reduce(lcm, (x.denominator for r in rows for x in r), 1)
    num = [[int(x * d) for x in r] for r in rows]
    n = len(num)
    rev = hnf([r[::-1] for r in num])[:n]
    low = [r[::-1] for r in rev][::-1]
    g = reduce(gcd, (x for r in low for x in r), d)
    return tuple(tuple(x // g for x in r) for r in low), d // g


def one_coords(basis) -> list[int]:
    """Coordinates of 1 in the given order basis."""
    n = len(basis)
    c = vecmat([1] + [0] * (n - 1), inverse_frac(basis))
    return [int(x) for x in c]


def frobenius_radical(table, one, p):
    """Basis (mod p) of the radical of O/pO: kernel of x -> x^q with q = p^j >= n."""
    n = len(table)
    q = p
    while q < n:
        q *= p
    rows = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        rows.append(pow_coords(e, q, table, p, one))
    return left_kernel_mod_p(rows, p)


def p_maximal_order(basis, f, p: int):
    """Enlarge the order spanned by `basis` until it is p-maximal (Pohst-Zassenhaus round 2)."""
    n = len(basis)
    while True:
        table = multiplication_table(basis, f)
        rad = frobenius_radical(table, one_coords(basis), p)
        if not rad:
            return basis
        eye = [[int(i == j) * p for j in range(n)] for i in range(n)]
        ideal = hnf(rad + eye)[:n]
        ideal_inv = inverse_frac(ideal)
        action = []
        for k in range(n):
            e = [0] * n
            e[k] = 1
            row = []
            for gen in ideal:
                c = vecmat(mul_coords(e, gen, table), ideal_inv)
                row.extend(int(x) % p for x in c)
            action.append(row)
        kern = left_kernel_mod_p(action, p)
        if not kern:
            return basis
        over = hnf(kern + eye)[:n]
        basis = [[sum(over[i][k] * basis[k][j] for k in range(n)) / p for j in range(n)] for i in range(n)]
        log.debug("p=%d: order enlarged, det now %s", p, det_frac(basis))


def maximal_order(f: IntPoly, pdisc: int):
    n = f.degree
    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    if n == 1:
        return basis
    for q, k in sorted(factor_int(pdisc).items()):
        if k < 2 or not dedekind_index_divides(f, q):
            continue
        basis = p_maximal_order(basis, list(f.coeffs), q)
    return basis


# ---------------------------------------------------------------- construction

def new_field(poly) -> NumberField:
    """Build the number field defined by a monic irreducible integer polynomial."""
    f = poly if isinstance(poly, IntPoly) else parse_poly(poly)
    if f.degree < 1:
        raise InvalidArgument("defining polynomial must have degree >= 1")
    if not f.is_monic():
        raise InvalidArgument(f"{render_poly(f)} is not monic")
    pdisc = poly_discriminant(f) if f.degree > 1 else 1
    screen_irreducible(f, pdisc)
    num, den = canonical_basis(maximal_order(f, pdisc))
    n = f.degree
    index = den**n // abs(det_int(num))
    disc, rem = divmod(pdisc, index * index)
    if rem:
        raise ArithmeticError("index squared does not divide the polynomial discriminant")
    r = count_real_roots(f)
    s = (n - r) // 2
    field = NumberField(f, num, den, disc, pdisc, (r, s))
    if (disc < 0) != (s % 2 == 1):
        raise ArithmeticError("sign of the discriminant disagrees with the signature")
    return field


def integral_basis(field: NumberField) -> tuple[list[list[Fraction]], int]:
    return field.basis, field.disc


def signature(field: NumberField) -> tuple[int, int]:
    return field.signature


def vp_disc(field: NumberField, p: int) -> int:
    return valuation(field.disc, p)
