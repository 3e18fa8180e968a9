"""Integer and rational number theory: valuations, residue symbols, Hilbert symbols."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt

from sympy import factorint as _factorint
from sympy import isprime as _isprime
from sympy import primerange

from .errors import InvalidArgument

INFINITY = -1  # the archimedean place, following Conway's convention


def is_prime(n: int) -> bool:
    return n > 1 and bool(_isprime(n))


def check_place(p: int) -> None:
    if p != INFINITY and not is_prime(p):
        raise InvalidArgument(f"{p} is neither a prime nor -1")


def primes_up_to(bound: int) -> list[int]:
    return list(primerange(2, bound + 1))


def factor_int(n: int) -> dict[int, int]:
    """Prime factorisation of |n|; n must be nonzero."""
    if n == 0:
        raise InvalidArgument("cannot factor 0")
    return {int(q): int(k) for q, k in _factorint(abs(n)).items()}


def _as_fraction(a) -> Fraction:
    a = Fraction(a)
    if a == 0:
        raise InvalidArgument("argument must be nonzero")
    return a


def _vint(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(a, p: int) -> int:
    """p-adic valuation of a nonzero rational; sign(a) when p == -1."""
    a = _as_fraction(a)
    if p == INFINITY:
        return 1 if a > 0 else -1
    check_place(p)
    return _vint(a.numerator, p) - _vint(a.denominator, p)


def split_unit(a, p: int) -> tuple[int, int]:
    """Write a = p^v * u * (square of a p-unit), returning (v, u) with u an integer prime to p.

    The integer u has the same p-adic unit square class as the unit part of a.
    """
    a = _as_fraction(a)
    v = valuation(a, p)
    num, den = a.numerator, a.denominator
    if v >= 0:
        num //= p**v
    else:
        den //= p ** (-v)
    return v, num * den


def legendre(a: int, p: int) -> int:
    if p == INFINITY or p % 2 == 0 or not is_prime(p):
        raise InvalidArgument(f"legendre symbol needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=None)
def nonresidue(p: int) -> int:
    """The integer u_p: -1 at infinity, 5 at 2, else the least quadratic non-residue."""
    if p == INFINITY:
        return -1
    check_place(p)
    if p == 2:
        return 5
    return next(u for u in range(2, p) if legendre(u, p) == -1)


def hilbert(a, b, p: int) -> int:
    """Hilbert symbol (a, b)_p over Q_p, with p == -1 meaning the reals."""
    a = _as_fraction(a)
    b = _as_fraction(b)
    check_place(p)
    if p == INFINITY:
        return -1 if a < 0 and b < 0 else 1
    va, u = split_unit(a, p)
    vb, w = split_unit(b, p)
    if p == 2:
        eps_u, eps_w = (u - 1) // 2 % 2, (w - 1) // 2 % 2
        om_u, om_w = (u * u - 1) // 8 % 2, (w * w - 1) // 8 % 2
        e = eps_u * eps_w + va * om_w + vb * om_u
        return -1 if e % 2 else 1
    s = -1 if (va * vb * ((p - 1) // 2)) % 2 else 1
    if vb % 2:
        s *= legendre(u, p)
    if va % 2:
        s *= legendre(w, p)
    return s


def unit_class_mod8(u: int) -> int:
    if u % 2 == 0:
        raise InvalidArgument("2-adic unit class needs an odd integer")
    return u % 8


def is_square_int(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n
