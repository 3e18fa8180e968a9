"""Decomposition of rational primes in a maximal order.

Two independent routes produce the (e, f) multiset of a prime p:

* the Dedekind fast path, valid when p does not divide [O_L : Z[t]],
  reads the pairs off the factorisation of the defining polynomial mod p;
* the general path works inside the F_p-algebra O_L / pO_L, splitting it
  into local components with idempotents and measuring each component's
  radical.

The infinite place is encoded with real places as (1, 1) and complex places
as (2, 1), so that f_{-1} = r + s and alpha_{-1} = beta_{-1} = 2^s.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .arith import INFINITY, check_place
from .errors import InternalConsistencyError, InvalidArgument
from .linalg import left_kernel_mod_p, rref_mod_p
from .polys import IntPoly, ModPoly, factor_mod_p, mgcd, mstrip, pmul, psub

if TYPE_CHECKING:
    from .field import NumberField


def default_seed() -> int:
    return int(os.environ.get("RAMIFY_SEED", "0"))


@dataclass(frozen=True)
class SplittingType:
    p: int
    pairs: tuple[tuple[int, int], ...]
    warning: str | None = None

    def __init__(self, p, pairs, warning=None):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "pairs", tuple(sorted((int(e), int(f)) for e, f in pairs)))
        object.__setattr__(self, "warning", warning)

    @property
    def n(self) -> int:
        return sum(e * f for e, f in self.pairs)

    @property
    def g(self) -> int:
        return len(self.pairs)

    @property
    def e_sum(self) -> int:
        return sum(e for e, _ in self.pairs)

    @property
    def f_sum(self) -> int:
        return sum(f for _, f in self.pairs)

    def is_unramified(self) -> bool:
        return all(e == 1 for e, _ in self.pairs)

    def is_totally_split(self) -> bool:
        return all(e == 1 and f == 1 for e, f in self.pairs)

    def is_wild(self) -> bool:
        return self.p != INFINITY and any(e % self.p == 0 for e, _ in self.pairs)

    def to_json(self) -> dict:
        out = {"p": self.p, "pairs": [list(pr) for pr in self.pairs]}
        if self.warning:
            out["warning"] = self.warning
        return out


def dedekind_index_divides(poly: IntPoly, p: int, seed: int | None = None) -> bool:
    """Dedekind's criterion: does p divide the index [O_L : Z[t]] of the power order?"""
    f = list(poly.coeffs)
    factors = factor_mod_p(ModPoly(p, f), seed=default_seed() if seed is None else seed)
    g, h = [1], [1]
    for fac, k in factors:
        lift = list(fac.coeffs)
        g = pmul(g, lift)
        for _ in range(k - 1):
            h = pmul(h, lift)
    diff = psub(f, pmul(g, h))
    if any(c % p for c in diff):
        raise InternalConsistencyError("factorisation mod p does not reproduce the polynomial")
    big_f = mstrip([c // p for c in diff], p)
    t = mgcd(mgcd(big_f, g, p), h, p) if big_f else mgcd(g, h, p)
    return len(t) > 1


def _split_dedekind(field: NumberField, p: int, seed: int) -> list[tuple[int, int]]:
    return [(k, fac.degree) for fac, k in factor_mod_p(ModPoly(p, field.min_poly.coeffs), seed=seed)]


def _span(vectors, p):
    """Row basis of the span of vectors over F_p."""
    vectors = [v for v in vectors if any(x % p for x in v)]
    if not vectors:
        return []
    return rref_mod_p(vectors, p)[0]


def _split_general(field: NumberField, p: int) -> list[tuple[int, int]]:
    from .field import frobenius_radical, one_coords, pow_coords

    n = field.degree
    table = field.mult_table
    one = [x % p for x in one_coords(field.basis)]

    def mul(a, b):
        return field.mul(a, b, p)

    # subalgebra {x : x^p = x} is a product of g copies of F_p
    frob = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        row = pow_coords(e, p, table, p, one)
        row[i] = (row[i] - 1) % p
        frob.append(row)
    fixed = left_kernel_mod_p(frob, p)

    idempotents = [one]
    for z in fixed:
        refined = []
        for eps in idempotents:
            for c in range(p):
                zc = [(a - c * b) % p for a, b in zip(z, one)]
                w = pow_coords(zc, p - 1, table, p, one)
                e_c = mul(eps, [(a - b) % p for a, b in zip(one, w)])
                if any(e_c):
                    refined.append(e_c)
        idempotents = refined
    if len(idempotents) != len(fixed):
        raise InternalConsistencyError("idempotent splitting did not produce one component per prime")

    radical = frobenius_radical(table, one, p)
    basis = [[int(i == j) for j in range(n)] for i in range(n)]
    pairs = []
    for eps in idempotents:
        component = _span([mul(eps, b) for b in basis], p)
        rad = _span([mul(eps, r) for r in radical], p)
        f = len(component) - len(rad)
        dim = len(component)
        if f <= 0 or dim % f:
            raise InternalConsistencyError(f"component of dimension {dim} has residue degree {f}")
        e = dim // f
        # the maximal ideal of the local component is nilpotent of index exactly e
        power, k = rad, 1
        while power:
            if len(power) != (e - k) * f:
                raise InternalConsistencyError("radical filtration has unexpected dimensions")
            power = _span([mul(a, b) for a in power for b in rad], p)
            k += 1
        if k != e:
            raise InternalConsistencyError("nilpotency index disagrees with e")
        pairs.append((e, f))
    return pairs


def split_prime(field: NumberField, p: int, method: str = "auto", seed: int | None = None) -> SplittingType:
    """(e, f) multiset of p in O_L; method is "auto", "dedekind" or "general"."""
    check_place(p)
    warning = None if field.irreducibility_certified else "irreducibility not certified"
    if p == INFINITY:
        r, s = field.signature
        return SplittingType(p, [(1, 1)] * r + [(2, 1)] * s, warning)
    seed = default_seed() if seed is None else seed
    if method == "auto":
        method = "general" if field.index % p == 0 else "dedekind"
    if method == "dedekind":
        if field.index % p == 0:
            raise InvalidArgument(f"{p} divides the index; the Dedekind fast path does not apply")
        pairs = _split_dedekind(field, p, seed)
    elif method == "general":
        pairs = _split_general(field, p)
    else:
        raise InvalidArgument(f"unknown splitting method {method!r}")
    st = SplittingType(p, pairs, warning)
    if st.n != field.degree:
        raise InternalConsistencyError(f"sum of e*f is {st.n}, expected {field.degree}")
    return st
