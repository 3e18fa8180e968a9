"""Ramification invariants alpha_p, beta_p, nu_p and the diagonal form a_p.

Everything here is read off the splitting type of p, except nu_p which is
recovered from the field discriminant.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .arith import INFINITY, legendre, nonresidue, split_unit
from .errors import InternalConsistencyError, UndefinedInvariant
from .field import NumberField
from .splitting import SplittingType, split_prime

u = nonresidue


def _splitting(L_or_st, p) -> SplittingType:
    if isinstance(L_or_st, SplittingType):
        return L_or_st
    return split_prime(L_or_st, p)


def alpha_from_splitting(st: SplittingType) -> int:
    """prod e_i^f_i * u_p^(f_p - g_p)."""
    return prod(e**f for e, f in st.pairs) * nonresidue(st.p) ** (st.f_sum - st.g)


def beta_from_splitting(st: SplittingType) -> int:
    """(-1)^(sum floor((e_i-1)/2) f_i) * prod e_i^(f_i (e_i-1)) * u_p^(n - f_p - e_p + g_p)."""
    sign = (-1) ** sum((e - 1) // 2 * f for e, f in st.pairs)
    expo = st.n - st.f_sum - st.e_sum + st.g
    return sign * prod(e ** (f * (e - 1)) for e, f in st.pairs) * nonresidue(st.p) ** expo


def alpha(L: NumberField, p: int) -> int:
    return alpha_from_splitting(split_prime(L, p))


def beta(L: NumberField, p: int) -> int:
    return beta_from_splitting(split_prime(L, p))


def nu(L: NumberField, p: int, st: SplittingType | None = None) -> int:
    """Square class of nu_p as a tag: 1 or u_p.  Defined for odd primes that are not wild.

    nu_p is the unit class making disc(L) = p^(n - f_p) alpha beta nu up to unit squares.
    """
    if p == INFINITY or p == 2:
        raise UndefinedInvariant(f"nu is only defined at odd finite primes, not at {p}")
    st = st or split_prime(L, p)
    if st.is_wild():
        raise UndefinedInvariant(f"nu is undefined: {p} is wildly ramified")
    v, unit = split_unit(L.disc, p)
    if v != L.degree - st.f_sum:
        raise InternalConsistencyError(
            f"v_{p}(disc) = {v} but n - f_p = {L.degree - st.f_sum} at a tame prime"
        )
    cls = legendre(unit * alpha_from_splitting(st) * beta_from_splitting(st), p)
    return 1 if cls == 1 else nonresidue(p)


@dataclass(frozen=True)
class AForm:
    """Diagonal integral form a_p, one block per splitting pair."""

    p: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(x for b in self.blocks for x in b)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def det(self) -> int:
        return prod(self.entries)

    def render(self) -> str:
        return "<" + ",".join(str(x) for x in self.entries) + ">"


def a_block(e: int, f: int, p: int) -> tuple[int, ...]:
    if f == 1:
        return (e,)
    up = nonresidue(p)
    return (e,) * (f - 2) + (e * (-1) ** (f - 1), e * (-up) ** (f - 1))


def a_form(L: NumberField, p: int, st: SplittingType | None = None) -> AForm:
    st = st or split_prime(L, p)
    form = AForm(p, tuple(a_block(e, f, p) for e, f in st.pairs))
    if form.det != alpha_from_splitting(st):
        raise InternalConsistencyError("det(a_p) differs from alpha_p")
    return form


@dataclass(frozen=True)
class Flags:
    unramified: bool
    totally_split: bool
    wild: bool

    def to_json(self) -> dict:
        return {"unramified": self.unramified, "totally_split": self.totally_split, "wild": self.wild}


def classify(L: NumberField, p: int, st: SplittingType | None = None) -> Flags:
    """Ramification flags from the splitting, cross-checked against the alpha/beta criteria."""
    st = st or split_prime(L, p)
    flags = Flags(st.is_unramified(), st.is_totally_split(), st.is_wild())
    a, b = alpha_from_splitting(st), beta_from_splitting(st)
    checks = [
        ("beta = 1 iff unramified", (b == 1) == flags.unramified),
        ("alpha = 1 iff totally split", (a == 1) == flags.totally_split),
    ]
    if p != INFINITY:
        checks.append(("p | alpha iff wild", (a % p == 0) == flags.wild))
    for name, ok in checks:
        if not ok:
            raise InternalConsistencyError(f"{name} fails for p={p} in {L}: {st.pairs}")
    return flags


@dataclass(frozen=True)
class RamificationInvariants:
    p: int
    alpha: int
    beta: int
    nu: int | None
    flags: Flags
    splitting: SplittingType

    def nu_label(self) -> str:
        if self.nu is None:
            return "undefined"
        return "1" if self.nu == 1 else "u"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "nu": self.nu_label(),
            "flags": self.flags.to_json(),
        }


def invariants(L: NumberField, p: int) -> RamificationInvariants:
    st = split_prime(L, p)
    flags = classify(L, p, st)
    nu_tag = None
    if p not in (INFINITY, 2) and not flags.wild:
        nu_tag = nu(L, p, st)
    return RamificationInvariants(p, alpha_from_splitting(st), beta_from_splitting(st), nu_tag, flags, st)
