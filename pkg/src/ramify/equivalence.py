"""Comparing fields through their alpha_p fingerprints."""
from __future__ import annotations

from dataclasses import dataclass

from .arith import INFINITY, primes_up_to
from .errors import InternalConsistencyError, InvalidArgument
from .field import NumberField
from .invariants import alpha_from_splitting
from .parse import render_poly
from .splitting import split_prime

DEFAULT_BOUND = 1000

CONSISTENT = "consistent"
NOT_EQUIVALENT = "not equivalent"
DEGREE_MISMATCH = "degree mismatch"


@dataclass(frozen=True)
class AlphaFingerprint:
    field_id: str
    bound: int
    alphas: dict[int, int]

    def to_json(self) -> dict:
        return {
            "field": self.field_id,
            "bound": self.bound,
            "alphas": {str(p): str(a) for p, a in self.alphas.items()},
        }


def _places(bound):
    return [INFINITY] + primes_up_to(bound)


def alpha_fingerprint(L: NumberField, bound: int = DEFAULT_BOUND) -> AlphaFingerprint:
    if bound < 2:
        raise InvalidArgument("bound must be at least 2")
    alphas = {p: alpha_from_splitting(split_prime(L, p)) for p in _places(bound)}
    return AlphaFingerprint(render_poly(L.min_poly), bound, alphas)


@dataclass(frozen=True)
class PrimeDifference:
    p: int
    alpha_K: int
    alpha_L: int
    ramified: bool
    g_K: int
    g_L: int

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "alpha_K": str(self.alpha_K),
            "alpha_L": str(self.alpha_L),
            "ramified": self.ramified,
            "g_K": self.g_K,
            "g_L": self.g_L,
        }


@dataclass(frozen=True)
class ComparisonReport:
    bound: int
    differs: tuple[PrimeDifference, ...]
    verdict: str

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "differs": [d.to_json() for d in self.differs],
            "verdict": self.verdict,
        }


def compare_fields(K: NumberField, L: NumberField, bound: int = DEFAULT_BOUND) -> ComparisonReport:
    """Scan p <= bound (and the infinite place) for primes where alpha_p differs.

    A clean scan only says the fields are consistent with arithmetic equivalence up
    to the bound.  Differences at primes ramified in either field are reported but
    tolerated; a difference at an unramified prime, or at infinity (the zeta
    function fixes the signature), proves the fields are not equivalent.
    """
    if bound < 2:
        raise InvalidArgument("bound must be at least 2")
    if K.degree != L.degree:
        return ComparisonReport(bound, (), DEGREE_MISMATCH)
    differs = []
    verdict = CONSISTENT
    for p in _places(bound):
        sk, sl = split_prime(K, p), split_prime(L, p)
        ak, al = alpha_from_splitting(sk), alpha_from_splitting(sl)
        unramified = sk.is_unramified() and sl.is_unramified()
        if p != INFINITY and unramified and (ak == al) != (sk.g == sl.g):
            raise InternalConsistencyError(f"alpha equality and g equality disagree at unramified p={p}")
        if ak == al:
            continue
        differs.append(PrimeDifference(p, ak, al, not unramified, sk.g, sl.g))
        if p == INFINITY or unramified:
            verdict = NOT_EQUIVALENT
    return ComparisonReport(bound, tuple(differs), verdict)
