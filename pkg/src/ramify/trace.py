"""The integral trace form x -> tr(x^2) on O_L and its predicted Z_p structure at tame primes."""
from __future__ import annotations

from dataclasses import dataclass, field

from .arith import INFINITY, is_prime, legendre, nonresidue, split_unit
from .errors import InternalConsistencyError, InvalidArgument, WildRamificationError
from .field import NumberField
from .invariants import a_form, alpha_from_splitting, beta_from_splitting, nu
from .linalg import det_frac
from .polys import power_sums
from .qforms import (
    PAdicForm,
    diagonal_form,
    direct_sum,
    hyperbolic_sum,
    isometric_zp,
    jordan_decompose,
    rescale,
)
from .splitting import SplittingType, split_prime


def trace_gram(L: NumberField) -> list[list[int]]:
    """Gram matrix tr(w_i w_j) on the integral basis; its determinant is disc(L)."""
    n = L.degree
    s = power_sums(L.min_poly.coeffs, 2 * n - 1)
    B = L.basis
    # tr(w_i w_j) = sum_a sum_b B[i][a] B[j][b] s_{a+b}
    half = [[sum(B[i][a] * s[a + b] for a in range(n)) for b in range(n)] for i in range(n)]
    gram = [[sum(half[i][b] * B[j][b] for b in range(n)) for j in range(n)] for i in range(n)]
    if any(x.denominator != 1 for row in gram for x in row):
        raise InternalConsistencyError("trace Gram matrix is not integral")
    gram = [[int(x) for x in row] for row in gram]
    if det_frac(gram) != L.disc:
        raise InternalConsistencyError("det of the trace Gram matrix differs from disc(L)")
    return gram


def _require_tame(st: SplittingType, p: int):
    if p == INFINITY or not is_prime(p):
        raise InvalidArgument(f"trace predictions need a finite prime, got {p}")
    if st.is_wild():
        raise WildRamificationError(p, f"p={p}, splitting {list(st.pairs)}")


def local_trace_shape(e: int, f: int, p: int, nu_class: int = 1) -> PAdicForm:
    """Z_p trace form of a tame local field with ramification index e and residue degree f."""
    if e % p == 0:
        raise WildRamificationError(p, f"e={e} is divisible by p")
    up = nonresidue(p)
    if p == 2:
        unimod = diagonal_form(2, [e] if f == 1 else [e] * (f - 2) + [e * (-1) ** (f - 1), e * (-up) ** (f - 1)])
        return direct_sum(unimod, hyperbolic_sum(f * (e - 1) // 2, scale=1))
    top = e**f * up ** (f - 1)
    unimod = diagonal_form(p, [1] * (f - 1) + [top])
    if e == 1:
        return unimod
    sign = (-1) ** (f * ((e - 1) // 2))
    last = sign * (top * nu_class) ** (e - 1)
    return direct_sum(unimod, rescale(diagonal_form(p, [1] * (f * (e - 1) - 1) + [last]), 1))


def _global_route(L, p, st) -> PAdicForm:
    n, fp = L.degree, st.f_sum
    a = diagonal_form(p, a_form(L, p, st).entries)
    if p == 2:
        return direct_sum(a, hyperbolic_sum((n - fp) // 2, scale=1))
    if n == fp:
        return a
    bn = beta_from_splitting(st) * nu(L, p, st)
    return direct_sum(a, rescale(diagonal_form(p, [1] * (n - fp - 1) + [bn]), 1))


def _local_route(L, p, st) -> PAdicForm:
    """Orthogonal sum of local trace shapes; nu_p is placed on one factor with even e."""
    nu_class = nu(L, p, st) if p != 2 else 1
    shapes = []
    for e, f in st.pairs:
        cls = 1
        if nu_class != 1 and e % 2 == 0:
            cls, nu_class = nu_class, 1
        shapes.append(local_trace_shape(e, f, p, cls))
    if nu_class != 1:
        raise InternalConsistencyError("nu_p is nontrivial but no factor has even ramification index")
    return direct_sum(*shapes)


def predicted_local_trace(L: NumberField, p: int, st: SplittingType | None = None) -> PAdicForm:
    """Predicted Jordan decomposition of the trace form over Z_p for a tame prime p."""
    st = st or split_prime(L, p)
    _require_tame(st, p)
    glob = _global_route(L, p, st)
    local = _local_route(L, p, st)
    if isometric_zp(glob, local) is not True:
        raise InternalConsistencyError(f"global and per-place predictions disagree at p={p}")
    if p != 2:
        # a_p is Z_p-isometric to <1, ..., 1, alpha_p>
        alt = diagonal_form(p, [1] * (st.f_sum - 1) + [alpha_from_splitting(st)])
        if not isometric_zp(alt, diagonal_form(p, a_form(L, p, st).entries)):
            raise InternalConsistencyError("a_p is not isometric to <1,...,1,alpha_p>")
    return glob


@dataclass(frozen=True)
class TraceVerdict:
    p: int
    predicted: PAdicForm | None
    oracle: PAdicForm
    notes: tuple[str, ...] = field(default=())

    @property
    def match(self):
        """Recomputed on every access; None means indeterminate or not predicted."""
        if self.predicted is None:
            return None
        return isometric_zp(self.predicted, self.oracle)

    def to_json(self) -> dict:
        out = {
            "p": self.p,
            "predicted": self.predicted.render() if self.predicted is not None else None,
            "oracle": self.oracle.render(),
            "match": self.match,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def oracle_local_trace(L: NumberField, p: int) -> PAdicForm:
    return jordan_decompose(trace_gram(L), p)


def verify_local_trace(L: NumberField, p: int, oracle_only: bool = False) -> TraceVerdict:
    st = split_prime(L, p)
    oracle = oracle_local_trace(L, p)
    if oracle_only:
        note = "wild prime: prediction skipped" if st.is_wild() else "prediction skipped on request"
        return TraceVerdict(p, None, oracle, (note,))
    return TraceVerdict(p, predicted_local_trace(L, p, st), oracle)


def trace_genus_equal(K: NumberField, L: NumberField, p: int) -> bool:
    """Are the trace forms of K and L isometric over Z_p?  Decided by comparing (alpha_p / p).

    Requires equal degrees, p odd and tame in both fields, and discriminants equal up to
    p-adic unit squares.
    """
    if K.degree != L.degree:
        raise InvalidArgument("hypothesis failed: fields have different degrees")
    if p == INFINITY or p == 2 or not is_prime(p):
        raise InvalidArgument(f"hypothesis failed: {p} is not an odd prime")
    sk, sl = split_prime(K, p), split_prime(L, p)
    if sk.is_wild() or sl.is_wild():
        raise InvalidArgument(f"hypothesis failed: {p} is wildly ramified in one of the fields")
    vk, wk = split_unit(K.disc, p)
    vl, wl = split_unit(L.disc, p)
    if vk != vl or legendre(wk * wl, p) != 1:
        raise InvalidArgument("hypothesis failed: discriminants differ modulo p-adic unit squares")
    return legendre(alpha_from_splitting(sk), p) == legendre(alpha_from_splitting(sl), p)
