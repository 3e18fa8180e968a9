"""Quadratic forms over Z_p: Jordan decompositions, local invariants, isometry.

Gram matrices are bilinear: the hyperbolic plane 2xy has Gram antidiag(1, 1),
which is the 2-adic block U; V is the even block [[2, 1], [1, 2]].

For odd p a Jordan constituent is stored as square-class tags normalised to
(1, ..., 1, d) with d in {1, u_p}, so equal constituents compare equal.  For
p = 2 a constituent keeps its odd diagonal units mod 8 and counts of U and V.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .arith import INFINITY, check_place, hilbert, legendre, nonresidue, split_unit, valuation
from .errors import InvalidArgument

Indeterminate = None


def unit_tag(w: int, p: int) -> int:
    """Square-class tag of a p-adic unit: 1 or u_p for odd p, the residue mod 8 for p = 2."""
    if p == 2:
        return w % 8
    return 1 if legendre(w, p) == 1 else nonresidue(p)


def _tag_product(tags, p):
    if p == 2:
        out = 1
        for t in tags:
            out = out * t % 8
        return out
    odd = sum(1 for t in tags if t != 1) % 2
    return nonresidue(p) if odd else 1


@dataclass(frozen=True)
class JordanBlock:
    scale: int
    units: tuple[int, ...] = ()
    u_count: int = 0
    v_count: int = 0

    @property
    def dim(self) -> int:
        return len(self.units) + 2 * (self.u_count + self.v_count)

    @property
    def is_odd(self) -> bool:
        return bool(self.units)

    def unit_det(self, p: int) -> int:
        """Unit part of the constituent's determinant, as a tag."""
        if p == 2:
            return _tag_product(list(self.units) + [7] * self.u_count + [3] * self.v_count, 2)
        return _tag_product(self.units, p)


def _block(p, scale, units=(), u_count=0, v_count=0) -> JordanBlock:
    units = tuple(units)
    if p != 2 and units:
        units = (1,) * (len(units) - 1) + (_tag_product(units, p),)
    return JordanBlock(scale, units, u_count, v_count)


@dataclass(frozen=True)
class PAdicForm:
    p: int
    jordan: tuple[JordanBlock, ...] = ()
    signature: tuple[int, int] | None = field(default=None)

    @property
    def dim(self) -> int:
        if self.p == INFINITY:
            return sum(self.signature)
        return sum(b.dim for b in self.jordan)

    @property
    def scales(self) -> list[int]:
        return [b.scale for b in self.jordan]

    def block(self, scale: int) -> JordanBlock | None:
        return next((b for b in self.jordan if b.scale == scale), None)

    def __add__(self, other: "PAdicForm") -> "PAdicForm":
        return direct_sum(self, other)

    def render(self) -> str:
        return render_form(self)

    def __str__(self):
        return self.render()


def _assemble(p, pieces) -> PAdicForm:
    """Merge (scale, units, u, v) pieces into a canonical PAdicForm."""
    merged = defaultdict(lambda: [[], 0, 0])
    for scale, units, uc, vc in pieces:
        m = merged[scale]
        m[0].extend(units)
        m[1] += uc
        m[2] += vc
    blocks = [
        _block(p, s, m[0], m[1], m[2]) for s, m in sorted(merged.items()) if m[0] or m[1] or m[2]
    ]
    return PAdicForm(p, tuple(blocks))


def diagonal_form(p: int, entries) -> PAdicForm:
    """The form <a_1, ..., a_k> over Z_p (or R when p = -1) for nonzero rationals a_i."""
    check_place(p)
    if p == INFINITY:
        pos = sum(1 for a in entries if Fraction(a) > 0)
        return PAdicForm(p, (), (pos, len(entries) - pos))
    pieces = []
    for a in entries:
        v, w = split_unit(a, p)
        pieces.append((v, [unit_tag(w, p)], 0, 0))
    return _assemble(p, pieces)


def direct_sum(*forms: PAdicForm) -> PAdicForm:
    if not forms:
        raise InvalidArgument("direct_sum needs at least one form")
    p = forms[0].p
    if any(f.p != p for f in forms):
        raise InvalidArgument("cannot add forms over different primes")
    if p == INFINITY:
        return PAdicForm(p, (), (sum(f.signature[0] for f in forms), sum(f.signature[1] for f in forms)))
    return _assemble(p, [(b.scale, b.units, b.u_count, b.v_count) for f in forms for b in f.jordan])


def rescale(form: PAdicForm, k: int) -> PAdicForm:
    """p^k tensor form."""
    if form.p == INFINITY:
        return form
    return PAdicForm(form.p, tuple(JordanBlock(b.scale + k, b.units, b.u_count, b.v_count) for b in form.jordan))


def hyperbolic_sum(k: int, scale: int = 1) -> PAdicForm:
    """k copies of the hyperbolic plane over Z_2, scaled by 2^scale."""
    if k < 0:
        raise InvalidArgument("count must be non-negative")
    if k == 0:
        return PAdicForm(2, ())
    return PAdicForm(2, (JordanBlock(scale, (), k, 0),))


# ---------------------------------------------------------------- Jordan decomposition

def _schur(m, idx):
    """Schur complement of the principal block on rows/cols idx."""
    rest = [i for i in range(len(m)) if i not in idx]
    if len(idx) == 1:
        (i,) = idx
        a = m[i][i]
        return [[m[r][c] - m[r][i] * m[i][c] / a for c in rest] for r in rest]
    i, j = idx
    a, b, c = m[i][i], m[i][j], m[j][j]
    det = a * c - b * b
    out = []
    for r in rest:
        x, y = m[r][i], m[r][j]
        # (x, y) B^{-1} (x', y')^T with B^{-1} = [[c, -b], [-b, a]] / det
        row = []
        for s in rest:
            x2, y2 = m[s][i], m[s][j]
            row.append(m[r][s] - (x * (c * x2 - b * y2) + y * (-b * x2 + a * y2)) / det)
        out.append(row)
    return out


def _val(x, p):
    return valuation(x, p) if x else None


def jordan_decompose(gram, p: int) -> PAdicForm:
    """Jordan decomposition over Z_p of a nondegenerate symmetric rational Gram matrix."""
    check_place(p)
    m = [[Fraction(x) for x in row] for row in gram]
    n = len(m)
    if any(len(r) != n for r in m) or any(m[i][j] != m[j][i] for i in range(n) for j in range(n)):
        raise InvalidArgument("Gram matrix must be square and symmetric")
    if p == INFINITY:
        return _signature(m)

    pieces = []
    while m:
        vals = {(i, j): _val(m[i][j], p) for i in range(len(m)) for j in range(i, len(m)) if m[i][j]}
        if not vals:
            raise InvalidArgument("singular Gram matrix")
        vmin = min(vals.values())
        diag = [i for i in range(len(m)) if vals.get((i, i)) == vmin]
        if diag:
            i = diag[0]
            _, w = split_unit(m[i][i], p)
            pieces.append((vmin, [unit_tag(w, p)], 0, 0))
            m = _schur(m, [i])
            continue
        i, j = next(k for k, v in vals.items() if v == vmin)
        if p != 2:
            # e_i <- e_i + e_j makes the diagonal entry reach the minimal valuation
            n_ = len(m)
            for c in range(n_):
                m[i][c] += m[j][c]
            for r in range(n_):
                m[r][i] += m[r][j]
            continue
        d = m[i][i] * m[j][j] - m[i][j] ** 2
        dv, w = split_unit(d, 2)
        if dv != 2 * vmin or w % 4 != 3:
            raise ArithmeticError("even 2x2 pivot is not unimodular at its scale")
        pieces.append((vmin, [], 1, 0) if w % 8 == 7 else (vmin, [], 0, 1))
        m = _schur(m, [i, j])
    return _assemble(p, pieces)


def _signature(m) -> PAdicForm:
    pos = neg = 0
    while m:
        diag = next((i for i in range(len(m)) if m[i][i]), None)
        if diag is None:
            pair = next(((i, j) for i in range(len(m)) for j in range(i + 1, len(m)) if m[i][j]), None)
            if pair is None:
                raise InvalidArgument("singular Gram matrix")
            i, j = pair
            for c in range(len(m)):
                m[i][c] += m[j][c]
            for r in range(len(m)):
                m[r][i] += m[r][j]
            continue
        if m[diag][diag] > 0:
            pos += 1
        else:
            neg += 1
        m = _schur(m, [diag])
    return PAdicForm(INFINITY, (), (pos, neg))


# ---------------------------------------------------------------- invariants

def det_square_class(form: PAdicForm) -> tuple[int, int]:
    """(valuation of det, unit square class of det).

    The class is a tag for odd p, a residue mod 8 for p = 2, and the sign for p = -1.
    """
    if form.p == INFINITY:
        return 0, (-1) ** form.signature[1]
    v = sum(b.scale * b.dim for b in form.jordan)
    return v, _tag_product([b.unit_det(form.p) for b in form.jordan], form.p)


def rational_diagonal(form: PAdicForm) -> list[int]:
    """Integers whose diagonal form is Q_p-isometric to the form."""
    p = form.p
    out = []
    for b in form.jordan:
        q = p**b.scale if b.scale >= 0 else Fraction(1, p ** (-b.scale))
        out.extend(t * q for t in b.units)
        out.extend([2 * q, -2 * q] * b.u_count)
        out.extend([2 * q, 6 * q] * b.v_count)
    return out


def hasse_witt_diagonal(entries, p: int) -> int:
    s = 1
    for a, b in combinations(entries, 2):
        s *= hilbert(a, b, p)
    return s


def hasse_witt(form: PAdicForm) -> int:
    """Product over i < j of (a_i, a_j)_p on a diagonalisation."""
    if form.p == INFINITY:
        raise InvalidArgument("hasse_witt is defined here for finite p only")
    return hasse_witt_diagonal(rational_diagonal(form), form.p)


# ---------------------------------------------------------------- isometry

def _shape(form):
    return [(b.scale, b.dim, b.is_odd) for b in form.jordan]


def _two_adic_invariants(form):
    """Normalised per-scale determinants, or None outside the decidable family.

    The family: a single Jordan constituent, or two at consecutive scales with
    the lower one odd and the upper one even.  In the second case a sign walk
    (U + V at the upper scale traded for a factor 5 on the lower determinant)
    brings the upper constituent to a pure sum of U's.
    """
    blocks = form.jordan
    if len(blocks) == 1:
        return (blocks[0].unit_det(2),)
    if len(blocks) == 2:
        lo, hi = blocks
        if hi.scale == lo.scale + 1 and lo.is_odd and not hi.is_odd:
            d_lo = lo.unit_det(2)
            if hi.v_count % 2:
                d_lo = d_lo * 5 % 8
            return (d_lo, (-1) ** (hi.u_count + hi.v_count) % 8)
    return None


def isometric_zp(f1: PAdicForm, f2: PAdicForm):
    """True / False, or None (indeterminate) for 2-adic forms outside the decidable family."""
    if f1.p != f2.p:
        raise InvalidArgument("forms live over different primes")
    p = f1.p
    if p == INFINITY:
        return f1.signature == f2.signature
    if _shape(f1) != _shape(f2):
        return False
    if p != 2:
        return [b.unit_det(p) for b in f1.jordan] == [b.unit_det(p) for b in f2.jordan]
    inv1, inv2 = _two_adic_invariants(f1), _two_adic_invariants(f2)
    if inv1 is None or inv2 is None:
        return Indeterminate
    return inv1 == inv2 and hasse_witt(f1) == hasse_witt(f2)


# ---------------------------------------------------------------- rendering

def _prefix(p, scale):
    if scale == 0:
        return ""
    if scale == 1:
        return f"{p}*"
    if scale > 0:
        return f"{p ** scale}*"
    return f"{p}^{scale}*"


def render_form(form: PAdicForm) -> str:
    """Stable text form, e.g. ``<2> + 5*<2>``, ``<1,5> + 2*U``, ``sig(3,1)``."""
    if form.p == INFINITY:
        return f"sig({form.signature[0]},{form.signature[1]})"
    parts = []
    for b in form.jordan:
        pre = _prefix(form.p, b.scale)
        if b.units:
            parts.append(pre + "<" + ",".join(str(u) for u in b.units) + ">")
        for name, count in (("U", b.u_count), ("V", b.v_count)):
            if count:
                parts.append(pre + name + (f"^{count}" if count > 1 else ""))
    return " + ".join(parts) if parts else "0"
