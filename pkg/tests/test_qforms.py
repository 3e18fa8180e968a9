import random
from fractions import Fraction

import pytest

from ramify.arith import INFINITY, hilbert, legendre, split_unit, unit_class_mod8
from ramify.errors import InvalidArgument
from ramify.qforms import (
    PAdicForm,
    det_square_class,
    diagonal_form,
    direct_sum,
    hasse_witt,
    hasse_witt_diagonal,
    hyperbolic_sum,
    isometric_zp,
    jordan_decompose,
    rescale,
)

U = [[0, 1], [1, 0]]
V = [[2, 1], [1, 2]]


def gauss_diagonal(gram):
    """Rational diagonalisation by symmetric elimination (test oracle)."""
    m = [[Fraction(x) for x in row] for row in gram]
    out = []
    while m:
        n = len(m)
        k = next((i for i in range(n) if m[i][i]), None)
        if k is None:
            nz = [(i, j) for i in range(n) for j in range(n) if m[i][j]]
            if not nz:
                return out + [Fraction(0)] * n
            i, j = nz[0]
            for c in range(n):
                m[i][c] += m[j][c]
            for r in range(n):
                m[r][i] += m[r][j]
            continue
        a = m[k][k]
        out.append(a)
        rest = [i for i in range(n) if i != k]
        m = [[m[r][c] - m[r][k] * m[k][c] / a for c in rest] for r in rest]
    return out


def det(gram):
    out = Fraction(1)
    for a in gauss_diagonal(gram):
        out *= a
    return out


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    k = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[k + i][k + j] = x
        k += len(b)
    return out


def scaled(m, c):
    return [[c * x for x in row] for row in m]


def random_unimodular(rng, n):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            m[i] = [-x for x in m[i]]
            continue
        c = rng.randint(-3, 3)
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m


def conjugate(g, a):
    n = len(g)
    ag = [[sum(a[i][k] * g[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [[sum(ag[i][k] * a[j][k] for k in range(n)) for j in range(n)] for i in range(n)]


def random_symmetric(rng, n, bound=12):
    while True:
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = rng.randint(-bound, bound)
        if det(m) != 0:
            return m


# ---------------------------------------------------------------- examples

def test_jordan_examples():
    assert jordan_decompose([[2, 1], [1, 3]], 5) == diagonal_form(5, [2, 10])
    assert jordan_decompose([[2, 1], [1, 3]], 5).render() == "<2> + 5*<2>"
    for p in (2, 3, 7):
        assert jordan_decompose([[int(i == j) for j in range(4)] for i in range(4)], p) == diagonal_form(p, [1] * 4)
    assert jordan_decompose(U, 2) == hyperbolic_sum(1, scale=0)
    assert jordan_decompose(U, 2).render() == "U"


def test_det_square_class_examples():
    assert det_square_class(diagonal_form(5, [2, 10])) == (1, 1)
    assert det_square_class(diagonal_form(3, [1, 1, 1])) == (0, 1)
    assert det_square_class(jordan_decompose(U, 2)) == (0, 7)


def test_hasse_witt_examples():
    assert hasse_witt(diagonal_form(5, [1, 1])) == 1
    assert hasse_witt(diagonal_form(2, [2, 5])) == -1
    for f in range(2, 9):
        entries = [1] * (f - 2) + [(-1) ** (f - 1), (-5) ** (f - 1)]
        assert hasse_witt(diagonal_form(2, entries)) == (-1) ** (f - 1)


def test_isometry_examples():
    assert isometric_zp(diagonal_form(5, [1, 2]), diagonal_form(5, [2, 2])) is False
    f = diagonal_form(5, [1, 5])
    assert isometric_zp(f, f) is True
    assert isometric_zp(diagonal_form(5, [1, 5]), diagonal_form(5, [4, 5])) is True
    with pytest.raises(InvalidArgument):
        isometric_zp(diagonal_form(3, [1]), diagonal_form(5, [1]))


def test_hyperbolic_sum_examples():
    assert hyperbolic_sum(0).dim == 0
    assert det_square_class(hyperbolic_sum(1, scale=1)) == (2, 7)
    assert hyperbolic_sum(3).dim == 6


def test_sign_walk_identity():
    # <1> + 2V and <5> + 2U are isometric over Z_2
    a = jordan_decompose(block_diag([[1]], scaled(V, 2)), 2)
    b = jordan_decompose(block_diag([[5]], scaled(U, 2)), 2)
    assert isometric_zp(a, b) is True
    assert isometric_zp(a, jordan_decompose(block_diag([[1]], scaled(U, 2)), 2)) is False


def test_two_adic_unimodular_classes():
    # <1,1> and <3,3> share det 1 but differ in Hasse-Witt; <1,1,1> ~ <3,3,3>? det 1 vs 3
    assert isometric_zp(diagonal_form(2, [1, 1]), diagonal_form(2, [3, 3])) is False
    assert isometric_zp(diagonal_form(2, [1, 1]), diagonal_form(2, [5, 5])) is True
    assert isometric_zp(diagonal_form(2, [1, 3]), diagonal_form(2, [5, 7])) is True
    # odd constituent absorbs U: <1> + U ~ <1,1,7>, <1,1,7> vs <3,3,7>?
    assert isometric_zp(jordan_decompose(block_diag([[1]], U), 2), diagonal_form(2, [1, 1, 7])) is True


def test_infinite_place():
    assert jordan_decompose([[1, 2], [2, 1]], INFINITY).signature == (1, 1)
    assert jordan_decompose(U, INFINITY).render() == "sig(1,1)"


# ---------------------------------------------------------------- properties

@pytest.mark.parametrize("p", [2, 3, 5, 7, INFINITY])
def test_decomposition_preserves_dim_det_and_hasse(p):
    rng = random.Random(100 + p)
    for _ in range(100):
        n = rng.randint(1, 5)
        g = random_symmetric(rng, n)
        form = jordan_decompose(g, p)
        assert form.dim == n
        d = det(g)
        if p == INFINITY:
            assert det_square_class(form)[1] == (1 if d > 0 else -1)
            continue
        v, w = split_unit(d, p)
        fv, fw = det_square_class(form)
        assert fv == v
        if p == 2:
            assert fw == unit_class_mod8(w)
        else:
            assert (fw == 1) == (legendre(w, p) == 1)
        assert hasse_witt(form) == hasse_witt_diagonal(gauss_diagonal(g), p)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_isometry_invariant_under_unimodular_change_of_basis(p):
    rng = random.Random(200 + p)
    decided = 0
    for _ in range(80):
        n = rng.randint(1, 4)
        g = random_symmetric(rng, n)
        h = conjugate(g, random_unimodular(rng, n))
        verdict = isometric_zp(jordan_decompose(g, p), jordan_decompose(h, p))
        if p == 2:
            assert verdict is not False
            decided += verdict is True
        else:
            assert verdict is True
    if p == 2:
        assert decided > 20


def test_odd_isometry_is_an_equivalence_relation():
    rng = random.Random(7)
    forms = [jordan_decompose(random_symmetric(rng, rng.randint(1, 3), 6), 3) for _ in range(40)]
    for a in forms:
        assert isometric_zp(a, a)
        for b in forms:
            assert isometric_zp(a, b) == isometric_zp(b, a)
            if isometric_zp(a, b):
                for c in forms:
                    if isometric_zp(b, c):
                        assert isometric_zp(a, c)


def kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def test_hyperbolic_tensor_unimodular():
    # H (x) T is H^f for every unimodular 2-adic T of dimension f
    rng = random.Random(8)
    checked = 0
    while checked < 60:
        f = rng.randint(1, 4)
        t = random_symmetric(rng, f, 9)
        if det(t).numerator % 2 == 0:
            continue
        checked += 1
        form = jordan_decompose(kron(U, t), 2)
        assert isometric_zp(form, hyperbolic_sum(f, scale=0)) is True


def test_two_adic_decidable_family_is_complete():
    # every pair of lattices <odd units> + 2(U/V stack) with equal invariants is isometric,
    # and a change to any single invariant is detected
    rng = random.Random(9)
    for _ in range(150):
        k = rng.randint(1, 3)
        h = rng.randint(1, 2)
        units = [rng.choice([1, 3, 5, 7]) for _ in range(k)]
        pieces = [[[u]] for u in units] + [scaled(rng.choice([U, V]), 2) for _ in range(h)]
        g = block_diag(*pieces)
        form = jordan_decompose(g, 2)
        moved = jordan_decompose(conjugate(g, random_unimodular(rng, len(g))), 2)
        assert isometric_zp(form, moved) is True
        # change one unit by a non-square: det class moves, so the forms must differ
        units2 = list(units)
        units2[0] = units2[0] * 3 % 8
        other = jordan_decompose(block_diag(*[[[u]] for u in units2], *pieces[k:]), 2)
        assert isometric_zp(form, other) is False


def test_mutated_predictions_are_rejected():
    base = direct_sum(diagonal_form(5, [1, 2]), rescale(diagonal_form(5, [1]), 1))
    assert isometric_zp(base, direct_sum(diagonal_form(5, [1, 1]), rescale(diagonal_form(5, [1]), 1))) is False
    assert isometric_zp(base, direct_sum(diagonal_form(5, [1, 2]), rescale(diagonal_form(5, [2]), 1))) is False
    assert isometric_zp(base, direct_sum(diagonal_form(5, [1, 2, 1]))) is False
    two = direct_sum(diagonal_form(2, [1, 7, 3]), hyperbolic_sum(2))
    assert isometric_zp(two, direct_sum(diagonal_form(2, [1, 7, 7]), hyperbolic_sum(2))) is False
    assert isometric_zp(two, direct_sum(diagonal_form(2, [1, 7, 3]), hyperbolic_sum(1))) is False


def test_rescale_and_render():
    f = rescale(diagonal_form(3, [1, 2]), 2)
    assert f.render() == "9*<1,2>"
    assert PAdicForm(2).render() == "0"
    assert direct_sum(diagonal_form(2, [1, 7, 3]), hyperbolic_sum(2)).render() == "<1,7,3> + 2*U^2"


def test_hilbert_agrees_with_hasse_on_binary():
    for a in (1, 2, 3, 5, 6, 7, 10):
        for b in (1, 2, 3, 5, 6, 7, 10):
            assert hasse_witt(diagonal_form(2, [a, b])) == hilbert(a, b, 2)
