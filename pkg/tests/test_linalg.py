import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from oracles import det
from ramify.linalg import (
    IntMatrix,
    det_frac,
    det_int,
    hnf,
    inverse_frac,
    kernel_mod_p,
    left_kernel_mod_p,
    matmul,
    rank_mod_p,
)


def _rows(m):
    return m.to_rows() if isinstance(m, IntMatrix) else m


def test_hnf_examples():
    assert _rows(hnf([[1, 0], [0, 1]])) == [[1, 0], [0, 1]]
    assert _rows(hnf([[2, 0], [1, 1]])) == [[1, 1], [0, 2]]
    zero = _rows(hnf([[0, 0], [0, 0]]))
    assert all(x == 0 for row in zero for x in row)


def _in_lattice(v, basis):
    """Is v an integer combination of the rows of the square nonsingular `basis`?"""
    inv = inverse_frac(basis)
    coords = [sum(Fraction(v[i]) * inv[i][j] for i in range(len(v))) for j in range(len(v))]
    return all(c.denominator == 1 for c in coords)


matrices = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(matrices)
def test_hnf_shape_lattice_and_idempotence(m):
    h = _rows(hnf(m))
    n = len(m)
    assert _rows(hnf(h)) == h
    if det(m) == 0:
        return
    assert len(h) == n
    for i in range(n):
        assert h[i][i] > 0
        assert all(h[i][j] == 0 for j in range(i))
        assert all(0 <= h[k][i] < h[i][i] for k in range(i))
    # same row lattice both ways
    assert all(_in_lattice(r, h) for r in m)
    assert all(_in_lattice(r, m) for r in h)
    assert abs(det(m)) == abs(det_int(h))


@given(matrices)
def test_determinants_match_sympy(m):
    assert det_int(m) == det(m)
    assert det_frac(m) == det(m)


def test_inverse_frac():
    m = [[2, 1], [1, 3]]
    inv = inverse_frac(m)
    assert matmul(m, inv) == [[1, 0], [0, 1]]


def test_kernels_mod_p():
    rng = random.Random(5)
    for _ in range(100):
        p = rng.choice([2, 3, 5, 7])
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]
        right = kernel_mod_p(m, p)
        assert len(right) == cols - rank_mod_p(m, p)
        for v in right:
            assert all(sum(a * b for a, b in zip(row, v)) % p == 0 for row in m)
        left = left_kernel_mod_p(m, p)
        assert len(left) == rows - rank_mod_p(m, p)
        for v in left:
            assert all(sum(v[i] * m[i][j] for i in range(rows)) % p == 0 for j in range(cols))
