import pytest

from conftest import random_fields
from oracles import splitting as oracle_splitting
from ramify.arith import INFINITY, primes_up_to, valuation
from ramify.errors import InvalidArgument
from ramify.field import new_field
from ramify.polys import IntPoly
from ramify.splitting import dedekind_index_divides, split_prime

PRIMES = primes_up_to(50)


@pytest.mark.parametrize(
    "poly,p,pairs",
    [
        ("x^2+1", 5, [(1, 1), (1, 1)]),
        ("x^2+1", 3, [(1, 2)]),
        ("x^2+1", 2, [(2, 1)]),
        ("x^8-3", 2, [(8, 1)]),
        ("x^8-3", 3, [(8, 1)]),
        ("x^8-48", 2, [(8, 1)]),
        ("x^8-48", 3, [(8, 1)]),
        ("x^2-5", 2, [(1, 2)]),
        ("x^3-3", 2, [(1, 1), (1, 2)]),
    ],
)
def test_examples(poly, p, pairs):
    assert list(split_prime(new_field(poly), p).pairs) == pairs


def test_infinite_place_encodes_signature():
    assert split_prime(new_field("x^3-3"), INFINITY).pairs == ((1, 1), (2, 1))
    assert split_prime(new_field("x^2-5"), INFINITY).pairs == ((1, 1), (1, 1))


@pytest.mark.parametrize("poly,p,expected", [("x^2-5", 2, True), ("x^2+1", 5, False), ("x^2+1", 2, False)])
def test_dedekind_index_examples(poly, p, expected):
    assert dedekind_index_divides(IntPoly(new_field(poly).min_poly.coeffs), p) is expected


def test_dedekind_path_refused_when_p_divides_index():
    with pytest.raises(InvalidArgument):
        split_prime(new_field("x^2-5"), 2, method="dedekind")


def test_fast_and_general_paths_agree():
    for L in random_fields(200, 21):
        for p in PRIMES:
            if L.index % p == 0:
                continue
            fast = split_prime(L, p, method="dedekind")
            assert fast.pairs == split_prime(L, p, method="general").pairs, (L.min_poly, p)


def test_splitting_matches_independent_oracle():
    covered = 0
    for L in random_fields(120, 22):
        coeffs = list(L.min_poly.coeffs)
        basis = [list(r) for r in L.basis]
        for p in PRIMES:
            if L.poly_disc % p:
                continue
            expected = oracle_splitting(coeffs, basis, p)
            if expected is None:
                continue
            covered += 1
            assert list(split_prime(L, p).pairs) == expected, (coeffs, p)
    assert covered > 150


def test_index_primes_are_checked_against_oracle():
    # primes dividing the index take the general path; make sure the oracle reaches them
    seen = 0
    for L in random_fields(200, 23):
        basis = [list(r) for r in L.basis]
        for p in PRIMES:
            if L.index % p == 0:
                expected = oracle_splitting(list(L.min_poly.coeffs), basis, p)
                if expected is not None:
                    seen += 1
                    assert list(split_prime(L, p).pairs) == expected
    assert seen >= 10


def test_sum_ef_and_ramification_criterion():
    for L in random_fields(200, 21):
        for p in PRIMES:
            st = split_prime(L, p)
            assert st.n == L.degree
            assert (not st.is_unramified()) == (L.disc % p == 0)


def test_disc_valuation_at_tame_primes():
    for L in random_fields(200, 21):
        for p in PRIMES:
            st = split_prime(L, p)
            if not st.is_wild():
                assert valuation(L.disc, p) == L.degree - st.f_sum


def test_results_independent_of_seed(monkeypatch):
    L = new_field("x^5 - 7x^3 + 3x - 11")
    base = [split_prime(L, p, seed=0).pairs for p in PRIMES]
    for seed in (1, 17, 12345):
        assert [split_prime(L, p, seed=seed).pairs for p in PRIMES] == base
    monkeypatch.setenv("RAMIFY_SEED", "77")
    assert [split_prime(L, p).pairs for p in PRIMES] == base


def test_bad_place_rejected():
    with pytest.raises(InvalidArgument):
        split_prime(new_field("x^2+1"), 9)
