import math
import random

import pytest

from polyfact.arith import make_rng
from polyfact.semigroup import (
    brute_force_factorisations, compute_D_c, compute_N_c, enumerate_all, extension_threshold,
    k_threshold, mat_det, mat_mul, phi, phi_factorisation, phi_inverse, random_factorisation,
    seed_matrix, step, transpose, triple_of, word_to_matrix,
)


def test_word_to_matrix():
    assert word_to_matrix([5]) == ((0, 1), (1, 5))
    assert word_to_matrix([1, 3]) == ((1, 3), (1, 4))
    assert word_to_matrix([]) == ((1, 0), (0, 1))
    with pytest.raises(ValueError):
        word_to_matrix([0])


def test_phi_examples():
    assert phi([4]) == (4, 1, 17)
    assert phi([1, 3]) == (7, 2, 25)
    assert phi([], (1, 2, 3)) == (1, 2, 3)
    f = phi_factorisation(5, [], (1, 2, 3))
    assert (f.n, f.d1, f.d2) == (1, 2, 3)


def test_phi_matches_matrix_product():
    rng = random.Random(1)
    for _ in range(2000):
        word = [rng.randint(1, 9) for _ in range(rng.randint(0, 8))]
        seed = rng.choice([(0, 1, 1), (1, 2, 3), (0, -2, 1), (2, 3, 3)])
        m = word_to_matrix(word)
        h = seed_matrix(seed)
        assert triple_of(mat_mul(mat_mul(transpose(m), h), m)) == phi(word, seed)


def test_phi_inverse_examples():
    assert phi_inverse(1, (7, 2, 25)) == ((1, 3), (0, 1, 1))
    assert phi_inverse(1, (6, 1, 37)) == ((6,), (0, 1, 1))
    assert phi_inverse(5, (1, 2, 3)) == ((), (1, 2, 3))
    with pytest.raises(ValueError):
        phi_inverse(1, (3, 2, 6))
    with pytest.raises(ValueError):
        phi_inverse(0, (3, 3, 3))


def test_round_trip_random_words_10k():
    rng = random.Random(2)
    for _ in range(10_000):
        c = rng.choice([1, 2, 3, 5, 13, 30])
        seed = rng.choice(sorted({(n, a, b) for n, a, b in compute_D_c(c)} |
                                 {(n, b, a) for n, a, b in compute_D_c(c)}))
        word = tuple(rng.randint(1, 9) for _ in range(rng.randint(0, 12)))
        if not word and seed[1] > seed[2]:
            continue
        assert phi_inverse(c, phi(word, seed)) == (word, seed)


def test_round_trip_on_brute_force_triples():
    for c in (1, 2, 3, 5, 13, -1, -2, -3, -4):
        for t in brute_force_factorisations(c, 200):
            word, seed = phi_inverse(c, t)
            assert phi(word, seed) == t


def test_determinant_invariants():
    rng = random.Random(3)
    for _ in range(10_000):
        word = [rng.randint(1, 50) for _ in range(rng.randint(0, 12))]
        assert mat_det(word_to_matrix(word)) == (-1) ** len(word)
    for c in (1, 2, 5, 13, 1000):
        for t in compute_D_c(c):
            assert mat_det(seed_matrix(t)) == c
    for c in (-1, -2, -12, -30):
        for t in compute_N_c(c).finite:
            assert mat_det(seed_matrix(t)) == c
            k = k_threshold(t)
            assert mat_det(seed_matrix(step(t, k))) == c


def test_D_c():
    assert compute_D_c(5) == [(0, 1, 5), (1, 2, 3), (2, 3, 3)]
    assert compute_D_c(1) == [(0, 1, 1)]
    assert compute_D_c(2) == [(0, 1, 2)]
    for c in range(1, 400):
        brute = []
        for n in range(c):
            v = n * n + c
            brute += [(n, d, v // d) for d in range(n + 1, math.isqrt(v) + 1) if v % d == 0]
        assert compute_D_c(c) == sorted(brute)


def test_N_c():
    assert compute_N_c(-2).finite == ((0, -2, 1), (0, -1, 2), (1, -1, 1))
    assert not compute_N_c(-2).infinite
    nc = compute_N_c(-4)
    assert nc.infinite and nc.family_root == 2
    assert nc.family(3) == [(2, 0, 1), (2, 0, 2), (2, 0, 3)]
    assert compute_N_c(-1).finite == ((0, -1, 1),)
    with pytest.raises(ValueError):
        compute_N_c(3)


def test_k_threshold():
    assert k_threshold((1, -1, 1)) == 1
    assert step((1, -1, 1), 1) == (2, 1, 2)
    assert step((1, -1, 1), 2) == (3, 1, 7)
    assert k_threshold((0, -1, 1)) == 2
    assert step((0, -1, 1), 2) == (2, 1, 3)
    for c in (-2, -3, -5, -12, -30):
        for base in compute_N_c(c).finite:
            k = k_threshold(base)
            assert k >= 1
            if k > 1:
                assert min(step(base, k - 1)) <= 0
            for j in range(k, k + 51):
                assert min(step(base, j)) > 0
            assert extension_threshold(base) >= k


def test_enumerate_examples():
    ten = enumerate_all(1, 10)
    for t in ((7, 1, 50), (7, 2, 25), (7, 5, 10)):
        assert t in ten
    five = enumerate_all(5, 5)
    assert (1, 2, 3) in five and (5, 5, 6) in five
    assert [t for t in enumerate_all(-2, 3) if t[1] > 0] == [(2, 1, 2), (3, 1, 7)]


@pytest.mark.parametrize("c", [1, 2, 3, 5, 7, 13, 30, 97, -1, -2, -3, -4, -9, -12, -30, -100])
def test_bijection(c):
    e = enumerate_all(c, 200)
    assert len(e) == len(set(e))
    assert e == brute_force_factorisations(c, 200)


def test_prop1_consistency_at_c1():
    # the identity seed reaches every n^2 + 1 = d1 d2 with d1 < d2, plus (0, 1, 1)
    e = enumerate_all(1, 100)
    strict = [t for t in e if t[1] < t[2]]
    assert set(e) - set(strict) == {(0, 1, 1)}
    for t in strict:
        word, seed = phi_inverse(1, t)
        assert seed == (0, 1, 1) and word


def test_random_factorisation():
    rng = make_rng(4)
    f = random_factorisation(5, 0, rng)
    assert f.n * f.n + 5 == f.d1 * f.d2 and f.word == ()
    for c in (1, 2, 5, 13, -2, -3, -7):
        for length in range(6):
            f = random_factorisation(c, length, rng)
            assert f.n * f.n + c == f.d1 * f.d2
            assert len(f.word) == length
            assert phi(f.word, f.seed) == (f.n, f.d1, f.d2)


def test_random_factorisation_perfect_square_needs_bound():
    with pytest.raises(ValueError):
        random_factorisation(-4, 2, make_rng(1))
    f = random_factorisation(-4, 3, make_rng(1), family_bound=20)
    assert f.n * f.n - 4 == f.d1 * f.d2
    with pytest.raises(ValueError):
        random_factorisation(0, 1, make_rng(1))


def test_digit_distribution_mean():
    from polyfact.semigroup import geometric_digit
    rng = make_rng(5)
    draws = [geometric_digit(rng) for _ in range(20_000)]
    assert 1.9 < sum(draws) / len(draws) < 2.1
    assert min(draws) == 1
