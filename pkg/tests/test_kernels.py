import random

import pytest

from polyfact import _kernels_py, kernels
from polyfact.arith import is_probable_prime


def test_dispatch_reports_implementations():
    names = [k.NAME for k in kernels.available()]
    assert "python" in names
    assert kernels.impl.NAME == names[0]
    with pytest.raises(ValueError):
        kernels.use("fortran")


def test_mr_u64_parity(kernel):
    rng = random.Random(1)
    samples = [rng.getrandbits(64) for _ in range(3000)] + [2**64 - 59, 2**61 - 1, 3825123056546413051, 0, 1, 2]
    for n in samples:
        assert kernel.mr_u64(n) == _kernels_py.mr_u64(n)
    assert kernel.mr_u64(2**64 - 59)
    assert not kernel.mr_u64(3825123056546413051)


def test_reduced_triples_parity(kernel):
    for c in list(range(1, 300)) + [10**6 + 7]:
        assert kernel.reduced_triples(c) == _kernels_py.reduced_triples(c)


def test_unpeel_parity(kernel):
    for seed in [(0, 1, 1), (1, 2, 3), (2, 3, 3), (0, 1, 13), (2, 2, 1)]:
        assert sorted(kernel.unpeel_tree(*seed, 300)) == sorted(_kernels_py.unpeel_tree(*seed, 300))


def test_word_search_parity(kernel):
    rng = random.Random(3)
    for q in (1, 2, 3, 5, 7, 11):
        for _ in range(10):
            x = tuple(rng.randrange(q) for _ in range(4))
            y = tuple(rng.randrange(q) for _ in range(4))
            for parity in (0, 1):
                assert kernel.word_search(x, y, q, parity) == _kernels_py.word_search(x, y, q, parity)


def test_word_search_identity_mod_3():
    # a nonempty word whose product is the identity mod 3, short enough
    w = kernels.word_search((0, 1, 1, 0), (1, 0, 0, 1), 3, 0)
    assert w is not None
    # lower-left of J * M = upper-left of M, so J M Y with Y = I asks M[0][0] = 0 mod 3
    from polyfact.contfrac import matrix_of
    (a, _), _ = matrix_of(w)
    assert a % 3 == 0 and len(w) % 2 == 0 and len(w) <= 24


def test_large_inputs_fall_back_to_python():
    # entries past 2^58 would overflow the compiled loop
    n_max = 2**61
    got = kernels.unpeel_tree(1, 2, 2**59, n_max)
    assert got == _kernels_py.unpeel_tree(1, 2, 2**59, n_max)
    assert all(t[0] <= n_max for t in got)
    assert is_probable_prime(2**89 - 1)
