import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polyfact.contfrac import ContinuedFraction, cf_convergents, cf_expand, convergents, matrix_of


def test_expand_examples():
    assert cf_expand(5, 3).quotients == (1, 1, 2)
    assert cf_convergents(cf_expand(5, 3)) == [(1, 1), (2, 1), (5, 3)]
    assert cf_expand(7, 1).quotients == (7,)
    assert cf_expand(-7, 3).quotients == (-3, 1, 2)
    assert cf_expand(3, -2).value == Fraction(-3, 2)
    with pytest.raises(ZeroDivisionError):
        cf_expand(1, 0)


def test_sqrt_pi_convergents():
    # 39/22 and 8545/4821 sit on the expansion of sqrt(pi) = 1.7724538509055159...
    approx = Fraction(17724538509055160273, 10**19)
    convs = {Fraction(p, q) for p, q in cf_convergents(cf_expand(approx.numerator, approx.denominator))}
    assert Fraction(39, 22) in convs
    assert Fraction(8545, 4821) in convs


def test_invalid_quotients():
    with pytest.raises(ValueError):
        ContinuedFraction((1, 0))
    with pytest.raises(ValueError):
        ContinuedFraction(())


@given(st.integers(-10**20, 10**20), st.integers(1, 10**20))
def test_round_trip_and_determinant(p, q):
    cf = cf_expand(p, q)
    assert cf.value == Fraction(p, q)
    conv = cf_convergents(cf)
    prev = (1, 0)
    for i, (pi, qi) in enumerate(conv):
        assert pi * prev[1] - prev[0] * qi == (-1) ** (i - 1)
        prev = (pi, qi)


def test_determinant_identity_10k():
    rng = random.Random(1)
    for _ in range(10_000):
        p, q = rng.randint(-10**12, 10**12), rng.randint(1, 10**12)
        conv = convergents(cf_expand(p, q).quotients)
        for i in range(1, len(conv)):
            (p1, q1), (p0, q0) = conv[i], conv[i - 1]
            assert p1 * q0 - p0 * q1 == (-1) ** (i - 1)


def test_matrix_of_and_reversal():
    rng = random.Random(2)
    for _ in range(2000):
        quotients = [rng.randint(0, 20)] + [rng.randint(1, 20) for _ in range(rng.randint(1, 12))]
        (a, b), (c, d) = matrix_of(quotients)
        conv = convergents(quotients)
        assert (a, c) == conv[-1]
        assert (b, d) == (conv[-2] if len(conv) > 1 else (1, 0))
        assert a * d - b * c == (-1) ** len(quotients)
        # numerator over penultimate numerator is the reversed fraction
        if b and quotients[0] >= 1:
            assert Fraction(a, b) == ContinuedFraction(tuple(quotients)).reversed().value
