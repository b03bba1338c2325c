"""Random factorisations P(n) = d1 d2 for monic quadratic P.

A determinant-one matrix [[a0*, a1], [u0, u1]] gives a = (c1 a1 - a0*, a1)
and u = (u0, u1) with a*u = n - x in Z[x]/(P); the factors are the norms.
"""

from __future__ import annotations

import math

from .arith import RandomSource, iroot, is_probable_prime, is_square, divisors
from .contfrac import cf_expand, convergents
from .model import AttemptsExhausted, Factorisation, GenConfig, UnsuitablePolynomial
from .polyring import MonicPolynomial


def fixed_divisor(p: MonicPolynomial) -> int:
    """gcd of P(n) over all integers n (the values at 0..d suffice)."""
    g = 0
    for k in range(p.degree + 1):
        g = math.gcd(g, p(k))
    return g


def has_integer_root(p: MonicPolynomial) -> bool:
    c0 = p.coeffs[0]
    if c0 == 0:
        return True
    return any(p(s * r) == 0 for r in divisors(c0) for s in (1, -1))


def prime_pair_obstruction(p: MonicPolynomial) -> str | None:
    """Why P(n) can never be a product of two large primes, or None."""
    if p.degree == 2:
        c0, c1 = p.coeffs
        if is_square(c1 * c1 - 4 * c0):
            return f"{p} is reducible over Z (square discriminant)"
    elif p.degree == 3:
        if has_integer_root(p):
            return f"{p} is reducible over Z (integer root)"
    g = fixed_divisor(p)
    if g > 1:
        return f"every value of {p} is divisible by {g}"
    return None


def solve_unimodular(a0_star: int, a1: int, sign: int = 1) -> tuple[int, int]:
    """(u0, u1) with a0_star*u1 - a1*u0 = 1 and |u1| <= |a1|.

    ``sign=+1`` reads the solution off the penultimate convergent of
    a0_star/a1 (using [r0 - 1; 1] when a1 = 1); ``sign=-1`` returns the other
    solution, shifted by (a0_star, a1) so that u1 changes sign.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if a1 == 0:
        raise ValueError("a1 must be nonzero")
    if math.gcd(a0_star, a1) != 1:
        raise ValueError(f"gcd({a0_star}, {a1}) != 1: no unimodular completion")
    if a1 < 0:
        u0, u1 = solve_unimodular(-a0_star, -a1, sign)
        return -u0, -u1
    quotients = list(cf_expand(a0_star, a1).quotients)
    if len(quotients) == 1:
        quotients = [quotients[0] - 1, 1]
    s = len(quotients) - 1
    p_prev, q_prev = convergents(quotients)[s - 1]
    e = 1 if (s - 1) % 2 == 0 else -1
    u0, u1 = e * p_prev, e * q_prev
    if sign == -1:
        step = 1 if u1 > 0 else -1
        u0, u1 = u0 - step * a0_star, u1 - step * a1
    return u0, u1


def assemble(p: MonicPolynomial, a0_star: int, a1: int, u0: int, u1: int) -> Factorisation:
    """Turn a determinant-one matrix into a witnessed factorisation of P(n)."""
    if a0_star * u1 - a1 * u0 != 1:
        raise ValueError("matrix [[a0*, a1], [u0, u1]] must have determinant 1")
    c0, c1 = p.coeffs
    a0 = c1 * a1 - a0_star
    n = a0 * u0 - c0 * a1 * u1
    d1 = a0 * a0 - c1 * a0 * a1 + c0 * a1 * a1
    d2 = u0 * u0 - c1 * u0 * u1 + c0 * u1 * u1
    return Factorisation(p, n, d1, d2, a=(a0, a1), u=(u0, u1))


def size_bound(p: MonicPolynomial, size_target: int) -> int:
    """ceil((M / c^2)^(1/4)) with c = max(|c0|, |c1|)."""
    c = max(1, *(abs(x) for x in p.coeffs))
    num, den = size_target, c * c
    b = iroot(num // den, 4)
    while b ** 4 * den < num:
        b += 1
    return max(b, 1)


def _require_quadratic(p: MonicPolynomial):
    if p.degree != 2:
        raise ValueError(f"expected a quadratic polynomial, got degree {p.degree}")


def generate_quadratic(p: MonicPolynomial, cfg: GenConfig, rng: RandomSource) -> Factorisation:
    """Random witnessed factorisation of P(n); prime factors when ``cfg.require_prime``.

    ``attempts`` on the result counts completed candidates (coprime draws).
    """
    _require_quadratic(p)
    if cfg.require_prime:
        why = prime_pair_obstruction(p)
        if why:
            raise UnsuitablePolynomial(why)
    c1 = p.coeffs[1]
    bound = size_bound(p, cfg.size_target)
    attempts = 0
    while attempts < cfg.max_attempts:
        a1 = rng.randint(-bound, bound)
        a0 = rng.randint(-bound, bound)
        if a1 == 0 or math.gcd(a0, a1) != 1:
            continue
        attempts += 1
        sign = rng.choice((1, -1))
        a0_star = c1 * a1 - a0
        u0, u1 = solve_unimodular(a0_star, a1, sign)
        f = assemble(p, a0_star, a1, u0, u1)
        if cfg.require_prime and not (
            is_probable_prime(f.d1, cfg.prime_rounds)
            and is_probable_prime(f.d2, cfg.prime_rounds)
        ):
            continue
        f.attempts = attempts
        f.check()
        return f
    raise AttemptsExhausted(attempts)


def enumerate_witnesses(p: MonicPolynomial, bound: int):
    """Every output reachable from ||a||_inf <= bound, both sign choices."""
    _require_quadratic(p)
    c1 = p.coeffs[1]
    for a1 in range(-bound, bound + 1):
        if a1 == 0:
            continue
        for a0 in range(-bound, bound + 1):
            if math.gcd(a0, a1) != 1:
                continue
            a0_star = c1 * a1 - a0
            for sign in (1, -1):
                u0, u1 = solve_unimodular(a0_star, a1, sign)
                yield assemble(p, a0_star, a1, u0, u1)
