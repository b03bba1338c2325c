"""Factorisations with a prescribed ratio d1/d2.

For a determinant-one product T = prod [[r, 1], [1, 0]] = [[a0*, a1], [u0, u1]]
the ratio a1/u1 is fixed by the leading quotients of the word and a0*/a1,
u0/u1 by the trailing ones. For monic quadratic P

    d1/d2 = (a1/u1)^2 * f(a0*/a1) / f(u0/u1),   f(t) = t^2 - c1 t + c0,

so steering a1/u1 towards beta sends d1/d2 towards beta^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import kernels
from .arith import RandomSource
from .contfrac import cf_expand, matrix_of
from .model import Factorisation
from .polyring import MonicPolynomial, cubic_norm, multiply, shift_coeffs
from .quadgen import assemble

MAX_DEPTH = 400

Approx = Callable[[int], Fraction]


class RatioNotReached(RuntimeError):
    """The deepening loop hit ``max_depth`` without meeting the tolerance."""


def as_fraction(value) -> Fraction:
    """Exact rational from an int, Fraction, decimal string or "p/q" string."""
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def _check_target(alpha: Fraction, eps: Fraction):
    if eps <= 0:
        raise ValueError("eps must be positive")
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")


def sqrt_approx(alpha: Fraction) -> Approx:
    """bits -> rational within 2^-bits of sqrt(alpha) (exact for rational squares)."""
    alpha = Fraction(alpha)
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    rn, rd = math.isqrt(alpha.numerator), math.isqrt(alpha.denominator)
    if rn * rn == alpha.numerator and rd * rd == alpha.denominator:
        exact = Fraction(rn, rd)
        return lambda bits: exact

    def approx(bits: int) -> Fraction:
        scale = 1 << bits
        return Fraction(math.isqrt(alpha.numerator * scale * scale // alpha.denominator), scale)

    return approx


def real_root_approx(coeffs) -> Approx:
    """bits -> rational within 2^-bits of a real root of a monic odd-degree polynomial.

    ``coeffs`` are (c_0, ..., c_{d-1}) as Fractions; the root is found by exact
    bisection from the Cauchy bound.
    """
    coeffs = tuple(Fraction(c) for c in coeffs)
    if len(coeffs) % 2 == 0:
        raise ValueError("need odd degree to guarantee a real root")

    def h(t: Fraction) -> Fraction:
        v = Fraction(1)
        for c in reversed(coeffs):
            v = v * t + c
        return v

    bound = 1 + max((abs(c) for c in coeffs), default=0)
    lo, hi = -Fraction(bound), Fraction(bound)
    state = {"lo": lo, "hi": hi, "exact": None}

    def approx(bits: int) -> Fraction:
        if state["exact"] is not None:
            return state["exact"]
        lo, hi = state["lo"], state["hi"]
        target = Fraction(1, 1 << bits)
        while hi - lo > target:
            mid = (lo + hi) / 2
            v = h(mid)
            if v == 0:
                state["exact"] = mid
                return mid
            if v > 0:
                hi = mid
            else:
                lo = mid
        state["lo"], state["hi"] = lo, hi
        return lo

    return approx


@dataclass
class RatioMatrix:
    a0_star: int
    a1: int
    u0: int
    u1: int
    word: tuple


def _random_gamma(rng: RandomSource, f: Callable[[Fraction], Fraction], sign: int) -> Fraction:
    # a rational in [1, 10] kept away from the zeros of f
    while True:
        den = rng.randint(1, 50)
        g = Fraction(rng.randint(den, 10 * den), den)
        if abs(f(sign * g)) >= Fraction(1, 8):
            return g


def ratio_matrix(
    beta: Approx,
    depth: int,
    q: int,
    f: Callable[[Fraction], Fraction],
    rng: RandomSource,
) -> RatioMatrix:
    """[[a0*, a1], [u0, u1]] of determinant 1 with a1/u1 near beta and q | u0.

    The word is CF(r) + [N] + random middle + correction + reversed CF(gamma),
    where r approximates beta with denominator at most 2^depth and N = 2^depth.
    """
    if q < 1:
        raise ValueError("q must be positive")
    bound = 1 << depth
    b = beta(2 * depth + 2)
    sign = -1 if b < 0 else 1
    r = abs(b).limit_denominator(bound)
    head = list(cf_expand(r.numerator, r.denominator).quotients) + [bound]
    head += [rng.randint(1, 9) for _ in range(rng.randint(0, 3))]
    gamma = _random_gamma(rng, f, sign)
    tail = list(cf_expand(gamma.numerator, gamma.denominator).quotients)[::-1]
    x = matrix_of(head)
    y = matrix_of(tail)
    parity = (len(head) + len(tail)) % 2
    fix = kernels.word_search(
        (x[0][0], x[0][1], x[1][0], x[1][1]), (y[0][0], y[0][1], y[1][0], y[1][1]), q, parity
    )
    if fix is None:
        raise RuntimeError(f"no correcting word modulo {q}")
    word = tuple(head + list(fix) + tail)
    (p_s, p_prev), (q_s, q_prev) = matrix_of(word)
    m = RatioMatrix(p_s, sign * p_prev, sign * q_s, q_prev, word)
    assert m.a0_star * m.u1 - m.a1 * m.u0 == 1
    assert m.u0 % q == 0
    return m


def _quad_f(c1: int, c0: int):
    return lambda t: t * t - c1 * t + c0


def target_ratio_quadratic(
    p: MonicPolynomial,
    alpha,
    eps,
    rng: RandomSource,
    max_depth: int = MAX_DEPTH,
) -> Factorisation:
    """Factorisation of P(n), P monic quadratic, with |d1/d2 - alpha| < eps."""
    if p.degree != 2:
        raise ValueError(f"expected a quadratic polynomial, got degree {p.degree}")
    alpha, eps = as_fraction(alpha), as_fraction(eps)
    _check_target(alpha, eps)
    c0, c1 = p.coeffs
    beta = sqrt_approx(alpha)
    f = _quad_f(c1, c0)
    for depth in range(2, max_depth + 1):
        m = ratio_matrix(beta, depth, 1, f, rng)
        out = assemble(p, m.a0_star, m.a1, m.u0, m.u1)
        if out.d2 == 0:
            continue
        if abs(out.ratio - alpha) < eps:
            out.word = m.word
            out.attempts = depth - 1
            out.extra.update(depth=depth, ratio=out.ratio)
            out.check()
            return out
    raise RatioNotReached(f"no ratio within {eps} of {alpha} up to depth {max_depth}")


@dataclass
class DivisibleSolution:
    """q n^2 + c1 n + c0s = d1 * d2 with the target ratio on n/d2."""

    q: int
    c1: int
    c0s: int
    n: int
    d1: int
    d2: int
    depth: int = 0
    word: tuple = ()
    extra: dict = field(default_factory=dict)

    def value(self) -> int:
        return self.q * self.n * self.n + self.c1 * self.n + self.c0s

    def check(self) -> None:
        if self.value() != self.d1 * self.d2:
            raise AssertionError(f"P*({self.n}) != {self.d1} * {self.d2}")


def _divisible_once(q: int, c1: int, c0s: int, beta: Approx, depth: int, rng: RandomSource):
    monic = MonicPolynomial((q * c0s, c1))
    m = ratio_matrix(beta, depth, q, _quad_f(c1, q * c0s), rng)
    out = assemble(monic, m.a0_star, m.a1, m.u0, m.u1)
    if out.n % q or out.d2 % q:
        raise AssertionError("q must divide n and d2 once q | u0")
    sol = DivisibleSolution(q, c1, c0s, out.n // q, out.d1, out.d2 // q, depth, m.word)
    sol.extra.update(a=out.a, u=out.u)
    sol.check()
    return sol


def target_ratio_divisible(
    q: int,
    c1: int,
    c0s: int,
    beta,
    eps,
    rng: RandomSource,
    max_depth: int = MAX_DEPTH,
) -> DivisibleSolution:
    """Solution of q n^2 + c1 n + c0s = d1 d2 with |n/d2 + beta| < eps.

    Works on the monic x^2 + c1 x + q c0s with q | u0, then divides n and d2 by q.
    ``beta`` is a rational or a bits -> Fraction approximation function.
    """
    if q < 1:
        raise ValueError("q must be positive")
    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if callable(beta):
        approx = beta
    else:
        exact = as_fraction(beta)
        approx = lambda bits: exact  # noqa: E731
    for depth in range(2, max_depth + 1):
        sol = _divisible_once(q, c1, c0s, approx, depth, rng)
        if sol.d2 and abs(Fraction(sol.n, sol.d2) + approx(4 * depth + 8)) < eps:
            return sol
    raise RatioNotReached(f"no n/d2 within {eps} of {-approx(64)} up to depth {max_depth}")


def _cubic_from_divisible(p: MonicPolynomial, sol: DivisibleSolution) -> Factorisation:
    # (x, y) = (1, c2): c0 a2^2 - b a0 = 1 with b = c2 a2 - a1
    c0, c1, c2 = p.coeffs
    s = 1 if c0 > 0 else -1
    a2, a0, b = sol.n, sol.d2, s * sol.d1
    a1 = c2 * a2 - b
    a = (a0, a1, a2)
    u = (c1 * a2 - a0, c2 * a2, a2)
    n = a0 * u[0] - c0 * a2 * u[1] + c0 * (c2 * a2 - a1) * u[2]
    return Factorisation(p, n, cubic_norm(p, a), cubic_norm(p, u), a=a, u=u)


def target_ratio_cubic(
    p: MonicPolynomial,
    alpha,
    eps,
    rng: RandomSource,
    max_depth: int = MAX_DEPTH,
) -> Factorisation:
    """Factorisation of P(n), P monic cubic, with |d1/d2 - alpha| < eps.

    d1/d2 tends to (beta^3 - c2 beta^2 + c1 beta - c0)/c0 where a2/a0 tends
    to beta/c0; beta is a real root of that expression minus alpha. When
    c0 = 0 the work is done on P(x + k) for the first k with P(k) != 0.
    """
    if p.degree != 3:
        raise ValueError(f"expected a cubic polynomial, got degree {p.degree}")
    alpha, eps = as_fraction(alpha), as_fraction(eps)
    _check_target(alpha, eps)
    k = 0
    while p(k) == 0:
        k += 1
    work = p.shift(k) if k else p
    c0, c1, c2 = work.coeffs
    beta = real_root_approx((-c0 - alpha * c0, c1, -c2))

    def beta_star(bits: int) -> Fraction:
        return -beta(bits + abs(c0).bit_length()) / c0

    for depth in range(2, max_depth + 1):
        sol = _divisible_once(abs(c0), 0, -1 if c0 > 0 else 1, beta_star, depth, rng)
        out = _cubic_from_divisible(work, sol)
        if out.d2 == 0:
            continue
        if abs(out.ratio - alpha) < eps:
            if k:
                out = _unshift(p, out, k)
            out.word = sol.word
            out.attempts = depth - 1
            out.extra.update(depth=depth, ratio=out.ratio, shift=k)
            out.check()
            return out
    raise RatioNotReached(f"no ratio within {eps} of {alpha} up to depth {max_depth}")


def _unshift(p: MonicPolynomial, f: Factorisation, k: int) -> Factorisation:
    # x -> x - k carries Z[x]/(P(x + k)) onto Z[x]/(P)
    a = shift_coeffs(f.a, -k)
    u = shift_coeffs(f.u, -k)
    out = Factorisation(p, f.n + k, f.d1, f.d2, a=a, u=u)
    assert multiply(p, a, u) == (out.n, -1, 0)
    return out
