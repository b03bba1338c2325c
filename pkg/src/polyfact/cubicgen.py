"""Random factorisations P(n) = d1 d2 for monic cubic P.

With the auxiliary pair (x, y) the condition a*u = n - x reduces to

    a0 (x a1 - y a2) + A a1^2 + B a1 a2 + C a2^2 = 1,

which is solved by picking a prime Q = x a1 - y a2, taking a square root
modulo Q and lifting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import (
    RandomSource, ext_gcd, is_probable_prime, mod_inverse, random_prime_below,
    sqrt_mod_prime,
)
from .model import AttemptsExhausted, Factorisation, GenConfig, UnsuitablePolynomial
from .polyring import MonicPolynomial, cubic_norm
from .quadgen import prime_pair_obstruction

DEFAULT_X_BOUND = 1000
Q_DRAWS_PER_PAIR = 64


@dataclass(frozen=True)
class CubicParams:
    x: int
    y: int
    Q: int
    A: int
    B: int
    C: int


def _require_cubic(p: MonicPolynomial):
    if p.degree != 3:
        raise ValueError(f"expected a cubic polynomial, got degree {p.degree}")


def congruence_coeffs(p: MonicPolynomial, x: int, y: int) -> tuple[int, int, int]:
    """(A, B, C) = (y - c2 x, -c2 (y - c2 x), c1 y - (c1 c2 - c0) x)."""
    _require_cubic(p)
    if math.gcd(x, y) != 1:
        raise ValueError(f"x={x} and y={y} must be coprime")
    c0, c1, c2 = p.coeffs
    A = y - c2 * x
    return A, -c2 * A, c1 * y - (c1 * c2 - c0) * x


def make_params(p: MonicPolynomial, x: int, y: int, Q: int) -> CubicParams:
    if math.gcd(Q, y) != 1:
        raise ValueError(f"Q={Q} must be coprime to y={y}")
    return CubicParams(x, y, Q, *congruence_coeffs(p, x, y))


def solve_congruence(params: CubicParams) -> int | None:
    """Smallest a >= 0 with (A + B x/y + C x^2/y^2) a^2 = 1 (mod Q), or None.

    None also covers a coefficient divisible by Q.
    """
    Q = params.Q
    y_inv = mod_inverse(params.y, Q)
    t = params.x * y_inv % Q
    coeff = (params.A + params.B * t + params.C * t * t) % Q
    if coeff == 0:
        return None
    return sqrt_mod_prime(mod_inverse(coeff, Q), Q)


def _euclid_bezout(x: int, y: int, target: int) -> tuple[int, int]:
    # Bezout pair x s + y t = 1 normalised to 0 < s <= |y|, scaled by target
    _, s, t = ext_gcd(x, y)
    if y:
        m = abs(y)
        shift = (s - 1) // m
        s -= shift * m
        t += shift * m * x // y
    return s * target, -t * target


def _nearest_bezout(x: int, y: int, target: int) -> tuple[int, int]:
    # minimal-norm (k, l) with x k - y l = target
    k0, l0 = _euclid_bezout(x, y, target)
    den = x * x + y * y
    num = -(k0 * y + l0 * x)
    m = (2 * num + den) // (2 * den)
    return k0 + y * m, l0 + x * m


BEZOUT_RULES = {"euclid": _euclid_bezout, "nearest": _nearest_bezout}


def lift(params: CubicParams, a: int, branch: int = 1, bezout: str = "euclid") -> tuple[int, int]:
    """(a1, a2) with a1 = branch*a, a2 = branch*b (mod Q) and x a1 - y a2 = Q.

    b = (x / y) a mod Q. With ``bezout="euclid"`` the correction (k, l) is the
    extended-Euclid pair scaled by the target; ``"nearest"`` moves it along
    the solution line to the point of least norm, which gives smaller outputs.
    """
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    if bezout not in BEZOUT_RULES:
        raise ValueError(f"unknown bezout rule {bezout!r}")
    x, y, Q = params.x, params.y, params.Q
    b = x * mod_inverse(y, Q) * a % Q
    a_s, b_s = branch * a, branch * b
    gap = x * a_s - y * b_s  # divisible by Q by the choice of b
    k, l = BEZOUT_RULES[bezout](x, y, 1 - gap // Q)
    a1, a2 = a_s + k * Q, b_s + l * Q
    assert x * a1 - y * a2 == Q
    return a1, a2


def complete(p: MonicPolynomial, params: CubicParams, a1: int, a2: int) -> Factorisation:
    """Finish a, u and n from (a1, a2); d1 = N(a), d2 = N(u)."""
    _require_cubic(p)
    x, y, Q, A, B, C = params.x, params.y, params.Q, params.A, params.B, params.C
    if x * a1 - y * a2 != Q:
        raise ValueError("need x*a1 - y*a2 == Q")
    c0, c1, c2 = p.coeffs
    num = 1 - A * a1 * a1 - B * a1 * a2 - C * a2 * a2
    a0, rem = divmod(num, Q)
    assert rem == 0, "a0 must be an integer; (a1, a2) does not solve the congruence"
    u0 = -(a0 - c2 * a1 + (c2 * c2 - c1) * a2) * x - (a1 - c2 * a2) * y
    u1 = a2 * y
    u2 = a2 * x
    n = a0 * u0 - c0 * a2 * u1 + c0 * (c2 * a2 - a1) * u2
    a, u = (a0, a1, a2), (u0, u1, u2)
    f = Factorisation(p, n, cubic_norm(p, a), cubic_norm(p, u), a=a, u=u)
    f.extra.update(x=x, y=y, Q=Q)
    return f


def _coprime_pair(x_bound: int, rng: RandomSource) -> tuple[int, int]:
    while True:
        x = rng.randint(-x_bound, x_bound)
        y = rng.randint(-x_bound, x_bound)
        if y != 0 and math.gcd(x, y) == 1:
            return x, y


def generate_cubic(
    p: MonicPolynomial,
    cfg: GenConfig,
    rng: RandomSource,
    x_bound: int = DEFAULT_X_BOUND,
    q_max: int = 100,
    bezout: str = "euclid",
) -> Factorisation:
    """Random witnessed factorisation of a cubic P(n).

    (x, y) is coprime with |x|, |y| <= x_bound; Q is a prime <= q_max.
    ``attempts`` counts completed candidates.
    """
    _require_cubic(p)
    if x_bound < 1:
        raise ValueError("x_bound must be >= 1")
    if q_max < 2:
        raise ValueError("q_max must be >= 2")
    if bezout not in BEZOUT_RULES:
        raise ValueError(f"unknown bezout rule {bezout!r}")
    if cfg.require_prime:
        why = prime_pair_obstruction(p)
        if why:
            raise UnsuitablePolynomial(why)
    attempts = 0
    q_draws = 0
    while attempts < cfg.max_attempts:
        x, y = _coprime_pair(x_bound, rng)
        A, B, C = congruence_coeffs(p, x, y)
        for _ in range(Q_DRAWS_PER_PAIR):
            Q = random_prime_below(q_max, rng, cfg.prime_rounds)
            q_draws += 1
            if y % Q == 0:
                continue
            params = CubicParams(x, y, Q, A, B, C)
            a = solve_congruence(params)
            if a is not None:
                break
        else:
            continue
        attempts += 1
        a1, a2 = lift(params, a, rng.choice((1, -1)), bezout)
        f = complete(p, params, a1, a2)
        if cfg.require_prime and not (
            is_probable_prime(f.d1, cfg.prime_rounds)
            and is_probable_prime(f.d2, cfg.prime_rounds)
        ):
            continue
        f.attempts = attempts
        f.extra["q_draws"] = q_draws
        f.check()
        return f
    raise AttemptsExhausted(attempts)
