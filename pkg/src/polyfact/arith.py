"""Exact integer primitives: Bezout, modular square roots, primality, primes."""

from __future__ import annotations

import math
import random

from . import kernels

RandomSource = random.Random

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
    151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229,
    233, 239, 241, 251,
)
_SMALL_PRODUCT = math.prod(_SMALL_PRIMES)

# Bases 2..41 are a deterministic witness set for n < 3.3 * 10**24.
_DETERMINISTIC_BASES = _SMALL_PRIMES[:13]
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981

DEFAULT_ROUNDS = 40


def make_rng(seed: int | None = None) -> RandomSource:
    """Return an independent deterministic random source."""
    return random.Random(seed)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``g = gcd(|a|, |b|) >= 0`` and ``s*a + t*b = g``."""
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    old_r, r = abs(a), abs(b)
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if a < 0:
        old_s = -old_s
    if b < 0:
        old_t = -old_t
    return old_r, old_s, old_t


def mod_inverse(a: int, m: int) -> int:
    g, s, _ = ext_gcd(a, m)
    if g != 1:
        raise ZeroDivisionError(f"{a} is not invertible modulo {m}")
    return s % abs(m)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """Return r with r*r = a (mod p), or None if a is a non-residue.

    Tonelli-Shanks; works for every prime p, including p = 1 (mod 4).
    The smaller of the two roots {r, p - r} is returned.
    """
    a %= p
    if a == 0 or p == 2:
        return a
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


def _strong_probable_prime(n: int, base: int, d: int, s: int) -> bool:
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rounds: int = DEFAULT_ROUNDS) -> bool:
    """Strong-pseudoprime test on ``|n|``.

    Exact below 3.3e24 (fixed witness set; a compiled kernel handles
    n < 2**64). Above that, ``rounds`` extra witnesses are drawn from a
    generator seeded by ``n`` itself, so the answer is reproducible.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    n = abs(n)
    if n < 2:
        return False
    if n < 1 << 64:
        return kernels.impl.mr_u64(n)
    g = math.gcd(n, _SMALL_PRODUCT)
    if g != 1:
        return False

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _DETERMINISTIC_BASES:
        if not _strong_probable_prime(n, base, d, s):
            return False
    if n < _DETERMINISTIC_LIMIT:
        return True
    witness = random.Random(n)
    for _ in range(rounds):
        if not _strong_probable_prime(n, witness.randrange(2, n - 1), d, s):
            return False
    return True


def random_prime_below(bound: int, rng: RandomSource, rounds: int = DEFAULT_ROUNDS) -> int:
    """Uniformly sample integers in [2, bound] until one is prime."""
    if bound < 2:
        raise ValueError("no primes below 2")
    while True:
        q = rng.randint(2, bound)
        if is_probable_prime(q, rounds):
            return q


def random_prime(bound_bits: int, rng: RandomSource, rounds: int = DEFAULT_ROUNDS) -> int:
    """Random prime Q with 2 <= Q < 2**bound_bits."""
    if bound_bits < 2:
        raise ValueError("bound_bits must be >= 2")
    return random_prime_below((1 << bound_bits) - 1, rng, rounds)


def iroot(x: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer."""
    if x < 0:
        raise ValueError("negative radicand")
    if x < 2:
        return x
    r = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` (n != 0) by trial division, ascending."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]
