"""All factorisations n^2 + c = d1 * d2 from words in the semigroup of A_k.

A_k = [[0, 1], [1, k]] with k >= 1. A triple (n, d1, d2) stands for the
symmetric matrix [[d1, n], [n, d2]], whose determinant is c. Appending the
letter k to a word conjugates by A_k:

    (n, d1, d2) -> (n + d2 k, d2, d1 + 2 n k + d2 k^2).

Peeling inverts this: while 0 < d1 <= n, the last letter is n // d1.

Seeds. For c > 0 a chain stops at a triple with n < d1 and n < d2; those
with d1 <= d2 are also outputs of the empty word. For c < 0 a chain of
positive triples stops at a base with d1 <= 0 < d2 and n < d2; its first
letter k must be at least the positivity threshold of that base, and more
letters may follow only once n < d2 holds again.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .arith import RandomSource, divisors, is_square
from .model import Factorisation
from .polyring import MonicPolynomial

DEFAULT_DIGIT_MEAN = 2.0


class InvalidTriple(ValueError):
    pass


def _require_c(c: int):
    if c == 0:
        raise ValueError("c = 0 makes n^2 + c reducible; every n^2 = n * n")


def generator(k: int) -> tuple:
    if k < 1:
        raise ValueError("generator index must be >= 1")
    return ((0, 1), (1, k))


def mat_mul(x, y) -> tuple:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def transpose(x) -> tuple:
    return ((x[0][0], x[1][0]), (x[0][1], x[1][1]))


def mat_det(x) -> int:
    return x[0][0] * x[1][1] - x[0][1] * x[1][0]


def word_to_matrix(word) -> tuple:
    """A_{k1} A_{k2} ... A_{kr}; the empty word gives the identity."""
    m = ((1, 0), (0, 1))
    for k in word:
        m = mat_mul(m, generator(k))
    return m


def seed_matrix(triple) -> tuple:
    n, d1, d2 = triple
    return ((d1, n), (n, d2))


def triple_of(m) -> tuple:
    if m[0][1] != m[1][0]:
        raise InvalidTriple(f"matrix {m} is not symmetric")
    return (m[0][1], m[0][0], m[1][1])


def step(triple, k: int) -> tuple:
    """Conjugate by A_k: the triple of A_k^t H A_k."""
    if k < 1:
        raise ValueError("generator index must be >= 1")
    n, d1, d2 = triple
    return (n + d2 * k, d2, d1 + 2 * n * k + d2 * k * k)


def phi(word, seed=(0, 1, 1)) -> tuple:
    """Triple of M^t H M with M = word_to_matrix(word), H = seed_matrix(seed)."""
    t = tuple(seed)
    for k in word:
        t = step(t, k)
    return t


def phi_factorisation(c: int, word, seed=(0, 1, 1)) -> Factorisation:
    n, d1, d2 = phi(word, seed)
    f = Factorisation(MonicPolynomial((c, 0)), n, d1, d2, word=tuple(word), seed=tuple(seed))
    f.check()
    return f


def phi_inverse(c: int, triple) -> tuple:
    """(word, seed) with phi(word, seed) == triple.

    The seed is the triple where peeling stops: 0 < d1 <= n fails.
    """
    _require_c(c)
    n, d1, d2 = triple
    if n * n + c != d1 * d2:
        raise InvalidTriple(f"{n}^2 + {c} != {d1} * {d2}")
    if n < 0:
        raise InvalidTriple("n must be nonnegative")
    word = []
    while 0 < d1 <= n:
        k, r = divmod(n, d1)
        word.append(k)
        n, d1, d2 = r, (r * r + c) // d1, d1
    return tuple(reversed(word)), (n, d1, d2)


def compute_D_c(c: int) -> list:
    """Triples with n >= 0, n < d1 <= d2 and n^2 + c = d1 d2 (c >= 1)."""
    if c < 1:
        raise ValueError("c must be positive")
    return kernels.reduced_triples(c)


@dataclass(frozen=True)
class NegativeBases:
    """Triples with n >= 0, d1 <= 0 < d2, n^2 + c = d1 d2 (c <= -1).

    When -c = r^2 the family (r, 0, d), d >= 1, is infinite and is held
    apart from ``finite`` as ``family_root = r``.
    """

    c: int
    finite: tuple
    family_root: int | None

    @property
    def infinite(self) -> bool:
        return self.family_root is not None

    def family(self, bound: int) -> list:
        if self.family_root is None:
            return []
        return [(self.family_root, 0, d) for d in range(1, bound + 1)]


def compute_N_c(c: int) -> NegativeBases:
    if c > -1:
        raise ValueError("c must be negative")
    m = -c
    out = []
    n = 0
    while n * n < m:
        v = m - n * n
        for d2 in divisors(v):
            out.append((n, -(v // d2), d2))
        n += 1
    root = math.isqrt(m) if is_square(m) else None
    return NegativeBases(c, tuple(sorted(out)), root)


def k_threshold(base) -> int | None:
    """Least k >= 1 with every entry of A_k^t H A_k positive, or None."""
    n, d1, d2 = base
    if d2 <= 0 or n < 0:
        return None
    # n + d2 k > 0 for k >= 1; d1 + 2 n k + d2 k^2 increases for k >= 1
    k = 1
    while d1 + 2 * n * k + d2 * k * k <= 0:
        k += 1
    return k


def extension_threshold(base) -> int | None:
    """Least k >= k_threshold(base) after which step(base, k) has n < d2."""
    k = k_threshold(base)
    if k is None:
        return None
    while True:
        n, _, d2 = step(base, k)
        if n < d2:
            return k
        k += 1


def positive_seeds(c: int) -> list:
    """Seeds of nonempty words for c > 0: n < d1 and n < d2, both orders."""
    out = []
    for n, d1, d2 in compute_D_c(c):
        out.append((n, d1, d2))
        if d1 != d2:
            out.append((n, d2, d1))
    return sorted(out)


def negative_starts(c: int, family_bound: int | None = None) -> list:
    """(base, k_base) for c < 0: bases with n < d2 whose chains never repeat.

    Bases from the infinite family are cut at d <= family_bound.
    """
    nc = compute_N_c(c)
    bases = [b for b in nc.finite if b[0] < b[2]]
    if nc.infinite:
        if family_bound is None:
            raise ValueError(f"N_c is infinite for c = {c}; a family bound is required")
        bases += [b for b in nc.family(family_bound) if b[0] < b[2]]
    return [(b, k_threshold(b)) for b in bases]


def enumerate_all(c: int, n_max: int) -> list:
    """Every (n, d1, d2) with 0 <= n <= n_max, d1 <= d2, d2 >= 1, d1 d2 = n^2 + c.

    Built from seeds and words only. For c = -r^2 the triples (r, 0, d) are
    listed for d <= n_max. Sorted; duplicates would indicate a broken bijection.
    """
    _require_c(c)
    if n_max < 0:
        return []
    out = []
    if c > 0:
        for seed in positive_seeds(c):
            n, d1, d2 = seed
            if n <= n_max and d1 <= d2:
                out.append(seed)
            out.extend(kernels.unpeel_tree(n, d1, d2, n_max))
    else:
        nc = compute_N_c(c)
        out.extend(t for t in nc.finite if t[0] <= n_max)
        out.extend(t for t in nc.family(n_max) if t[0] <= n_max)
        for base, k0 in negative_starts(c, n_max):
            k = k0
            while True:
                t = step(base, k)
                if t[0] > n_max:
                    break
                if t[1] <= t[2]:
                    out.append(t)
                if t[0] < t[2]:
                    out.extend(kernels.unpeel_tree(*t, n_max))
                k += 1
    out.sort()
    return out


def brute_force_factorisations(c: int, n_max: int, zero_bound: int | None = None) -> list:
    """Trial-division oracle for enumerate_all; d2 <= zero_bound when n^2 + c = 0."""
    _require_c(c)
    zero_bound = n_max if zero_bound is None else zero_bound
    out = []
    for n in range(n_max + 1):
        v = n * n + c
        if v > 0:
            d = 1
            while d * d <= v:
                if v % d == 0:
                    out.append((n, d, v // d))
                d += 1
        elif v < 0:
            for d2 in range(1, -v + 1):
                if v % d2 == 0:
                    out.append((n, v // d2, d2))
        else:
            out.extend((n, 0, d2) for d2 in range(1, zero_bound + 1))
    out.sort()
    return out


def geometric_digit(rng: RandomSource, mean: float = DEFAULT_DIGIT_MEAN) -> int:
    """k >= 1 with P(k) = p (1 - p)^(k - 1), p = 1/mean."""
    if mean < 1:
        raise ValueError("digit mean must be >= 1")
    k = 1
    stop = 1.0 / mean
    while rng.random() >= stop:
        k += 1
    return k


def random_factorisation(
    c: int,
    word_len: int,
    rng: RandomSource,
    digit_mean: float = DEFAULT_DIGIT_MEAN,
    family_bound: int | None = None,
) -> Factorisation:
    """Pick a seed, then a random word of ``word_len`` letters.

    For c < 0 the first letter is offset by the base's threshold (positivity,
    or extension when more letters follow). A single letter can leave d1 > d2.
    """
    _require_c(c)
    if word_len < 0:
        raise ValueError("word_len must be >= 0")
    if c > 0:
        if word_len == 0:
            seed = rng.choice(compute_D_c(c))
        else:
            seed = rng.choice(positive_seeds(c))
        word = [geometric_digit(rng, digit_mean) for _ in range(word_len)]
    else:
        nc = compute_N_c(c)
        if word_len == 0:
            pool = list(nc.finite)
            if nc.infinite:
                if family_bound is None:
                    raise ValueError(f"N_c is infinite for c = {c}; a family bound is required")
                pool += nc.family(family_bound)
            seed = rng.choice(pool)
            word = []
        else:
            seed, k0 = rng.choice(negative_starts(c, family_bound))
            if word_len > 1:
                k0 = extension_threshold(seed)
            word = [k0 - 1 + geometric_digit(rng, digit_mean)]
            word += [geometric_digit(rng, digit_mean) for _ in range(word_len - 1)]
    return phi_factorisation(c, word, seed)
