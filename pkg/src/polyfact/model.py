from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .polyring import MonicPolynomial, multiply


class AttemptsExhausted(RuntimeError):
    """Raised when a generator hits ``max_attempts`` without an acceptable output."""

    def __init__(self, attempts: int, message: str = ""):
        super().__init__(message or f"no acceptable factorisation after {attempts} attempts")
        self.attempts = attempts


class UnsuitablePolynomial(ValueError):
    """The polynomial can never yield a prime pair (reducible or fixed prime divisor)."""


@dataclass
class Factorisation:
    """P(n) = d1 * d2, with optional witnesses.

    ``a``/``u`` are ring elements with a*u = n - x. ``word``/``seed`` are the
    semigroup word and seed triple for factorisations of n^2 + c.
    """

    poly: MonicPolynomial | None
    n: int
    d1: int
    d2: int
    a: tuple | None = None
    u: tuple | None = None
    word: tuple | None = None
    seed: tuple | None = None
    attempts: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.d1, self.d2)

    def value(self) -> int:
        return self.poly(self.n)

    def check(self) -> None:
        """Assert the defining identity and the witness identity, if present."""
        if self.poly is not None and self.poly(self.n) != self.d1 * self.d2:
            raise AssertionError(f"P({self.n}) != {self.d1} * {self.d2}")
        if self.a is not None and self.u is not None:
            want = (self.n, -1) + (0,) * (self.poly.degree - 2)
            got = multiply(self.poly, self.a, self.u)
            if got != want:
                raise AssertionError(f"a*u = {got}, expected n - x = {want}")


@dataclass
class GenConfig:
    """Generator settings.

    ``size_target`` is the magnitude M aimed at for |d1 d2|; ``prime_rounds``
    is the number of random strong-pseudoprime rounds above the exact range.
    """

    size_target: int = 1 << 100
    require_prime: bool = False
    max_attempts: int = 1_000_000
    prime_rounds: int = 40
    seed: int | None = None

    def __post_init__(self):
        if self.size_target < 4:
            raise ValueError("size_target must be >= 4")
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be >= 1")
