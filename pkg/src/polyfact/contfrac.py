"""Finite continued fractions and their convergents."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ContinuedFraction:
    """[r_0; r_1, ..., r_s] with r_i >= 1 for i >= 1."""

    quotients: tuple

    def __post_init__(self):
        q = tuple(int(r) for r in self.quotients)
        if not q:
            raise ValueError("empty continued fraction")
        if any(r < 1 for r in q[1:]):
            raise ValueError("partial quotients after the first must be >= 1")
        object.__setattr__(self, "quotients", q)

    @property
    def value(self) -> Fraction:
        p, q = convergents(self.quotients)[-1]
        return Fraction(p, q)

    def reversed(self) -> "ContinuedFraction":
        return ContinuedFraction(self.quotients[::-1])

    def __len__(self):
        return len(self.quotients)


def cf_expand(p: int, q: int) -> ContinuedFraction:
    """Regular continued fraction of p/q (q >= 1), floor convention."""
    if q == 0:
        raise ZeroDivisionError("denominator must be nonzero")
    if q < 0:
        p, q = -p, -q
    out = []
    while q:
        r, rem = divmod(p, q)
        out.append(r)
        p, q = q, rem
    return ContinuedFraction(tuple(out))


def convergents(quotients) -> list:
    """[(p_0, q_0), ..., (p_s, q_s)] from the standard recurrence."""
    # seeded with p_{-1}/q_{-1} = 1/0 and p_{-2}/q_{-2} = 0/1
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    out = []
    for r in quotients:
        p_prev, p = p, r * p + p_prev
        q_prev, q = q, r * q + q_prev
        out.append((p, q))
    return out


def cf_convergents(cf: ContinuedFraction) -> list:
    return convergents(cf.quotients)


def matrix_of(quotients) -> tuple:
    """Product of [[r, 1], [1, 0]] over the quotients: ((p_s, p_{s-1}), (q_s, q_{s-1}))."""
    a, b, c, d = 1, 0, 0, 1
    for r in quotients:
        a, b = a * r + b, a
        c, d = c * r + d, c
    return (a, b), (c, d)
