"""Arithmetic in Z[x]/(P) for a monic integer polynomial P.

Ring elements are coefficient tuples (a_0, ..., a_{d-1}) over the basis
1, x, ..., x^{d-1}, lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class MonicPolynomial:
    """x^d + c_{d-1} x^{d-1} + ... + c_0, stored as ``coeffs = (c_0, ..., c_{d-1})``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) < 2:
            raise ValueError("degree must be at least 2")

    @classmethod
    def from_coeffs(cls, *coeffs: int) -> "MonicPolynomial":
        """Build from (c_0, ..., c_{d-1})."""
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def __call__(self, n: int) -> int:
        v = 1
        for c in reversed(self.coeffs):
            v = v * n + c
        return v

    def shift(self, k: int) -> "MonicPolynomial":
        """The monic polynomial x -> P(x + k)."""
        return MonicPolynomial(shift_coeffs(self.coeffs + (1,), k)[:-1])

    def __str__(self) -> str:
        return format_poly(self)


def shift_coeffs(coeffs, k: int) -> tuple:
    """Coefficients of v(x + k), lowest degree first."""
    # Taylor shift by repeated synthetic division
    c = list(coeffs)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += k * c[j + 1]
    return tuple(c)


def format_poly(p: MonicPolynomial) -> str:
    terms = [f"x^{p.degree}"]
    for e in range(p.degree - 1, -1, -1):
        c = p.coeffs[e]
        if c == 0:
            continue
        sign = "+" if c > 0 else "-"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            xpart = "x" if e == 1 else f"x^{e}"
            body = xpart if mag == 1 else f"{mag}*{xpart}"
        terms.append(f"{sign} {body}")
    return " ".join(terms)


def _check(p: MonicPolynomial, *elems):
    for e in elems:
        if len(e) != p.degree:
            raise ValueError(
                f"ring element of length {len(e)} does not match degree {p.degree}"
            )


def reduce(p: MonicPolynomial, coeffs) -> tuple:
    """Reduce an arbitrary-length coefficient list modulo P."""
    work = list(coeffs)
    d = p.degree
    for k in range(len(work) - 1, d - 1, -1):
        t = work[k]
        if t:
            for i, c in enumerate(p.coeffs):
                work[k - d + i] -= t * c
        work[k] = 0
    work += [0] * (d - len(work))
    return tuple(work[:d])


def multiply(p: MonicPolynomial, a, u) -> tuple:
    """Product of two ring elements."""
    _check(p, a, u)
    prod = [0] * (2 * p.degree - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, uj in enumerate(u):
                prod[i + j] += ai * uj
    return reduce(p, prod)


def companion(p: MonicPolynomial) -> list:
    """Matrix of multiplication by x in the basis 1, x, ..., x^{d-1} (columns)."""
    d = p.degree
    m = [[0] * d for _ in range(d)]
    for i in range(1, d):
        m[i][i - 1] = 1
    for i in range(d):
        m[i][d - 1] = -p.coeffs[i]
    return m


def multiplication_matrix(p: MonicPolynomial, a) -> list:
    """Matrix of u -> a*u; column j is a * x^j. Equals P_a(companion(P))."""
    _check(p, a)
    d = p.degree
    cols = []
    col = tuple(a)
    for _ in range(d):
        cols.append(col)
        col = reduce(p, (0,) + col)
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def det(m) -> int:
    """Exact integer determinant (Bareiss fraction-free elimination)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def norm(p: MonicPolynomial, a) -> int:
    """N(a) = product of P_a over the roots of P, computed as det P_a(companion(P))."""
    return det(multiplication_matrix(p, a))


def quadratic_norm(p: MonicPolynomial, a) -> int:
    c0, c1 = p.coeffs
    a0, a1 = a
    return a0 * a0 - c1 * a0 * a1 + c0 * a1 * a1


def cubic_norm(p: MonicPolynomial, a) -> int:
    """Closed-form norm of a + b x + c x^2 for a monic cubic."""
    c0, c1, c2 = p.coeffs
    a_, b, c = a
    return (
        a_ ** 3 - c2 * a_ * a_ * b + (c2 * c2 - 2 * c1) * a_ * a_ * c + c1 * a_ * b * b
        + (3 * c0 - c1 * c2) * a_ * b * c + (c1 * c1 - 2 * c0 * c2) * a_ * c * c
        - c0 * b ** 3 + c0 * c2 * b * b * c - c0 * c1 * b * c * c + c0 * c0 * c ** 3
    )


def fast_norm(p: MonicPolynomial, a) -> int:
    if p.degree == 2:
        return quadratic_norm(p, a)
    if p.degree == 3:
        return cubic_norm(p, a)
    return norm(p, a)


def e_matrix(p: MonicPolynomial, i: int) -> list:
    """E_{P,i}: coefficient i of a*u equals (E_{P,i} a) . u."""
    d = p.degree
    if not 0 <= i < d:
        raise ValueError("index out of range")
    powers = [reduce(p, [0] * k + [1]) for k in range(2 * d - 1)]
    return [[powers[j + k][i] for k in range(d)] for j in range(d)]


def e_matrices(p: MonicPolynomial) -> list:
    """[E_{P,1}, ..., E_{P,d-1}]."""
    return [e_matrix(p, i) for i in range(1, p.degree)]


def matvec(m, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def minors(p: MonicPolynomial, a) -> tuple:
    """(M_0, ..., M_{d-1}): minors of M* (rows E_{P,i} a, i >= 1) without column i."""
    _check(p, a)
    rows = [matvec(e, a) for e in e_matrices(p)]
    d = p.degree
    out = []
    for i in range(d):
        keep = [j for j in range(d) if j != i]
        out.append(det([[row[j] for j in keep] for row in rows]))
    return tuple(out)


def _parity(perm) -> int:
    inv = 0
    for x, y in combinations(range(len(perm)), 2):
        if perm[x] > perm[y]:
            inv += 1
    return inv % 2


def wedge_u(p: MonicPolynomial, a, x) -> tuple:
    """u = x ^ E_{P,2} a ^ ... ^ E_{P,d-1} a, via signed minors M_{i,j}.

    For degree 3 and x = (0, -s, t) this is the explicit cofactor formula
    u = (-(a0 - c2 a1 + (c2^2 - c1) a2) s - (a1 - c2 a2) t, a2 t, a2 s).
    """
    _check(p, a, x)
    d = p.degree
    rows = [matvec(e, a) for e in e_matrices(p)[1:]]
    u = []
    for i in range(d):
        total = 0
        for j in range(d):
            if j == i or not x[j]:
                continue
            rest = [k for k in range(d) if k not in (i, j)]
            sub = det([[row[k] for k in rest] for row in rows])
            sign = -1 if _parity([i, j] + rest) else 1
            total += sign * x[j] * sub
        u.append(total)
    return tuple(u)

