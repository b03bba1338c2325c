"""Pure-Python kernels. Same API and results as the compiled ``_kernels``."""

from collections import deque

NAME = "python"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def mr_u64(n):
    """Deterministic Miller-Rabin for 0 <= n < 2**64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def reduced_triples(c):
    """All (n, d1, d2) with n >= 0, n < d1 <= d2 and n*n + c = d1*d2, for c >= 1."""
    out = []
    k = 1
    while k * k <= c:
        m_total = k * k + c
        i = 1
        while i * i <= m_total:
            if m_total % i == 0:
                for m in {i, m_total // i}:
                    n = m - k
                    if n < 0:
                        continue
                    v = n * n + c
                    if v % m == 0 and m * m <= v:
                        out.append((n, m, v // m))
            i += 1
        k += 1
    out.sort()
    return out


def unpeel_tree(n, d1, d2, n_max):
    """Triples reached from seed (n, d1, d2) by every nonempty word, n <= n_max.

    One letter q maps (b, a, d) -> (b + d*q, d, a + 2*b*q + d*q*q).
    """
    out = []
    stack = [(n, d1, d2)]
    while stack:
        b, a, d = stack.pop()
        q = 1
        while True:
            nn = b + d * q
            if nn > n_max:
                break
            t = (nn, d, a + 2 * b * q + d * q * q)
            out.append(t)
            stack.append(t)
            q += 1
    return out


def _mul(m, r, q):
    # m * [[r, 1], [1, 0]] mod q
    a, b, c, d = m
    return ((a * r + b) % q, a % q, (c * r + d) % q, c % q)


def word_search(x, y, q, parity, max_states=1 << 22):
    """Shortest word w over quotients 1..q with (X * T(w) * Y)[1][0] = 0 (mod q).

    ``T(w)`` is the product of [[r, 1], [1, 0]] over w; ``x`` and ``y`` are
    4-tuples (row-major) of matrices mod q; ``len(w) % 2 == parity``.
    Returns None when ``max_states`` is exhausted.
    """
    gens = range(1, q + 1) if q > 1 else (1,)

    def goal(m, p):
        if p != parity:
            return False
        # lower-left entry of X * M * Y
        xm_c = (x[2] * m[0] + x[3] * m[2]) % q, (x[2] * m[1] + x[3] * m[3]) % q
        return (xm_c[0] * y[0] + xm_c[1] * y[2]) % q == 0

    start = (1 % q, 0, 0, 1 % q)
    if goal(start, 0):
        return []
    parent = {(start, 0): None}
    frontier = deque([(start, 0)])
    while frontier:
        state = frontier.popleft()
        m, p = state
        for r in gens:
            nxt = (_mul(m, r, q), p ^ 1)
            if nxt in parent:
                continue
            parent[nxt] = (state, r)
            if goal(*nxt):
                word = []
                cur = nxt
                while parent[cur] is not None:
                    cur, letter = parent[cur]
                    word.append(letter)
                return word[::-1]
            if len(parent) >= max_states:
                return None
            frontier.append(nxt)
    return None
