# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Mirrors ``_kernels_py`` exactly; callers guard the
machine-word ranges (see ``polyfact.kernels``)."""

from libc.stdint cimport uint64_t, int64_t, int32_t
from libc.stdlib cimport malloc, free

cdef extern from *:
    """
    typedef unsigned __int128 pf_u128;
    static inline unsigned long long pf_mulmod(unsigned long long a,
                                               unsigned long long b,
                                               unsigned long long m) {
        return (unsigned long long)(((pf_u128)a * b) % m);
    }
    """
    unsigned long long pf_mulmod(unsigned long long a, unsigned long long b,
                                 unsigned long long m) nogil

NAME = "compiled"

cdef uint64_t[12] _BASES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


cdef uint64_t _powmod(uint64_t b, uint64_t e, uint64_t m) nogil:
    cdef uint64_t r = 1
    b %= m
    while e:
        if e & 1:
            r = pf_mulmod(r, b, m)
        b = pf_mulmod(b, b, m)
        e >>= 1
    return r


cdef bint _mr(uint64_t n) nogil:
    cdef int i, j, s
    cdef uint64_t d, x, a
    if n < 2:
        return False
    for i in range(12):
        if n % _BASES[i] == 0:
            return n == _BASES[i]
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for i in range(12):
        a = _BASES[i]
        x = _powmod(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for j in range(s - 1):
            x = pf_mulmod(x, x, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def mr_u64(n):
    return _mr(<uint64_t>n)


def reduced_triples(int64_t c):
    cdef int64_t k, m_total, i, m, n, v, idx
    cdef int64_t[2] cand
    out = []
    k = 1
    while k * k <= c:
        m_total = k * k + c
        i = 1
        while i * i <= m_total:
            if m_total % i == 0:
                cand[0] = i
                cand[1] = m_total // i
                for idx in range(2 if cand[1] != cand[0] else 1):
                    m = cand[idx]
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


def unpeel_tree(int64_t n, int64_t d1, int64_t d2, int64_t n_max):
    cdef int64_t b, a, d, q, nn
    cdef Py_ssize_t i
    cdef Py_ssize_t top = 0, cap = 1024
    cdef int64_t* stack = <int64_t*>malloc(3 * cap * sizeof(int64_t))
    cdef int64_t* grown
    out = []
    if stack == NULL:
        raise MemoryError()
    try:
        stack[0] = n
        stack[1] = d1
        stack[2] = d2
        top = 1
        while top:
            top -= 1
            b = stack[3 * top]
            a = stack[3 * top + 1]
            d = stack[3 * top + 2]
            q = 1
            while True:
                nn = b + d * q
                if nn > n_max:
                    break
                out.append((nn, d, a + 2 * b * q + d * q * q))
                if top == cap:
                    cap *= 2
                    grown = <int64_t*>malloc(3 * cap * sizeof(int64_t))
                    if grown == NULL:
                        raise MemoryError()
                    for i in range(3 * top):
                        grown[i] = stack[i]
                    free(stack)
                    stack = grown
                stack[3 * top] = nn
                stack[3 * top + 1] = d
                stack[3 * top + 2] = a + 2 * b * q + d * q * q
                top += 1
                q += 1
    finally:
        free(stack)
    return out


def word_search(x, y, int64_t q, int parity, int64_t max_states=1 << 22):
    cdef int64_t x0 = x[0], x1 = x[1], x2 = x[2], x3 = x[3]
    cdef int64_t y0 = y[0], y1 = y[1], y2 = y[2], y3 = y[3]
    cdef int64_t nstates = 2 * q * q * q * q
    cdef int64_t qq = q if q > 1 else 1
    cdef int64_t head = 0, tail = 0, seen = 0
    cdef int64_t s, ns, a, b, c, d, na, nb, nc, nd, p, r, lc0, lc1, start
    cdef int32_t* parent
    cdef int32_t* queue

    start = (((1 % q) * q + 0) * q + 0) * q + (1 % q)
    start = start * 2
    # goal test on the start state
    lc0 = (x2 * (1 % q)) % q
    lc1 = (x3 * (1 % q)) % q
    if parity == 0 and (lc0 * y0 + lc1 * y2) % q == 0:
        return []

    parent = <int32_t*>malloc(nstates * sizeof(int32_t))
    queue = <int32_t*>malloc(nstates * sizeof(int32_t))
    if parent == NULL or queue == NULL:
        free(parent); free(queue)
        raise MemoryError()
    try:
        for s in range(nstates):
            parent[s] = -1
        parent[start] = <int32_t>start
        queue[tail] = <int32_t>start
        tail += 1
        seen = 1
        while head < tail:
            s = queue[head]
            head += 1
            p = s % 2
            d = (s // 2) % q
            c = (s // 2 // q) % q
            b = (s // 2 // q // q) % q
            a = (s // 2 // q // q // q) % q
            for r in range(1, qq + 1):
                na = (a * r + b) % q
                nb = a
                nc = (c * r + d) % q
                nd = c
                ns = ((((na * q + nb) * q + nc) * q + nd) * 2) + (p ^ 1)
                if parent[ns] != -1:
                    continue
                parent[ns] = <int32_t>s
                seen += 1
                lc0 = (x2 * na + x3 * nc) % q
                lc1 = (x2 * nb + x3 * nd) % q
                if (p ^ 1) == parity and (lc0 * y0 + lc1 * y2) % q == 0:
                    word = []
                    while ns != start:
                        word.append(_letter(ns, parent[ns], q))
                        ns = parent[ns]
                    word.reverse()
                    return word
                if seen >= max_states:
                    return None
                queue[tail] = <int32_t>ns
                tail += 1
        return None
    finally:
        free(parent)
        free(queue)


cdef int64_t _letter(int64_t child, int64_t par, int64_t q):
    # recover r from parent/child: child.a = (par.a * r + par.b) mod q, etc.
    cdef int64_t pa, pb, pc, pd, ca, cc, r
    pd = (par // 2) % q
    pc = (par // 2 // q) % q
    pb = (par // 2 // q // q) % q
    pa = (par // 2 // q // q // q) % q
    cc = (child // 2 // q) % q
    ca = (child // 2 // q // q // q) % q
    for r in range(1, (q if q > 1 else 1) + 1):
        if (pa * r + pb) % q == ca and (pc * r + pd) % q == cc:
            return r
    return -1
