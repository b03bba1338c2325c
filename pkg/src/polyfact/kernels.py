"""Kernel dispatch.

The compiled ``_kernels`` extension is used when it imports; otherwise, or
when ``POLYFACT_PURE_PYTHON=1`` is set, the pure-Python twin is used. The
wrappers below route inputs that overflow machine words to Python.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("POLYFACT_PURE_PYTHON") == "1":
        raise ImportError("pure Python requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

impl = _compiled if _compiled is not None else _kernels_py


def available() -> list:
    """Kernel modules importable in this process (compiled first)."""
    return [m for m in (_compiled, _kernels_py) if m is not None]


def use(name: str) -> None:
    """Force the kernel implementation: ``"compiled"`` or ``"python"``."""
    global impl
    if name == "python":
        impl = _kernels_py
    elif name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        impl = _compiled
    else:
        raise ValueError(f"unknown kernel implementation {name!r}")


def reduced_triples(c: int) -> list:
    if c < 1:
        raise ValueError("c must be positive")
    # n can reach k*k + c <= 2c, so n*n must fit in 63 bits
    k = impl if c < (1 << 30) else _kernels_py
    return k.reduced_triples(c)


def unpeel_tree(n: int, d1: int, d2: int, n_max: int) -> list:
    # every entry on a branch is bounded by 3 * n_max**2 + |c|
    c = d1 * d2 - n * n
    small = n_max < (1 << 28) and max(abs(n), abs(d1), abs(d2), abs(c)) < (1 << 58)
    return (impl if small else _kernels_py).unpeel_tree(n, d1, d2, n_max)


def word_search(x, y, q: int, parity: int, max_states: int = 1 << 22):
    x = tuple(v % q for v in x)
    y = tuple(v % q for v in y)
    k = impl if 2 * q ** 4 <= (1 << 24) else _kernels_py
    return k.word_search(x, y, q, parity, max_states)
