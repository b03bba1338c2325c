"""Acceptance checks. Each test prints one PASS/FAIL line, then asserts.

Run with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

import io
import json
import math
import random
import statistics
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from polyfact.arith import make_rng, random_prime_below
from polyfact.cli import main, run_bench
from polyfact.cubicgen import complete, generate_cubic, make_params, solve_congruence
from polyfact.model import GenConfig
from polyfact.polyring import MonicPolynomial, e_matrices, matvec, minors, multiply, norm
from polyfact.quadgen import enumerate_witnesses
from polyfact.ratio import target_ratio_cubic, target_ratio_quadratic
from polyfact.semigroup import (
    brute_force_factorisations, enumerate_all, mat_det, phi, phi_inverse, positive_seeds,
    seed_matrix, word_to_matrix,
)

FIXTURES = Path(__file__).parent / "data" / "reference_fixtures.jsonl"
X2P1 = MonicPolynomial((1, 0))
P3 = MonicPolynomial((1, 1, 0))


@pytest.fixture
def report(capsys):
    def _report(number: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\nCRITERION {number}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, detail

    return _report


def test_criterion_1_reference_fixtures(report):
    recs = [json.loads(line) for line in FIXTURES.read_text().splitlines()]
    pairs = {(r["d1"], r["d2"]) for r in recs}
    present = {("139186", "44225"), ("3871614562", "1232373145")} <= pairs
    kinds = (sum(r["poly"] == "x^2 + 1" for r in recs), sum(r["poly"] == "x^3 + x + 1" for r in recs))
    t0 = time.perf_counter()
    out = io.StringIO()
    code = main(["--verify", str(FIXTURES)], out)
    elapsed = time.perf_counter() - t0
    result = json.loads(out.getvalue())
    ok = (code == 0 and result == {"verified": 8, "failed": 0} and present
          and kinds == (3, 5) and elapsed < 1)
    report(1, ok, f"{result}, {elapsed:.3f}s")


def test_criterion_2_cubic_worked_example(report):
    params = make_params(P3, 1, 1, 11)
    a = solve_congruence(params)
    # branch +2: the root of the congruence used by the example
    roots = {a, (-a) % 11}
    f = complete(P3, params, 13, 2)
    # independent substitution: P(-110) by hand-expanded powers
    n = -110
    direct = n * n * n + n + 1
    ok = (2 in roots and f.a == (-16, 13, 2) and f.u == (5, 2, 2)
          and (f.n, f.d1, f.d2) == (-110, -11377, 117)
          and direct == -1331109 == f.d1 * f.d2
          and multiply(P3, f.a, f.u) == (-110, -1, 0))
    report(2, ok, f"a={f.a} u={f.u} n={f.n} d1={f.d1} d2={f.d2}")


def test_criterion_3_bijection(report):
    t0 = time.perf_counter()
    bad = []
    for c in (1, 2, 3, 5, 13, -1, -2, -3):
        e = enumerate_all(c, 200)
        if len(e) != len(set(e)) or e != brute_force_factorisations(c, 200):
            bad.append(c)
    elapsed = time.perf_counter() - t0
    report(3, not bad and elapsed < 30, f"mismatches={bad}, {elapsed:.2f}s")


def test_criterion_4_norm_method_gap(report):
    p = MonicPolynomial((5, 0))
    hit = any(abs(f.n) == 1 and {f.d1, f.d2} == {2, 3} for f in enumerate_witnesses(p, 30))
    complete_has = (1, 2, 3) in enumerate_all(5, 30)
    seed_has = (1, 2, 3) in positive_seeds(5)
    ok = not hit and complete_has and seed_has
    report(4, ok, f"quadgen emits (1,2,3): {hit}; enumeration emits it: {complete_has}")


def test_criterion_5_ratio_targets(report):
    t0 = time.perf_counter()
    eps = Fraction(1, 10**4)
    worst = Fraction(0)
    ok = True
    for alpha in (Fraction(1, 2), Fraction(1), Fraction(355, 113), Fraction(10)):
        for p, fn in ((X2P1, target_ratio_quadratic), (P3, target_ratio_cubic)):
            f = fn(p, alpha, eps, make_rng(1))
            err = abs(Fraction(f.d1, f.d2) - alpha)
            worst = max(worst, err)
            ok &= p(f.n) == f.d1 * f.d2 and err < eps
    elapsed = time.perf_counter() - t0
    report(5, ok and elapsed < 60, f"worst |d1/d2 - alpha| = {float(worst):.3g}, {elapsed:.2f}s")


def test_criterion_6_quadratic_tries(report):
    t0 = time.perf_counter()
    res = run_bench(1, 1, seed=1, runs=5)
    elapsed = time.perf_counter() - t0
    mean = res["mean_tries"]
    ok = 318 / 10 <= mean <= 318 * 10 and elapsed < 300
    report(6, ok, f"mean tries {mean:.1f} over 5 runs (318 expected), {elapsed:.1f}s")


def test_criterion_7_cubic_size_and_tries(report):
    t0 = time.perf_counter()
    res = run_bench(2, 1, seed=1, runs=20)
    elapsed = time.perf_counter() - t0
    mean_t, mean_d = res["mean_tries"], res["mean_digits"]
    ok = 71 <= mean_d <= 101 and 1509 / 10 <= mean_t <= 1509 * 10 and elapsed < 300
    report(7, ok, f"mean digits {mean_d:.1f} (86 +- 15), mean tries {mean_t:.0f} (1509 expected), "
                  f"{elapsed:.1f}s")


def _properties() -> list:
    rng = random.Random(2024)
    failures = []

    def rand_poly(d, c=20):
        return MonicPolynomial(tuple(rng.randint(-c, c) for _ in range(d)))

    def rand_elem(d, c=50):
        return tuple(rng.randint(-c, c) for _ in range(d))

    for _ in range(10_000):
        d = rng.randint(2, 4)
        p = rand_poly(d)
        a, u = rand_elem(d), rand_elem(d)
        prod = multiply(p, a, u)
        if norm(p, prod) != norm(p, a) * norm(p, u):
            failures.append("norm multiplicativity")
            break
        if any(sum(x * y for x, y in zip(matvec(e, a), u)) != prod[i]
               for i, e in enumerate(e_matrices(p), start=1)):
            failures.append("E-matrix consistency")
            break
        n = rng.randint(-10**6, 10**6)
        if norm(p, (n, -1) + (0,) * (d - 2)) != p(n):
            failures.append("N(n - x) = P(n)")
            break

    grng = make_rng(7)
    for _ in range(10_000):
        f = generate_cubic(P3, GenConfig(), grng)
        x, y, Q = f.extra["x"], f.extra["y"], f.extra["Q"]
        params = make_params(P3, x, y, Q)
        a0, a1, a2 = f.a
        lhs = (a0 * (x * a1 - y * a2) + params.A * a1 * a1 + params.B * a1 * a2
               + params.C * a2 * a2)
        _, m1, m2 = minors(P3, f.a)
        rebuilt = complete(P3, params, a1, a2)  # asserts a0 is integral
        if lhs != 1 or x * m1 + y * m2 != 1 or rebuilt.a != f.a:
            failures.append("cubic congruence replay")
            break

    hits = total = 0
    x, y = 317, -562
    while total < 1000:
        q = random_prime_below(10**6, rng)
        if y % q == 0:
            continue
        total += 1
        hits += solve_congruence(make_params(P3, x, y, q)) is not None
    if not 0.4 <= hits / total <= 0.6:
        failures.append(f"solvable-Q frequency {hits / total:.3f}")

    seeds = {c: positive_seeds(c) for c in (1, 2, 3, 5, 13, 30)}
    for _ in range(10_000):
        c = rng.choice(list(seeds))
        seed = rng.choice(seeds[c])
        word = tuple(rng.randint(1, 9) for _ in range(rng.randint(1, 12)))
        if phi_inverse(c, phi(word, seed)) != (word, seed):
            failures.append("phi round-trip")
            break
        if mat_det(word_to_matrix(word)) != (-1) ** len(word) or mat_det(seed_matrix(seed)) != c:
            failures.append("determinant invariants")
            break
    return failures


def test_criterion_8_property_suites(report):
    t0 = time.perf_counter()
    failures = _properties()
    elapsed = time.perf_counter() - t0
    report(8, not failures and elapsed < 120, f"failures={failures}, {elapsed:.1f}s")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
