"""polyfact command line: generators, enumeration, verification and benchmarks.

Records are JSON lines with big integers as decimal strings. Exit codes: 0 on
success, 1 when ``verify`` finds a bad record, 2 on usage errors and 3 when a
generator runs out of attempts.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import statistics
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction

from .arith import make_rng
from .cubicgen import DEFAULT_X_BOUND, generate_cubic
from .model import AttemptsExhausted, Factorisation, GenConfig, UnsuitablePolynomial
from .parse import parse_poly
from .polyring import MonicPolynomial, format_poly, multiply
from .quadgen import generate_quadratic
from .ratio import RatioNotReached, as_fraction, target_ratio_cubic, target_ratio_quadratic
from . import semigroup

EXIT_OK = 0
EXIT_BAD_RECORD = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3

TABLE1 = {  # bits -> tries reported for x^2 + 1
    1: (100, 318), 2: (200, 2261), 3: (400, 4135), 4: (800, 17255), 5: (1024, 68055),
    6: (2048, 118687),
}
TABLE2 = {  # bound on Q -> (tries, digits of d1 d2) reported for x^3 + x + 1
    1: ("100", 1509, 86), 2: ("50 bits", 4908, 159), 3: ("100 bits", 22194, 260),
    4: ("200 bits", 59774, 440), 5: ("400 bits", 281770, 794),
}


class UsageError(Exception):
    pass


def decimal_ratio(r: Fraction, digits: int = 20) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(r.numerator) / Decimal(r.denominator))


def to_record(f: Factorisation, seed) -> dict:
    rec = {"poly": format_poly(f.poly), "n": str(f.n), "d1": str(f.d1), "d2": str(f.d2)}
    if f.a is not None:
        rec["a"] = [str(v) for v in f.a]
        rec["u"] = [str(v) for v in f.u]
    if f.seed is not None:
        rec["word"] = list(f.word)
        n, d1, d2 = f.seed
        rec["seed_matrix"] = [[str(d1), str(n)], [str(n), str(d2)]]
    rec["attempts"] = f.attempts
    if "ratio" in f.extra:
        rec["ratio"] = decimal_ratio(f.extra["ratio"])
    for key in ("x", "y", "Q", "depth"):
        if key in f.extra:
            rec[key] = f.extra[key]
    if seed is not None:
        rec["seed"] = seed
    return rec


def check_record(rec: dict) -> list:
    """Problems with a record; empty when every identity holds."""
    problems = []
    try:
        p = parse_poly(rec["poly"])
        n, d1, d2 = int(rec["n"]), int(rec["d1"]), int(rec["d2"])
    except (KeyError, TypeError, ValueError) as e:
        return [f"malformed record: {e}"]
    if p(n) != d1 * d2:
        problems.append(f"P(n) = {p(n)} != d1*d2 = {d1 * d2}")
    if "a" in rec or "u" in rec:
        try:
            a = tuple(int(v) for v in rec["a"])
            u = tuple(int(v) for v in rec["u"])
            got = multiply(p, a, u)
        except (KeyError, TypeError, ValueError) as e:
            problems.append(f"bad witnesses: {e}")
        else:
            if got != (n, -1) + (0,) * (p.degree - 2):
                problems.append(f"a*u = {got} is not n - x")
    if "seed_matrix" in rec:
        try:
            (s1, sn), (sn2, s2) = [[int(v) for v in row] for row in rec["seed_matrix"]]
            word = [int(k) for k in rec.get("word", [])]
            if sn != sn2:
                raise ValueError("seed matrix is not symmetric")
            got = semigroup.phi(word, (sn, s1, s2))
        except (TypeError, ValueError) as e:
            problems.append(f"bad word/seed: {e}")
        else:
            if got != (n, d1, d2):
                problems.append(f"word and seed give {got}")
    if "alpha" in rec and "eps" in rec and d2:
        if abs(Fraction(d1, d2) - as_fraction(rec["alpha"])) >= as_fraction(rec["eps"]):
            problems.append("ratio outside the requested tolerance")
    return problems


def emit(rec: dict, out) -> None:
    problems = check_record(rec)
    if problems:
        raise AssertionError(f"refusing to print a bad record: {problems}")
    out.write(json.dumps(rec) + "\n")


def _poly(text: str, degrees) -> MonicPolynomial:
    try:
        return parse_poly(text, degrees)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _run_one(job):
    kind, coeffs, cfg, opts, seed = job
    p = MonicPolynomial(coeffs)
    rng = make_rng(seed)
    try:
        if kind == "quad":
            return generate_quadratic(p, cfg, rng)
        return generate_cubic(p, cfg, rng, opts["x_bound"], opts["q_max"])
    except AttemptsExhausted as e:
        return e


def _race(jobs, threads: int):
    # first success wins; the remaining workers are terminated
    last = None
    with multiprocessing.Pool(threads) as pool:
        for res in pool.imap_unordered(_run_one, jobs):
            if isinstance(res, Factorisation):
                pool.terminate()
                return res
            last = res
    raise last


def cmd_gen(args, out) -> int:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    if args.kind == "ratio":
        return _gen_ratio(args, out)
    degrees = (2,) if args.kind == "quad" else (3,)
    p = _poly(args.poly, degrees)
    try:
        cfg = GenConfig(
            size_target=1 << args.bits, require_prime=args.prime,
            max_attempts=args.max_attempts, seed=args.seed,
        )
    except ValueError as e:
        raise UsageError(str(e)) from e
    opts = {"x_bound": args.x_bound, "q_max": _q_max(args)}
    if args.x_bound < 1 or opts["q_max"] < 2:
        raise UsageError("--x-bound must be >= 1 and the bound on Q >= 2")
    rng = make_rng(args.seed)
    for i in range(args.count):
        t0 = time.perf_counter()
        try:
            if args.threads > 1:
                jobs = [(args.kind, p.coeffs, cfg, opts, f"{args.seed}/{i}/{w}")
                        for w in range(args.threads)]
                f = _race(jobs, args.threads)
            elif args.kind == "quad":
                f = generate_quadratic(p, cfg, rng)
            else:
                f = generate_cubic(p, cfg, rng, opts["x_bound"], opts["q_max"])
        except UnsuitablePolynomial as e:
            raise UsageError(str(e)) from e
        except AttemptsExhausted as e:
            print(f"polyfact: {e}", file=sys.stderr)
            return EXIT_EXHAUSTED
        rec = to_record(f, args.seed)
        if args.timing:
            rec["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        emit(rec, out)
    return EXIT_OK


def _q_max(args) -> int:
    if getattr(args, "q_bits", None) is not None:
        return (1 << args.q_bits) - 1
    return getattr(args, "q_max", 100)


def _gen_ratio(args, out) -> int:
    if args.alpha is None:
        raise UsageError("gen ratio needs --alpha")
    p = _poly(args.poly, (2, 3))
    try:
        alpha, eps = as_fraction(args.alpha), as_fraction(args.eps)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad --alpha/--eps: {e}") from e
    if alpha < 0 or eps <= 0:
        raise UsageError("need --alpha >= 0 and --eps > 0")
    rng = make_rng(args.seed)
    fn = target_ratio_quadratic if p.degree == 2 else target_ratio_cubic
    for _ in range(args.count):
        t0 = time.perf_counter()
        try:
            f = fn(p, alpha, eps, rng)
        except RatioNotReached as e:
            print(f"polyfact: {e}", file=sys.stderr)
            return EXIT_EXHAUSTED
        rec = to_record(f, args.seed)
        rec["word"] = list(f.word)
        rec["alpha"] = str(alpha)
        rec["eps"] = str(eps)
        if args.timing:
            rec["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        emit(rec, out)
    return EXIT_OK


def _triple_record(c: int, t, seed=None) -> dict:
    word, s = semigroup.phi_inverse(c, t)
    f = Factorisation(MonicPolynomial((c, 0)), *t, word=word, seed=s)
    return to_record(f, seed)


def cmd_enum(args, out) -> int:
    if args.c == 0:
        raise UsageError("c = 0 gives a reducible n^2 + c")
    if args.mode == "all":
        if args.n_max < 0:
            raise UsageError("--n-max must be >= 0")
        triples = semigroup.enumerate_all(args.c, args.n_max)
        if not args.summary_only:
            for t in triples:
                emit(_triple_record(args.c, t), out)
        if args.check_bruteforce:
            brute = semigroup.brute_force_factorisations(args.c, args.n_max)
            verdict = "MATCH" if brute == triples else "MISMATCH"
            out.write(json.dumps({
                "check": verdict, "c": args.c, "n_max": args.n_max,
                "count": len(triples), "bruteforce_count": len(brute),
            }) + "\n")
            return EXIT_OK if verdict == "MATCH" else EXIT_BAD_RECORD
        return EXIT_OK
    if args.word_len < 0 or args.count < 1:
        raise UsageError("--word-len must be >= 0 and --count >= 1")
    rng = make_rng(args.seed)
    for _ in range(args.count):
        try:
            f = semigroup.random_factorisation(
                args.c, args.word_len, rng, args.digit_mean, args.family_bound
            )
        except ValueError as e:
            raise UsageError(str(e)) from e
        emit(to_record(f, args.seed), out)
    return EXIT_OK


def verify_stream(lines) -> tuple:
    """(records checked, list of (line number, problems))."""
    bad = []
    count = 0
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as e:
            count += 1
            bad.append((lineno, [f"invalid JSON: {e}"]))
            continue
        if "check" in rec and "poly" not in rec:
            continue
        count += 1
        problems = check_record(rec)
        if problems:
            bad.append((lineno, problems))
    return count, bad


def cmd_verify(args, out) -> int:
    path = args.file
    if path in (None, "-"):
        count, bad = verify_stream(sys.stdin)
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                count, bad = verify_stream(fh)
        except OSError as e:
            raise UsageError(str(e)) from e
    for lineno, problems in bad:
        print(f"line {lineno}: " + "; ".join(problems), file=sys.stderr)
    out.write(json.dumps({"verified": count - len(bad), "failed": len(bad)}) + "\n")
    return EXIT_OK if not bad and count else EXIT_BAD_RECORD


def run_bench(table: int, row: int, seed: int, runs: int) -> dict:
    """Repeat one table row ``runs`` times; tries and sizes, timings for reference."""
    rng = make_rng(seed)
    tries, digits, ms = [], [], []
    if table == 1:
        bits, reference_tries = TABLE1[row]
        p = MonicPolynomial((1, 0))
        cfg = GenConfig(size_target=1 << bits, require_prime=True)
        gen = lambda: generate_quadratic(p, cfg, rng)  # noqa: E731
        reference = {"bound_bits": bits, "reference_tries": reference_tries}
    elif table == 2:
        label, reference_tries, reference_digits = TABLE2[row]
        q_max = 100 if label == "100" else (1 << int(label.split()[0])) - 1
        p = MonicPolynomial((1, 1, 0))
        cfg = GenConfig(require_prime=True)
        gen = lambda: generate_cubic(p, cfg, rng, DEFAULT_X_BOUND, q_max)  # noqa: E731
        reference = {"q_bound": label, "reference_tries": reference_tries, "reference_digits": reference_digits}
    else:
        raise UsageError("--table must be 1 or 2")
    for _ in range(runs):
        t0 = time.perf_counter()
        f = gen()
        ms.append((time.perf_counter() - t0) * 1000)
        tries.append(f.attempts)
        digits.append(len(str(abs(f.d1 * f.d2))))
    return {
        "table": table, "row": row, "runs": runs, "seed": seed,
        "tries": tries, "mean_tries": statistics.fmean(tries),
        "digits": digits, "mean_digits": statistics.fmean(digits),
        "mean_ms": round(statistics.fmean(ms), 3), **reference,
    }


def cmd_bench(args, out) -> int:
    rows = TABLE1 if args.table == 1 else TABLE2
    if args.table not in (1, 2) or args.row not in rows:
        raise UsageError(f"unknown table/row {args.table}/{args.row}")
    if args.runs < 1:
        raise UsageError("--runs must be >= 1")
    out.write(json.dumps(run_bench(args.table, args.row, args.seed, args.runs)) + "\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="polyfact", description="Random factorisations P(n) = d1 * d2.")
    ap.add_argument("--verify", metavar="FILE", help="check a JSON-lines record file and exit")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate factorisations")
    gen.add_argument("kind", choices=("quad", "cubic", "ratio"))
    gen.add_argument("--poly", required=True)
    gen.add_argument("--bits", type=int, default=100, help="size target for |d1 d2| in bits")
    gen.add_argument("--x-bound", type=int, default=DEFAULT_X_BOUND)
    q = gen.add_mutually_exclusive_group()
    q.add_argument("--q-bits", type=int, help="primes Q below 2^B")
    q.add_argument("--q-max", type=int, default=100, help="primes Q up to this bound")
    gen.add_argument("--prime", action="store_true", help="require prime d1 and d2")
    gen.add_argument("--alpha")
    gen.add_argument("--eps", default="1/10000")
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--threads", type=int, default=1)
    gen.add_argument("--max-attempts", type=int, default=1_000_000)
    gen.add_argument("--timing", action="store_true", help="add elapsed_ms to records")

    enum = sub.add_parser("enum", help="factorisations of n^2 + c")
    enum.add_argument("mode", choices=("all", "random"))
    enum.add_argument("--c", type=int, required=True)
    enum.add_argument("--n-max", type=int, default=100)
    enum.add_argument("--check-bruteforce", action="store_true")
    enum.add_argument("--summary-only", action="store_true")
    enum.add_argument("--word-len", type=int, default=4)
    enum.add_argument("--digit-mean", type=float, default=semigroup.DEFAULT_DIGIT_MEAN)
    enum.add_argument("--family-bound", type=int)
    enum.add_argument("--count", type=int, default=1)
    enum.add_argument("--seed", type=int, default=0)

    ver = sub.add_parser("verify", help="check JSON-lines records")
    ver.add_argument("file", nargs="?", default="-")

    bench = sub.add_parser("bench", help="rerun a row of the tries/size tables")
    bench.add_argument("--table", type=int, required=True)
    bench.add_argument("--row", type=int, default=1)
    bench.add_argument("--seed", type=int, default=1)
    bench.add_argument("--runs", type=int, default=5)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.verify is not None:
            args.file = args.verify
            return cmd_verify(args, out)
        if args.command is None:
            raise UsageError("a command is required (gen, enum, verify, bench)")
        if getattr(args, "threads", 1) < 1:
            raise UsageError("--threads must be >= 1")
        handler = {"gen": cmd_gen, "enum": cmd_enum, "verify": cmd_verify, "bench": cmd_bench}
        return handler[args.command](args, out)
    except UsageError as e:
        print(f"polyfact: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
