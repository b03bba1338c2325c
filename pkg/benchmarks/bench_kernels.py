"""Time each kernel under the compiled and the pure-Python implementation.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one JSON line per (kernel, implementation) with the best time in ms,
plus the speedup of compiled over Python when both are available.
"""

import argparse
import json
import random
import timeit

from polyfact import _kernels_py, kernels


def workloads():
    rng = random.Random(1)
    odd64 = [rng.getrandbits(64) | 1 for _ in range(2000)]
    return {
        "mr_u64": lambda k: [k.mr_u64(n) for n in odd64],
        "reduced_triples": lambda k: [k.reduced_triples(c) for c in range(1, 400)],
        "unpeel_tree": lambda k: k.unpeel_tree(0, 1, 1, 20_000),
        "word_search": lambda k: [k.word_search((1, 2, 3, 4), (4, 3, 2, 1), q, 0, 1 << 22)
                                  for q in (3, 5, 7, 11)],
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    impls = kernels.available()
    for name, work in workloads().items():
        best = {}
        for k in impls:
            best[k.NAME] = min(timeit.repeat(lambda: work(k), number=1, repeat=args.repeat)) * 1000
            # results must agree before a timing means anything
            assert sorted(work(k)) == sorted(work(_kernels_py))
        row = {"kernel": name, **{f"{impl}_ms": round(ms, 3) for impl, ms in best.items()}}
        if "compiled" in best:
            row["speedup"] = round(best["python"] / best["compiled"], 1)
        print(json.dumps(row))


if __name__ == "__main__":
    main()
