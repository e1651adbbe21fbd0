"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Kernel timings call both modules directly; the end-to-end timings run the
CLI in a subprocess per backend, since the backend is bound at import.
"""

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from fqsums import _pykernels, kernels
from fqsums.field import field_of_order


def kernel_cases(q, rng):
    F = field_of_order(q)
    n = 64
    a = [rng.randrange(q) for _ in range(n)]
    b = [rng.randrange(1, q)] + [rng.randrange(q) for _ in range(n - 1)]
    f = [rng.randrange(q) for _ in range(12)] + [1]
    return F, {
        "series_mul": lambda m, c: m.series_mul(c, a, b, n),
        "series_div": lambda m, c: m.series_div(c, a, b, n),
        "series_pow": lambda m, c: m.series_pow(c, a, 7, n),
        "is_irreducible(deg 12)": lambda m, c: m.is_irreducible(c, f),
        "poly_gcd": lambda m, c: m.poly_gcd(c, a, b),
    }


def bench_kernels(repeat):
    import fqsums._ckernels as ck

    rng = random.Random(0)
    print(f"{'q':>4} {'kernel':<24} {'python us':>10} {'cython us':>10} {'speedup':>8}")
    for q in (2, 3, 9, 27):
        F, cases = kernel_cases(q, rng)
        ctxs = {"python": (_pykernels, kernels.make_ctx(F, _pykernels)), "cython": (ck, kernels.make_ctx(F, ck))}
        for name, fn in cases.items():
            res = {}
            for backend, (mod, ctx) in ctxs.items():
                t = timeit.Timer(lambda: fn(mod, ctx))
                loops, _ = t.autorange()
                res[backend] = min(t.repeat(repeat, loops)) / loops * 1e6
            print(f"{q:>4} {name:<24} {res['python']:>10.1f} {res['cython']:>10.1f} {res['python'] / res['cython']:>7.1f}x")


END_TO_END = [
    ["sum", "--q", "2", "--k", "1", "--max-degree", "16"],
    ["verify", "--q", "2", "--k", "9", "--max-degree", "12"],
    ["verify", "--q", "9", "--k", "32", "--max-degree", "4"],
]


def bench_end_to_end():
    print(f"\n{'command':<48} {'python s':>9} {'cython s':>9}")
    for argv in END_TO_END:
        times = {}
        for backend in ("python", "cython"):
            env = dict(os.environ, FQSUMS_BACKEND=backend)
            t0 = time.perf_counter()
            subprocess.run([sys.executable, "-m", "fqsums", *argv], env=env, check=True, capture_output=True)
            times[backend] = time.perf_counter() - t0
        print(f"{' '.join(argv):<48} {times['python']:>9.2f} {times['cython']:>9.2f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()
    if "cython" not in kernels.available_backends():
        sys.exit("compiled kernels are not built; run pip install -e . --no-build-isolation")
    bench_kernels(args.repeat)
    if not args.skip_end_to_end:
        bench_end_to_end()


if __name__ == "__main__":
    main()
