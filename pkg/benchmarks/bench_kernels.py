"""Compare the compiled and pure-Python polynomial kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--prime P]

Both backends are imported directly, so the comparison does not depend on
SCROLLSMITH_PURE.  Inputs are fixed by a seed and each workload is checked
to give identical results on both sides before it is timed.
"""

import argparse
import random
import sys
import timeit

from scrollsmith._kernels import _pykernel as py

try:
    from scrollsmith._kernels import _ckernel as cy
except ImportError:
    cy = None


def rand_poly(rng, n, p):
    a = [rng.randrange(p) for _ in range(n)]
    a[-1] = a[-1] or 1
    return a


def workloads(p, rng):
    a, b = rand_poly(rng, 40, p), rand_poly(rng, 25, p)
    g = rand_poly(rng, 6, p)
    m = rand_poly(rng, 9, p)
    # a small Macaulay-style matrix with polynomial entries in s
    rows = [[rand_poly(rng, rng.randint(1, 4), p) for _ in range(8)] for _ in range(14)]
    return {
        "mul 40x25": lambda k: k.poly_mul(a, b, p),
        "divmod 40/25": lambda k: k.poly_divmod(a, b, p),
        "gcd (planted deg 5)": lambda k: k.poly_gcd(k.poly_mul(a, g, p), k.poly_mul(b, g, p), p),
        "powmod x^p mod deg 8": lambda k: k.poly_powmod([0, 1], p, m, p),
        "eval deg 39": lambda k: k.poly_eval(a, 12345 % p, p),
        "pivot_product 14x8": lambda k: k.pivot_product(rows, p),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--prime", type=int, default=10007)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`")
        return 1

    rng = random.Random(args.seed)
    print(f"{'kernel':<24}{'python us':>12}{'cython us':>12}{'speedup':>10}")
    for name, fn in workloads(args.prime, rng).items():
        if fn(py) != fn(cy):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        t = {}
        for label, mod in (("py", py), ("cy", cy)):
            timer = timeit.Timer(lambda: fn(mod))
            n, _ = timer.autorange()
            t[label] = min(timer.repeat(args.repeat, n)) / n * 1e6
        print(f"{name:<24}{t['py']:>12.1f}{t['cy']:>12.1f}{t['py'] / t['cy']:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
