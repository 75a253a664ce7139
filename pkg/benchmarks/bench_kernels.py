"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 20]
"""
import argparse
import timeit

import numpy as np

from csbss import _pure
from csbss.sensing import generate

try:
    from csbss import _ext
except ImportError:
    _ext = None


def _problem(seed, d, D, k):
    rng = np.random.default_rng(seed)
    phi = np.ascontiguousarray(generate(seed, D, d / D).entries)
    x = np.zeros(D)
    x[rng.choice(D, k, replace=False)] = rng.standard_normal(k)
    return phi, phi @ x


def bench(label, fn, repeat):
    times = timeit.repeat(fn, number=1, repeat=repeat)
    best = min(times)
    print(f"{label:32s} best {1e3 * best:9.3f} ms   median {1e3 * sorted(times)[len(times) // 2]:9.3f} ms")
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)

    backends = [("python", _pure)] + ([("cython", _ext)] if _ext is not None else [])
    if _ext is None:
        print("compiled extension not built; timing the fallback only")

    n = 392 * 784
    print(f"\nsign generation, {n} entries")
    base = {}
    for name, mod in backends:
        base[name] = bench(f"  {name}", lambda: mod.bernoulli_signs(12345, n), args.repeat)

    for d, D, k in ((64, 256, 6), (392, 784, 20), (196, 784, 40)):
        phi, y = _problem(0, d, D, k)
        tol = 1e-9 * np.linalg.norm(y)
        print(f"\nOMP d={d} D={D} k={k}")
        for name, mod in backends:
            base[name, d] = bench(f"  {name}", lambda: mod.omp(phi, y, k, tol), args.repeat)
        if _ext is not None:
            print(f"  speedup {base['python', d] / base['cython', d]:.1f}x")
    if _ext is not None:
        print(f"\nsign speedup {base['python'] / base['cython']:.1f}x")


if __name__ == "__main__":
    main()
