"""Compiled vs pure-Python eigen kernels.

    python benchmarks/bench_eigen.py [--sizes 8,16,32,64] [--repeat 5]

Times eig_m_symmetric (Jacobi) on S and eig_general (balance, Hessenberg,
Francis QR) on Delta for random balanced graphs, and checks that both
backends return the same spectra.
"""

import argparse
import timeit

from digraph_spectra import laplacian, random_balanced, special_laplacian
from digraph_spectra.eigen import _backend, complex_distance, eig_general, eig_m_symmetric, real_distance


def bench(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="8,16,32,64")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _backend.compiled is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation` with Cython available")
    print(f"{'n':>4} {'solver':<16} {'python ms':>10} {'compiled ms':>12} {'speedup':>8} {'max diff':>9}")
    for n in (int(s) for s in args.sizes.split(",")):
        g = random_balanced(n, n // 2, args.seed, random_measure=True)
        S, D = special_laplacian(g), laplacian(g)
        cases = [
            ("eig_m_symmetric", lambda b: eig_m_symmetric(S, vectors=False, backend=b), real_distance),
            ("eig_general", lambda b: eig_general(D, residual=False, backend=b), complex_distance),
        ]
        for name, run, dist in cases:
            tp = bench(lambda: run("python"), args.repeat)
            tc = bench(lambda: run("compiled"), args.repeat)
            diff = dist(run("python"), run("compiled"))
            print(f"{n:>4} {name:<16} {1e3 * tp:>10.2f} {1e3 * tc:>12.3f} {tp / tc:>7.1f}x {diff:>9.1e}")


if __name__ == "__main__":
    main()
