"""Compare the compiled and pure-Python membership kernels.

    python benchmarks/bench_membership.py [--repeat N]

Each case queries every point of a box; both backends must agree.
"""
import argparse
import time
from itertools import product

from asg import _kernels_py
from asg.semigroup import Semigroup

try:
    from asg import _kernels as compiled
except ImportError:
    compiled = None

CASES = {
    "2d (3,0),(0,3),(5,2),(2,5)": ([(3, 0), (0, 3), (5, 2), (2, 5)], 60),
    "3d five generators": ([(5, 3, 1), (1, 5, 2), (8, 3, 5), (2, 1, 1), (2, 2, 1)], 24),
    "numerical <11,13,17,19>": ([(11,), (13,), (17,), (19,)], 3000),
}


def queries(gens, side):
    s = Semigroup(gens)
    cuts = [tuple(row) for row in s.basis.adj]
    ordered = sorted(s.generators, key=sum, reverse=True)
    return ordered, cuts, list(product(range(side + 1), repeat=len(gens[0])))


def bench(mod, gens, cuts, points, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [mod.is_combination(gens, p, cuts) for p in points]
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'case':32} {'points':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, (gens, side) in CASES.items():
        ordered, cuts, points = queries(gens, side)
        tp, ref = bench(_kernels_py, ordered, cuts, points, args.repeat)
        if compiled is None:
            print(f"{name:32} {len(points):8d} {tp:10.3f} {'n/a':>10} {'':>8}")
            continue
        tc, got = bench(compiled, ordered, cuts, points, args.repeat)
        assert got == ref, name
        print(f"{name:32} {len(points):8d} {tp:10.3f} {tc:10.3f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
