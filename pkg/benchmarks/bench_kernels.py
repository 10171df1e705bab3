"""Compare the pure-Python and compiled arithmetic kernels.

Times two workloads per backend: batched exact determinants, and the
full projection-constant solve (simplex pivoting dominates the latter).

    python3 benchmarks/bench_kernels.py --seed 3 --dets 200 --solves 8
"""

import argparse
import random
import time
from fractions import Fraction

from linfiso._kernels import available
from linfiso.canonical import subspace_from_annihilator
from linfiso.errors import InvalidBasisError
from linfiso.linalg import Matrix, det
from linfiso.projection import projection_constant


def det_workload(rng, count, size):
    grids = []
    for _ in range(count):
        grids.append(
            Matrix(
                [
                    [
                        Fraction(rng.randint(-30, 30), rng.randint(1, 12))
                        for _ in range(size)
                    ]
                    for _ in range(size)
                ]
            )
        )
    return grids


def solve_workload(rng, count):
    specs = []
    while len(specs) < count:
        ambient = rng.randint(5, 6)
        codim = rng.randint(2, 3)
        rows = [
            [Fraction(rng.randint(-5, 5)) for _ in range(codim)]
            for _ in range(ambient)
        ]
        try:
            specs.append(subspace_from_annihilator(rows))
        except InvalidBasisError:
            continue
    return specs


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=3)
    parser.add_argument("--dets", type=int, default=200, help="determinant count")
    parser.add_argument("--det-size", type=int, default=7)
    parser.add_argument("--solves", type=int, default=8, help="LP solve count")
    args = parser.parse_args()

    backends = available()
    rng = random.Random(args.seed)
    grids = det_workload(rng, args.dets, args.det_size)
    specs = solve_workload(rng, args.solves)

    print(f"backends: {', '.join(backends)}")
    print(
        f"workload: {args.dets} dets of size {args.det_size}, "
        f"{args.solves} projection-constant solves\n"
    )
    print(f"{'backend':<10} {'dets':>10} {'solves':>10}")
    baseline = {}
    for name, module in backends.items():
        t0 = time.perf_counter()
        det_values = [det(g, kernels=module) for g in grids]
        t1 = time.perf_counter()
        constants = [
            projection_constant(s, kernels=module).constant for s in specs
        ]
        t2 = time.perf_counter()
        if baseline:
            assert det_values == baseline["dets"], "backends disagree on dets"
            assert constants == baseline["constants"], (
                "backends disagree on constants"
            )
        else:
            baseline = {"dets": det_values, "constants": constants}
        print(f"{name:<10} {t1 - t0:>9.3f}s {t2 - t1:>9.3f}s")


if __name__ == "__main__":
    main()
