"""Benchmark the compiled rank kernel against the pure-Python fallback.

Runs the full oracle (row generation + rank) and the raw rank kernel on
representative workloads, once per backend, checking that both give the
same answers.

    python3 benchmarks/bench_rank.py [--full]
"""

import argparse
import random
import time

from qhseries import PresentationKind, PrimeField, QQ, build_presentation, parse_quiver
from qhseries.oracle import graded_quotient_dims
from qhseries.rank import available_backends, sparse_rank

KRON3 = "vertices 2\narrow a 1 2\narrow b 1 2\narrow c 1 2\n"
KRON = "vertices 2\narrow a 1 2\narrow b 1 2\n"


def time_call(fn):
    t0 = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - t0


def oracle_workloads(full: bool):
    k3 = parse_quiver(KRON3)
    kron = parse_quiver(KRON)
    degree = 9 if full else 8
    yield ("3-kronecker mesh, Q, deg %d" % degree,
           build_presentation(PresentationKind.PREPROJECTIVE, k3, field=QQ), degree)
    yield ("3-kronecker mesh, F_5, deg %d" % degree,
           build_presentation(PresentationKind.PREPROJECTIVE, k3, field=PrimeField(5)),
           degree)
    from qhseries import WeightVector

    v = WeightVector.from_values((1, 1), PrimeField(7))
    yield ("3-kronecker qha-z, F_7, deg %d" % degree,
           build_presentation(PresentationKind.QHA_Z, k3, v=v), degree)
    yield ("kronecker qha-z, Q, deg %d" % (degree + 2),
           build_presentation(PresentationKind.QHA_Z, kron,
                              v=WeightVector.from_values((1, 1), QQ)), degree + 2)


def synthetic_rows(nrows, ncols, weight, seed=42):
    rng = random.Random(seed)
    rows = []
    for _ in range(nrows):
        cols = sorted(rng.sample(range(ncols), weight))
        vals = [rng.choice((-2, -1, 1, 2)) for _ in cols]
        rows.append((tuple(cols), tuple(vals)))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="larger instances")
    args = parser.parse_args()

    backends = available_backends()
    if "native" not in backends:
        print("compiled kernel not available; nothing to compare")
        return

    print(f"{'workload':42} {'pure':>9} {'native':>9} {'speedup':>8}")
    for label, pres, degree in oracle_workloads(args.full):
        results = {}
        times = {}
        for backend in ("pure", "native"):
            results[backend], times[backend] = time_call(
                lambda b=backend: graded_quotient_dims(pres, degree, backend=b))
        assert results["pure"] == results["native"], label
        print(f"{label:42} {times['pure']:8.2f}s {times['native']:8.2f}s "
              f"{times['pure'] / times['native']:7.1f}x")

    nrows, ncols, weight = (6000, 4000, 5) if args.full else (3000, 2000, 5)
    for modulus, tag in ((0, "Z"), (5, "F_5")):
        rows = synthetic_rows(nrows, ncols, weight)
        label = f"raw rank {nrows}x{ncols} wt {weight} over {tag}"
        results = {}
        times = {}
        for backend in ("pure", "native"):
            results[backend], times[backend] = time_call(
                lambda b=backend: sparse_rank(rows, ncols, modulus, backend=b))
        assert results["pure"] == results["native"]
        print(f"{label:42} {times['pure']:8.2f}s {times['native']:8.2f}s "
              f"{times['pure'] / times['native']:7.1f}x")


if __name__ == "__main__":
    main()
