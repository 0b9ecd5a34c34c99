"""Timing comparison of the compiled kernels against their numpy fallbacks.

Run after installing with the accel extra:

    python3 benchmarks/bench_kernels.py [--repeats 5]

Each kernel is timed on sizes typical for the evaluation pipeline
(R11-like feature grids, 128 projection directions). The compiled path is
warmed up first so compilation time is not counted.
"""

import argparse
import time

import numpy as np

from styleval import _kernels


def bench(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    cases = []

    x = rng.standard_normal((224 * 224, 64))
    v = rng.standard_normal((128, 64))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    cases.append(("direction_moments 50176x64, 128 dirs", "direction_moments", (x, v)))

    labels = rng.integers(0, 8, size=224 * 224)
    cases.append(("segment_moments 50176x64, 8 segments", "segment_moments", (x, labels, 8)))

    coarse = rng.standard_normal((28, 28, 512))
    cases.append(("resample_nearest 28x28x512 -> 224x224", "resample_nearest", (coarse, 224, 224)))

    if not _kernels.HAS_NUMBA:
        print("numba not installed; only the numpy path is available")

    rows = []
    for label, name, call_args in cases:
        numpy_fn = getattr(_kernels, f"{name}_numpy")
        t_numpy = bench(numpy_fn, call_args, args.repeats)
        row = [label, f"{t_numpy * 1e3:9.2f}"]
        if _kernels.HAS_NUMBA:
            numba_fn = getattr(_kernels, f"{name}_numba")
            numba_fn(*call_args)  # warm the compile cache
            t_numba = bench(numba_fn, call_args, args.repeats)
            row += [f"{t_numba * 1e3:9.2f}", f"{t_numpy / t_numba:6.2f}x"]
        rows.append(row)

    header = ["kernel", "numpy ms"] + (["numba ms", "speedup"] if _kernels.HAS_NUMBA else [])
    widths = [max(len(h), max(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for r in rows:
        print("  ".join(v.ljust(w) for v, w in zip(r, widths)))


if __name__ == "__main__":
    main()
