"""Throughput comparison of the compiled and pure-Python row-reduction
kernels, plus an end-to-end Lie-ideal enumeration timing per backend.

Run:  python3 benchmarks/bench_kernels.py
"""

import importlib
import time

import numpy as np

from lieideals import _rowreduce_py

try:
    from lieideals import _rowreduce_c
except ImportError:
    _rowreduce_c = None


def bench_rref(mod, mats, p, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for mat in mats:
            mod.rref(mat, p)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_enumeration(backend_name):
    """End-to-end: enumerate the Lie-ideal lattice with one forced backend."""
    import os
    import subprocess
    import sys

    code = (
        "import time; t0=time.perf_counter(); "
        "from lieideals.algebra import matrix_algebra, tensor_product, field_algebra; "
        "from lieideals.enumeration import all_lie_ideals; "
        "r = tensor_product(matrix_algebra(2,2), field_algebra(2,2)); "
        "n = len(all_lie_ideals(r)); "
        "print(f'{n} {time.perf_counter()-t0:.3f}')"
    )
    env = dict(os.environ, LIEIDEALS_KERNEL=backend_name)
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    count, elapsed = out.stdout.split()
    return int(count), float(elapsed)


def main():
    rng = np.random.default_rng(0)
    print(f"{'case':34s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for p, m, n, count in [(2, 8, 8, 2000), (3, 16, 16, 500), (7, 32, 32, 100)]:
        mats = [rng.integers(0, p, size=(m, n), dtype=np.int64) for _ in range(count)]
        t_py = bench_rref(_rowreduce_py, mats, p)
        label = f"rref {m}x{n} GF({p}) x{count}"
        if _rowreduce_c is None:
            print(f"{label:34s} {t_py:9.4f}s {'n/a':>10s}")
            continue
        t_c = bench_rref(_rowreduce_c, mats, p)
        print(f"{label:34s} {t_py:9.4f}s {t_c:9.4f}s {t_py / t_c:7.1f}x")

    print()
    n_py, t_py = bench_enumeration("py")
    line = f"enumerate Lie ideals (dim-8 algebra)"
    if _rowreduce_c is None:
        print(f"{line:34s} {t_py:9.3f}s {'n/a':>10s}")
        return
    n_c, t_c = bench_enumeration("c")
    assert n_py == n_c, "backends disagree on the lattice size"
    print(f"{line:34s} {t_py:9.3f}s {t_c:9.3f}s {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
