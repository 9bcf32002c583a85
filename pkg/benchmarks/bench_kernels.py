"""Time the sphere-maximization kernel under the numba and numpy backends.

    python3 benchmarks/bench_kernels.py --repeat 5
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from conecalc import _kernels
from conecalc.sphere import _as_arrays, start_points
from conecalc.suite import random_form, rng_for

CASES = [(3, 4), (4, 6), (5, 6), (6, 8)]


def bench(backend: str, exps, coeffs, X0, repeat: int) -> tuple[float, np.ndarray]:
    _kernels.ascend(exps, coeffs, X0, backend=backend)  # warm-up, includes jit compile
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        vals, _ = _kernels.ascend(exps, coeffs, X0, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, vals


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--starts", type=int, default=64)
    args = ap.parse_args(argv)
    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    print(f"{'n':>3} {'deg':>4} {'terms':>6} " + " ".join(f"{b:>10}" for b in backends) + "   speedup  max|dv|")
    for n, d in CASES:
        f = random_form(n, d, rng_for(99, n, d))
        exps, coeffs = _as_arrays(f)
        X0 = start_points(n, args.starts)
        times, vals = {}, {}
        for b in backends:
            times[b], vals[b] = bench(b, exps, coeffs, X0, args.repeat)
        row = f"{n:>3} {d:>4} {len(f):>6} " + " ".join(f"{times[b] * 1e3:>8.2f}ms" for b in backends)
        if "numba" in times:
            diff = float(np.max(np.abs(vals["numpy"] - vals["numba"])))
            row += f"   {times['numpy'] / times['numba']:>6.1f}x  {diff:.1e}"
        print(row)


if __name__ == "__main__":
    main()
