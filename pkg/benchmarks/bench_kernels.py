"""Compare the numba and numpy enumeration kernels.

    python benchmarks/bench_kernels.py [--size 2000] [--repeat 3]

Both backends are called directly, so the PILLAI_FF_DISABLE_NUMBA flag does not
matter here. Outputs are checked for equality before timings are printed.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from pillai_ff import _accel
from pillai_ff.fingerprint import SOLVER_PRIME as P


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _same(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return np.array_equal(a, b)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=2000, help="enumeration limit B")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _accel.numba_kernels is None:
        raise SystemExit("numba is not importable; nothing to compare")

    rng = np.random.default_rng(0)
    B = args.size
    coef = rng.integers(1, P, size=(2, 3), dtype=np.int64)
    root = rng.integers(2, P, size=(2, 3), dtype=np.int64)
    g_tab = _accel.numpy_kernels.power_sum_table(coef, root, B, P)
    h_tab = _accel.numpy_kernels.power_sum_table(coef[:, :2], root[:, :2], B, P)
    target = (g_tab[:, 7] - h_tab[:, 3]) % P
    vg = rng.integers(-3, 4, size=6, dtype=np.int64)
    vd = rng.integers(-3, 4, size=6, dtype=np.int64)
    weights = rng.integers(1, 4, size=6, dtype=np.int64)

    cases = {
        "power_sum_table": lambda k: k.power_sum_table(coef, root, B, P),
        "match_grid": lambda k: k.match_grid(g_tab, h_tab, target, P),
        "difference_keys": lambda k: k.difference_keys(g_tab, h_tab, P),
        "quotient_heights": lambda k: k.quotient_heights(vg, vd, weights, B // 4, B // 4),
    }
    # compile outside the timed region
    for fn in cases.values():
        fn(_accel.numba_kernels)

    print(f"B = {B}, best of {args.repeat}")
    print(f"{'kernel':<18} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for name, fn in cases.items():
        t_np, out_np = _best(lambda: fn(_accel.numpy_kernels), args.repeat)
        t_nb, out_nb = _best(lambda: fn(_accel.numba_kernels), args.repeat)
        if not _same(out_np, out_nb):
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<18} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
