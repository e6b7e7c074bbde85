"""Time the numba and numpy backends of the moment kernel against each other.

    python3 benchmarks/bench_kernels.py --repeat 5

Both backends must return identical valuations; the script exits 1 otherwise.
"""

import argparse
import statistics
import sys
import time

import numpy as np

from padic_stirling import kernels

CASES = [
    # (p, k, period, m_max, j_lo, j_hi)
    (2, 10**6 + 3, 0, 0, 20, 90),
    (2, 2**20 * 7 + 27, 2**12, 6, 28, 90),
    (3, 5 * 3**9 + 40, 0, 0, 41, 110),
    (3, 2 * 3**7 + 40, 2 * 3**7, 4, 41, 110),
    (5, 123456789, 4 * 5**3, 3, 10, 200),
]


def timed(fn, repeat):
    fn()  # warm-up (and jit compile)
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not kernels.HAVE_NUMBA:
        print("numba not importable; only the numpy path can run")
    print(f"{'case':<44} {'numpy ms':>10} {'numba ms':>10} {'ratio':>7}")
    ok = True
    for case in CASES:
        t_np, v_np = timed(lambda: kernels.moment_valuations(*case, use_jit=False), args.repeat)
        if kernels.HAVE_NUMBA:
            t_nb, v_nb = timed(lambda: kernels.moment_valuations(*case, use_jit=True), args.repeat)
            same = np.array_equal(v_np, v_nb)
            ok &= same
            ratio = f"{t_np / t_nb:7.1f}" if t_nb else "    inf"
            print(f"{str(case):<44} {t_np * 1e3:10.2f} {t_nb * 1e3:10.2f} {ratio}{'' if same else '  MISMATCH'}")
        else:
            print(f"{str(case):<44} {t_np * 1e3:10.2f} {'-':>10}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
