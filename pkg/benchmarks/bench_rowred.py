"""Benchmark: compiled vs pure-Python row reduction over F_p.

Times both kernels on random dense systems of the shapes the odd-bracket
solver actually produces, checks they agree entry for entry, and prints a
small table.  Run from the repository root:

    python3 benchmarks/bench_rowred.py
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from superbracket import _rowred_pure  # noqa: E402

try:
    from superbracket import _rowred_fast
except ImportError:
    _rowred_fast = None

SHAPES = [
    (60, 30, 5),
    (200, 60, 5),
    (525, 63, 5),  # the largest system in the default sweep
    (525, 63, 7),
    (1000, 120, 7),
]
REPEATS = 3


def time_kernel(kernel, rows, p):
    best = float("inf")
    out = None
    for _ in range(REPEATS):
        data = [row[:] for row in rows]
        t0 = time.perf_counter()
        out = kernel.rref_mod(data, p)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    rng = random.Random(0)
    print(f"{'shape':>14} {'p':>3} {'pure (s)':>10} {'fast (s)':>10} {'speedup':>8}")
    for rows_n, cols_n, p in SHAPES:
        rows = [[rng.randrange(p) for _ in range(cols_n)] for _ in range(rows_n)]
        t_pure, out_pure = time_kernel(_rowred_pure, rows, p)
        if _rowred_fast is None:
            print(f"{rows_n}x{cols_n:>5} {p:>3} {t_pure:>10.4f} {'-':>10} {'-':>8}")
            continue
        t_fast, out_fast = time_kernel(_rowred_fast, rows, p)
        assert out_pure == out_fast, "kernels disagree"
        print(
            f"{rows_n}x{cols_n:>5} {p:>3} {t_pure:>10.4f} {t_fast:>10.4f}"
            f" {t_pure / t_fast:>7.1f}x"
        )
    if _rowred_fast is None:
        print("\ncompiled kernel not built; run: python3 setup.py build_ext --inplace")


if __name__ == "__main__":
    main()
