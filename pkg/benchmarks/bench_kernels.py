"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the same workloads twice: once in-process (numba path, unless the
current process already has it disabled) and once in a subprocess with
EDGEIDEALS_DISABLE_NUMBA=1.  Sizes are kept small enough that the
interpreted path finishes in seconds; the compiled path is reported with
and without its one-off JIT warm-up.

Usage: python3 benchmarks/bench_kernels.py
"""

import os
import subprocess
import sys
import time

WORKLOAD = r"""
import time
import edgeideals.kernels as K
from edgeideals.survey import enumerate_connected

mode = "fallback" if not K.USE_NUMBA else "numba"

t0 = time.time()
K.get_tables(5, 2)
warm = time.time() - t0

graphs = list(enumerate_connected(5))
t0 = time.time()
for g in graphs:
    K.graph_profile(g)
profile_t = time.time() - t0

t0 = time.time()
K.survey_scan(5, 2, True)
scan_t = time.time() - t0

print(f"{mode}: table-build(n=5) {warm:8.3f}s   "
      f"profile x{len(graphs)} {profile_t:8.3f}s   scan(n=5) {scan_t:8.3f}s")
"""


def run(disable_numba: bool) -> None:
    env = dict(
        os.environ,
        EDGEIDEALS_DISABLE_NUMBA="1" if disable_numba else "",
        EDGEIDEALS_CACHE_DIR="",  # measure real table builds, not disk hits
    )
    subprocess.run([sys.executable, "-c", WORKLOAD], env=env, check=True)


def main() -> None:
    print("warm-up pass (includes JIT compilation):", flush=True)
    t0 = time.time()
    run(disable_numba=False)
    print(f"  total wall time {time.time() - t0:.1f}s", flush=True)
    print("compiled pass (functions cached on disk by numba):", flush=True)
    run(disable_numba=False)
    print("interpreted fallback pass:", flush=True)
    run(disable_numba=True)


if __name__ == "__main__":
    main()
