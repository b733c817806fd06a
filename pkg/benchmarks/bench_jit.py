"""Compare the compiled kernels with the interpreted fallback.

Each mode runs in its own interpreter, because the choice is made at import
time from ``BUBBLECTL_DISABLE_JIT``::

    python3 benchmarks/bench_jit.py [--cycles 5] [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

CHILD = r"""
import json, sys, time
from bubblectl import JIT_ENABLED
from bubblectl.integrator import integrate_with_mean
from bubblectl.physics import AcousticField, PhysicalParams, SimState

cycles, repeat = float(sys.argv[1]), int(sys.argv[2])
p = PhysicalParams()
fld = AcousticField(PA0=0.4e5, PA1=0.1e5)
s0 = SimState(R=p.R0, x=0.1 * fld.lambda0)
t0 = time.perf_counter()
integrate_with_mean(s0, fld, p, 1 / fld.f0)  # compile / warm up
warm = time.perf_counter() - t0
best = float("inf")
for _ in range(repeat):
    t0 = time.perf_counter()
    _, v, _ = integrate_with_mean(s0, fld, p, cycles / fld.f0)
    best = min(best, time.perf_counter() - t0)
print(json.dumps({"jit": JIT_ENABLED, "warmup_s": warm, "best_s": best, "mean_xdot": v}))
"""


def run(disable, cycles, repeat):
    env = dict(os.environ, BUBBLECTL_DISABLE_JIT="1" if disable else "0")
    out = subprocess.run([sys.executable, "-c", CHILD, str(cycles), str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cycles", type=float, default=5.0)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast = run(False, args.cycles, args.repeat)
    slow = run(True, args.cycles, args.repeat)
    for name, r in (("numba", fast), ("python", slow)):
        print(f"{name:>7}: jit={r['jit']!s:5} warm-up {r['warmup_s']:8.3f} s  "
              f"{args.cycles:g} cycles {r['best_s']:9.4f} s  mean xdot {r['mean_xdot']:.12e}")
    if fast["jit"]:
        print(f"speed-up {slow['best_s'] / fast['best_s']:.1f}x, "
              f"relative difference {abs(fast['mean_xdot'] / slow['mean_xdot'] - 1):.1e}")
    else:
        print("numba is not installed; both runs used the fallback")


if __name__ == "__main__":
    main()
