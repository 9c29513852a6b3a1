"""Time the hot kernels under both backends.

Each backend runs in its own interpreter because the choice is made at
import time.  Usage::

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from veronese import kernels
from veronese.code import build_veronese_code, extend_scalars
from veronese.field import field_of_order
from veronese.geometry import conic_census
from veronese.matroid import parity_check_matroid
from veronese.betti import exhaustive_tables
from veronese.oracle import word_weight_distribution, subcode_spectrum

repeat = int(sys.argv[1])
F4 = field_of_order(4)
C4 = build_veronese_code(F4)

def lattice():
    exhaustive_tables(parity_check_matroid(C4))

cases = {
    "conic_census q=7": lambda: conic_census(field_of_order(7)),
    "betti lattice q=4 (2^21 subsets)": lattice,
    "word scan q=2 over F_8": lambda: word_weight_distribution(extend_scalars(build_veronese_code(field_of_order(2)), 3)),
    "word scan q=4 over F_16": lambda: word_weight_distribution(extend_scalars(C4, 2)),
    "subcodes q=4 r=2": lambda: subcode_spectrum(C4, 2),
}
out = {"backend": kernels.BACKEND, "timings": {}}
for name, fn in cases.items():
    fn()  # warm-up (JIT compile, caches)
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    out["timings"][name] = best
print(json.dumps(out))
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    if disable:
        env["VERONESE_DISABLE_NUMBA"] = "1"
    else:
        env.pop("VERONESE_DISABLE_NUMBA", None)
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="also write raw timings here")
    args = ap.parse_args()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    width = max(len(k) for k in fast["timings"])
    print(f"{'case':<{width}}  {fast['backend']:>10}  {slow['backend']:>10}  speedup")
    for name, t in fast["timings"].items():
        s = slow["timings"][name]
        print(f"{name:<{width}}  {t:>9.3f}s  {s:>9.3f}s  {s / t:>6.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"fast": fast, "slow": slow}, fh, indent=2, sort_keys=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
