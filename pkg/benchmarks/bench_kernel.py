"""Compare the compiled kernel with the pure-Python fallback.

    python3 benchmarks/bench_kernel.py [--k 2 --l 2 --radius 12]

Times the raw kernel calls on every vertex of a ball, then a full
``verify-ponzi`` run under each backend in a fresh interpreter.
"""

import argparse
import os
import subprocess
import sys
import timeit

from thompsonf import _kernel_py
from thompsonf.cayley import ball, gamma

try:
    from thompsonf import _kernel as _kernel_c
except ImportError:
    _kernel_c = None


def kernel_workload(mod, vertices, k, l):
    clear = getattr(mod.survivor_profile, "cache_clear", None)

    def run():
        # the fallback memoizes per code; start cold so both do the same work
        if clear:
            clear()
        for p in vertices:
            mod.phi_carets(p.codes, p.pointer, l)
            mod.min_position(p.codes, k, l)

    return run


def end_to_end(env_extra, k, l, radius):
    env = dict(os.environ, **env_extra)
    cmd = [sys.executable, "-m", "thompsonf", "verify-ponzi", "--k", str(k), "--l", str(l), "--radius", str(radius)]
    timer = timeit.Timer(lambda: subprocess.run(cmd, env=env, check=True, capture_output=True))
    return min(timer.repeat(repeat=3, number=1))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--l", type=int, default=2)
    ap.add_argument("--radius", type=int, default=12)
    args = ap.parse_args()

    vertices = ball(gamma(args.k, args.l), args.radius).vertices
    print(f"Gamma(k={args.k}, l={args.l}) radius {args.radius}: {len(vertices)} vertices")
    backends = [("python", _kernel_py)]
    if _kernel_c is not None:
        backends.append(("cython", _kernel_c))
    else:
        print("compiled kernel not built; only the fallback is timed")

    results = {}
    for name, mod in backends:
        t = min(timeit.repeat(kernel_workload(mod, vertices, args.k, args.l), repeat=5, number=1))
        results[name] = t
        print(f"kernel calls  {name:7s} {t * 1e3:9.1f} ms")
    if len(results) == 2:
        print(f"kernel speedup       {results['python'] / results['cython']:.1f}x")

    py = end_to_end({"THOMPSONF_PURE": "1"}, args.k, args.l, args.radius)
    print(f"verify-ponzi  python  {py * 1e3:9.1f} ms")
    if _kernel_c is not None:
        cy = end_to_end({}, args.k, args.l, args.radius)
        print(f"verify-ponzi  cython  {cy * 1e3:9.1f} ms")
        print(f"end-to-end speedup   {py / cy:.2f}x")


if __name__ == "__main__":
    main()
