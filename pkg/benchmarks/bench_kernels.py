"""Time the compiled and pure-Python enumeration kernels on identical inputs.

    python benchmarks/bench_kernels.py [--repeat 3]

Every case is run on both backends and the outputs are compared before the
timings are reported.
"""

import argparse
import time

from discgames import _kernels

CASES = [
    ("order_scan N=9 W=1", "order_scan", (9, 1)),
    ("order_scan N=6 W=2", "order_scan", (6, 2)),
    ("gap_screen N=9 W=1 q=8", "gap_screen", (9, 1, 8)),
    ("gap_screen N=6 W=2 q=8", "gap_screen", (6, 2, 8)),
    ("pigeonhole N=20 k=2", "pigeonhole_collision", (20, 2)),
]


def best_of(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _kernels.backends()
    if "cython" not in backends:
        print("compiled kernels are not built; only the Python backend is available")
    names = sorted(backends)
    print(f"{'case':28s}" + "".join(f"{n:>12s}" for n in names) + "   speedup")
    for label, fname, fargs in CASES:
        times, outs = {}, {}
        for n in names:
            times[n], outs[n] = best_of(getattr(backends[n], fname), fargs, args.repeat)
        if len({repr(o) for o in outs.values()}) != 1:
            raise SystemExit(f"backends disagree on {label}")
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "       -"
        print(f"{label:28s}" + "".join(f"{times[n] * 1000:10.1f}ms" for n in names) + "  " + speed)


if __name__ == "__main__":
    main()
