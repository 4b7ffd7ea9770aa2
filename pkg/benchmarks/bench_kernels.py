"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Each workload runs on both backends with identical inputs; results are
checked equal before timings are reported.
"""
import argparse
import json
import random
import sys
import timeit

from projconf import _pykernels as py
from projconf.sampling import sample

try:
    from projconf import _ckernels as cy
except ImportError:
    cy = None


def _vectors(bits, count, seed=0):
    rng = random.Random(seed)
    lim = 2**bits
    return [tuple(rng.randint(-lim, lim) for _ in range(3)) for _ in range(count)]


def workloads():
    small = _vectors(20, 2000)
    mid = _vectors(50, 2000, 1)
    screen = sample("inscribed", 12, ("bench", 1), 100, ordered=False).coords
    full = sample("inscribed", 12, ("bench", 2), 10**6, ordered=False).coords

    def pairs(vs):
        return lambda K: [K.cross(a, b) for a, b in zip(vs, vs[1:])]

    return {
        "cross, 20-bit": pairs(small),
        "cross, 50-bit (int128 path)": pairs(mid),
        "T_3434343 on 12-gon, |t| <= 100": lambda K: K.apply_letters(screen, (3, 4, 3, 4, 3, 4, 3)),
        "T_3434343 on 12-gon, |t| <= 1e6": lambda K: K.apply_letters(full, (3, 4, 3, 4, 3, 4, 3)),
        "T_21212 on 8-gon, |t| <= 100": lambda K: K.apply_letters(screen[:8], (2, 1, 2, 1, 2)),
    }


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=20)
    ap.add_argument("--json")
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled backend not built; only timing the pure-Python kernels", file=sys.stderr)
    rows = []
    for name, fn in workloads().items():
        if cy is not None and fn(py) != fn(cy):
            raise SystemExit(f"backends disagree on {name!r}")
        t_py = min(timeit.repeat(lambda: fn(py), number=args.number, repeat=args.repeat)) / args.number
        t_cy = None
        if cy is not None:
            t_cy = min(timeit.repeat(lambda: fn(cy), number=args.number, repeat=args.repeat)) / args.number
        rows.append({"workload": name, "python_s": t_py, "cython_s": t_cy,
                     "speedup": t_py / t_cy if t_cy else None})
    width = max(len(r["workload"]) for r in rows)
    print(f"{'workload':<{width}}  {'python':>10}  {'cython':>10}  speedup")
    for r in rows:
        cyt = f"{r['cython_s'] * 1e3:8.3f}ms" if r["cython_s"] else "       n/a"
        sp = f"{r['speedup']:6.2f}x" if r["speedup"] else "   n/a"
        print(f"{r['workload']:<{width}}  {r['python_s'] * 1e3:8.3f}ms  {cyt}  {sp}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
