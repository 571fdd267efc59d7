"""Side-by-side timing of the pure and compiled kernels.

Runs the same seeded workload against both backends in this process and
prints median nanoseconds per operation for each.  Build the compiled
kernel first (tools/build_kernel.py) or only the pure column appears.

Usage: python tools/compare_backends.py [--ops N]
"""

import argparse
import time

from cadeque.backend import available_backends, load


def _median(xs):
    xs = sorted(xs)
    return xs[len(xs) // 2]


def _bench_ns(ns_mod, op, reps=30000):
    cq = ns_mod.cadeque
    d = cq.empty()
    for i in range(1024):
        d = cq.inject(d, i)
    for _ in range(4):
        d = cq.concat(d, d)
    samples = []
    n = 200
    rounds = max(3, reps // n)
    for _ in range(rounds):
        if op == "push":
            t0 = time.perf_counter_ns()
            for _ in range(n):
                cq.push(0, d)
            dt = time.perf_counter_ns() - t0
        elif op == "inject":
            t0 = time.perf_counter_ns()
            for _ in range(n):
                cq.inject(d, 0)
            dt = time.perf_counter_ns() - t0
        elif op == "pop":
            t0 = time.perf_counter_ns()
            for _ in range(n):
                cq.pop(d)
            dt = time.perf_counter_ns() - t0
        elif op == "eject":
            t0 = time.perf_counter_ns()
            for _ in range(n):
                cq.eject(d)
            dt = time.perf_counter_ns() - t0
        else:
            t0 = time.perf_counter_ns()
            for _ in range(n):
                cq.concat(d, d)
            dt = time.perf_counter_ns() - t0
        samples.append(dt / n)
    return _median(samples)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--ops", type=int, default=30000, help="calls per op per backend")
    args = parser.parse_args()

    names = available_backends()
    cols = {name: {} for name in names}
    for name in names:
        ns_mod = load(name)
        for op in ("push", "pop", "inject", "eject", "concat"):
            cols[name][op] = _bench_ns(ns_mod, op, args.ops)

    print("catenable deque, 16Ki elements, median ns/op")
    header = "op".ljust(8) + "".join(n.rjust(12) for n in names)
    if len(names) == 2:
        header += "speedup".rjust(10)
    print(header)
    for op in ("push", "pop", "inject", "eject", "concat"):
        row = op.ljust(8) + "".join(("%.0f" % cols[n][op]).rjust(12) for n in names)
        if len(names) == 2:
            row += ("%.2fx" % (cols[names[0]][op] / cols[names[1]][op])).rjust(10)
        print(row)
    if "compiled" not in names:
        print("\n(compiled kernel not built; run: python tools/build_kernel.py)")


if __name__ == "__main__":
    main()
