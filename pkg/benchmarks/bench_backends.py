"""Compare the compiled and numpy kernel backends.

Usage::

    python benchmarks/bench_backends.py [--repeat 5] [--sizes 10000 100000 1000000]

Times each public operation once per available backend and prints a table
with the best-of-``repeat`` wall time and the speedup of the compiled
kernels over the fallback.
"""

import argparse
import time

from exact_r2 import (
    FrontShape,
    _backend,
    generate_cloud,
    generate_front,
    hv2d,
    nondominated_filter,
    r2_discrete,
    r2_exact,
    uniform_weights,
)


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def cases(sizes):
    for n in sizes:
        cloud = generate_cloud(n, 1)
        front = nondominated_filter(cloud)
        yield f"filter          N={n:>8}", lambda c=cloud: nondominated_filter(c)
        yield f"r2_exact        N={n:>8}", lambda f=front: r2_exact(f)
        yield f"hv2d            N={n:>8}", lambda f=front: hv2d(f, (4.0, 4.0))
    # a cloud keeps only a few hundred points; a dense front stresses the sweep
    dense = nondominated_filter(generate_front(FrontShape.CONCAVE_CIRCULAR, 1_000_000))
    yield f"r2_exact dense front N={len(dense)}", lambda: r2_exact(dense)
    yield f"hv2d dense front N={len(dense)}", lambda: hv2d(dense, (2.0, 2.0))
    front = nondominated_filter(generate_cloud(100_000, 2))
    weights = uniform_weights(1_000)
    yield f"r2_discrete |W|=1000, |F|={len(front)}", lambda: r2_discrete(front, weights)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--sizes", type=int, nargs="+", default=[10_000, 100_000, 1_000_000])
    args = parser.parse_args()

    names = _backend.available()
    results = {}
    for name in names:
        with _backend.use(name):
            for label, fn in cases(args.sizes):
                results.setdefault(label, {})[name] = best_time(fn, args.repeat)

    header = f"{'operation':<40}" + "".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, row in results.items():
        line = f"{label:<40}" + "".join(f"{row[n] * 1e3:>10.3f}ms" for n in names)
        if len(names) == 2:
            line += f"{row['python'] / row['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
