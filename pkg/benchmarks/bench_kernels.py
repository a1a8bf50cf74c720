"""Compare compiled and pure-Python kernels on the hot loops.

    python benchmarks/bench_kernels.py [--m 6] [--n 11] [--repeat 3]

Each workload is timed on both kernel modules; the best of ``--repeat`` runs
is reported together with the speedup of the compiled version.
"""

import argparse
import time

from mnwords import _kernels_py

try:
    from mnwords import _kernels as _compiled
except ImportError:
    _compiled = None


def workloads(m, n):
    def enum_words(k):
        for _ in k.iter_words(m, n):
            pass

    def enum_tiles(k):
        for _ in k.iter_tiles(m, n):
            pass

    words = list(_kernels_py.iter_words(m, n))
    tiles = list(_kernels_py.iter_tiles(m, n))

    def validate(k):
        scan = k.scan_word
        for w in words:
            scan(m, w)

    def forward(k):
        f = k.word_to_tiles
        for w in words:
            f(m, w)

    def backward(k):
        f = k.tiles_to_word
        for t in tiles:
            f(m, t)

    def roundtrip(k):
        fw, bw = k.word_to_tiles, k.tiles_to_word
        for w in k.iter_words(m, n):
            bw(m, fw(m, w))

    return {
        "enumerate words": enum_words,
        "enumerate tilings": enum_tiles,
        "validate words": validate,
        "xi": forward,
        "xi_inverse": backward,
        "enumerate+roundtrip": roundtrip,
    }, len(words)


def best_of(fn, kernels, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(kernels)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m", type=int, default=6)
    parser.add_argument("--n", type=int, default=11)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    jobs, size = workloads(args.m, args.n)
    print(f"|W({args.m},{args.n})| = {size}")
    print(f"{'workload':<22}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for name, fn in jobs.items():
        py = best_of(fn, _kernels_py, args.repeat)
        if _compiled is None:
            print(f"{name:<22}{py:>12.4f}{'n/a':>12}{'':>10}")
            continue
        c = best_of(fn, _compiled, args.repeat)
        print(f"{name:<22}{py:>12.4f}{c:>12.4f}{py / c:>9.1f}x")


if __name__ == "__main__":
    main()
