"""Compare the compiled and pure-Python table kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--seed S]

Each row times one kernel on the same inputs for every available backend and
reports the best of ``--repeat`` runs plus the speedup over pure Python.
"""

import argparse
import random
import time

from spanbicat import kernels


def random_table(rng, n, m):
    return tuple(rng.randrange(m) for _ in range(n))


def workloads(rng):
    f, g = random_table(rng, 400, 40), random_table(rng, 400, 40)
    h = random_table(rng, 40, 30)
    perm = list(range(2000))
    rng.shuffle(perm)
    perm = tuple(perm)
    # spans over a 2 x 2 boundary: two_cells are enumerated fiber by fiber
    sl, sr = random_table(rng, 7, 2), random_table(rng, 7, 2)
    tl, tr = sl + random_table(rng, 3, 2), sr + random_table(rng, 3, 2)
    bl, br = random_table(rng, 300, 6), random_table(rng, 300, 6)
    order = list(range(300))
    rng.shuffle(order)
    cl, cr = tuple(bl[i] for i in order), tuple(br[i] for i in order)
    return [
        ("check_table", lambda k: k.check_table(f, 40)),
        ("compose_tables", lambda k: k.compose_tables(f, h)),
        ("pullback_pairs", lambda k: k.pullback_pairs(f, g, 40)),
        ("equalizer_indices", lambda k: k.equalizer_indices(f, g)),
        ("is_injective", lambda k: k.is_injective(perm, 2000)),
        ("invert_bijection", lambda k: k.invert_bijection(perm)),
        ("count_two_cells", lambda k: k.count_two_cells(sl, sr, tl, tr, 2)),
        ("two_cell_tables", lambda k: k.two_cell_tables(sl, sr, tl, tr, 2, -1)),
        ("fiber_bijection", lambda k: k.fiber_bijection(bl, br, cl, cr, 6)),
    ]


def best_time(fn, impl, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(impl)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    impls = kernels.backends()
    names = sorted(impls, key=lambda n: n != "python")
    print(f"{'kernel':<20}" + "".join(f"{n + ' (us)':>16}" for n in names) + f"{'speedup':>10}")
    for label, fn in workloads(random.Random(args.seed)):
        times = {n: best_time(fn, impls[n], args.repeat) for n in names}
        row = f"{label:<20}" + "".join(f"{times[n] * 1e6:>16.1f}" for n in names)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)
    if "cython" not in impls:
        print("compiled kernels unavailable; only the pure-Python backend was timed")


if __name__ == "__main__":
    main()
