"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--search 30,20,20,3]

Times the scaled-integer Weyl product on random operands and the full chain
search, checking along the way that both backends return identical results."""

import argparse
import random
import time

from fracweyl import _core


def random_items(rng, terms, max_x, max_y):
    return [(rng.randint(-max_x, max_x), rng.randint(0, max_y), rng.randint(-9, 9) or 1)
            for _ in range(terms)]


def time_call(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_product(backends, repeat):
    rng = random.Random(7)
    cases = [(random_items(rng, 8, 20, 8), random_items(rng, 8, 20, 8), rng.choice([1, 2, 3, 6]))
             for _ in range(300)]
    rows = {}
    for name, mod in backends.items():
        rows[name] = time_call(lambda: [mod.weyl_product(p, q, l) for p, q, l in cases], repeat)
    return rows


def bench_search(backends, bounds, repeat):
    max_v11, max_rho, max_level, max_len = bounds
    rows = {}
    for name, mod in backends.items():
        def run():
            found, visited = [], 0
            for s in mod.start_nodes(max_v11, max_rho, max_v11):
                f, v = mod.explore(tuple(s), max_rho, max_level, max_v11, max_len, 2)
                found.extend(f)
                visited += v
            return visited, len(found)
        rows[name] = time_call(run, repeat)
    return rows


def show(title, rows):
    print(title)
    base = rows.get("python", (None,))[0]
    for name, (secs, _) in rows.items():
        speed = f"  x{base / secs:.1f}" if base and name != "python" else ""
        print(f"  {name:<7} {secs:8.3f}s{speed}")
    results = [r for _, r in rows.values()]
    print("  results identical:", all(r == results[0] for r in results))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--search", default="30,20,20,3")
    args = ap.parse_args()
    backends = _core.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the Python kernels are timed")
    print("selected backend:", _core.BACKEND)
    show("weyl_product, 300 pairs of 8-term operands", bench_product(backends, args.repeat))
    bounds = tuple(int(v) for v in args.search.split(","))
    show(f"chain search at {bounds}", bench_search(backends, bounds, 1))


if __name__ == "__main__":
    main()
