"""Compare the compiled and the pure-Python elimination kernels.

Times the raw integer kernel on random matrices and an end-to-end workload
(the zoo pipeline on the sl2 block) under each backend.

    python3 benchmarks/bench_kernel.py --sizes 20 40 80 --repeat 3
"""

import argparse
import random
import time

from quiverserre.linalg import kernels


def random_rows(n, m, rng, bound=9):
    return [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(n)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_kernel(sizes, repeat, seed):
    rng = random.Random(seed)
    results = []
    for n in sizes:
        rows = random_rows(n, n + 1, rng)
        row = {"size": n}
        for backend in ("python", "compiled"):
            try:
                kernels.use_backend(backend)
            except RuntimeError:
                row[backend] = None
                continue
            row[backend] = best_of(lambda: kernels.rref_integer([r[:] for r in rows], n + 1), repeat)
        results.append(row)
    return results


def bench_pipeline(name, repeat):
    from quiverserre.zoo import pipeline_report, zoo_get

    row = {"size": name}
    for backend in ("python", "compiled"):
        try:
            kernels.use_backend(backend)
        except RuntimeError:
            row[backend] = None
            continue
        # fresh entry each time so cached algebra data does not hide the kernel
        row[backend] = best_of(lambda: pipeline_report(zoo_get(name)), repeat)
    return row


def fmt(t):
    return "n/a" if t is None else f"{t * 1000:9.2f} ms"


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40, 80])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pipeline", default="sl2-block", help="zoo entry for the end-to-end timing")
    args = p.parse_args(argv)
    original = kernels.BACKEND
    try:
        rows = bench_kernel(args.sizes, args.repeat, args.seed) + [bench_pipeline(args.pipeline, args.repeat)]
    finally:
        kernels.use_backend(original)
    print(f"{'workload':>12} {'python':>12} {'compiled':>12} {'speedup':>8}")
    for r in rows:
        py, cc = r["python"], r["compiled"]
        speed = f"{py / cc:7.1f}x" if py and cc else "     n/a"
        print(f"{str(r['size']):>12} {fmt(py):>12} {fmt(cc):>12} {speed}")


if __name__ == "__main__":
    main()
