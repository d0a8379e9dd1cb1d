"""Compare the compiled and pure-Python integer kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--descents 20000] [--triples 50000]

Workloads: height descent of random E10 vectors (most stop after a few steps,
so call overhead dominates), descent of high real E10 roots (long loops), and
the Jacobi check on random E8 basis triples.  Both backends must agree.
"""
import argparse
import random
import time

from kmlie import kernels
from kmlie.cartan import named_gcm
from kmlie.chevalley import build_algebra


def best_of(repeat, fn):
    times = []
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def high_roots(a, count, steps, rng):
    """Real roots reached from simple roots by random height-increasing reflections."""
    n = len(a)
    out = []
    for _ in range(count):
        v = [0] * n
        v[rng.randrange(n)] = 1
        for _ in range(steps):
            i = rng.randrange(n)
            p = sum(a[i][j] * v[j] for j in range(n))
            if p < 0:
                v[i] -= p
        out.append(v)
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description="kernel backend benchmark")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--descents", type=int, default=20000)
    ap.add_argument("--triples", type=int, default=50000)
    args = ap.parse_args(argv)

    rng = random.Random(0)
    e10 = named_gcm("E10")
    flat = [x for row in e10.entries for x in row]
    vectors = [[rng.randint(0, 8) for _ in range(10)] for _ in range(args.descents)]
    deep = high_roots(e10.entries, args.descents // 10, 60, rng)
    e8 = build_algebra(named_gcm("E8"))
    ptr, idx, val = e8.structure_csr()
    triples = [rng.randrange(e8.dim) for _ in range(3 * args.triples)]

    workloads = {
        f"E10 descent x{args.descents}": lambda: [kernels.descend(flat, 10, v)[0] for v in vectors],
        f"E10 high roots x{len(deep)}": lambda: [kernels.descend(flat, 10, v)[0] for v in deep],
        f"E8 Jacobi x{args.triples}": lambda: kernels.jacobi_failures(ptr, idx, val, e8.dim, triples),
    }
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    for label, fn in workloads.items():
        results, times = {}, {}
        for b in backends:
            with kernels.backend_as(b):
                times[b], results[b] = best_of(args.repeat, fn)
        agree = len({repr(r) for r in results.values()}) == 1
        cells = "  ".join(f"{b} {times[b] * 1000:9.1f} ms" for b in backends)
        speedup = ""
        if "python" in times and len(times) > 1:
            other = next(b for b in backends if b != "python")
            speedup = f"  speedup {times['python'] / times[other]:.1f}x"
        print(f"{label:26s} {cells}{speedup}  {'agree' if agree else 'MISMATCH'}")


if __name__ == "__main__":
    main()
