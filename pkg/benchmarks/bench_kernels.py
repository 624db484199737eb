"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from relaxkit import kernels


def workloads(k):
    rng = random.Random(0)
    small = [rng.getrandbits(60) for _ in range(2000)]
    big = [rng.getrandbits(4096) for _ in range(50)]
    small_bits = [k.bits_of(n) for n in small]
    pairs = [(rng.randrange(10**6), rng.randrange(10**6)) for _ in range(5000)]
    codes = [rng.randrange(10**12) for _ in range(5000)]
    return {
        "bits_of u64 x2000": lambda: [k.bits_of(n) for n in small],
        "bits_of 4096-bit x50": lambda: [k.bits_of(n) for n in big],
        "from_bits u64 x2000": lambda: [k.from_bits(b) for b in small_bits],
        "pair_index x5000": lambda: [k.pair_index(a, b) for a, b in pairs],
        "unpair x5000": lambda: [k.unpair(n) for n in codes],
        "unpair roundtrip 10^5": lambda: k.unpair_roundtrip_failure(10**5),
        "pair grid 300^2": lambda: k.pair_grid_failure(300),
        "order preservation 2^12": lambda: k.order_preservation_failure(2**12),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    names = kernels.available_backends()
    if len(names) < 2:
        print("compiled backend not built; timing the Python kernels only")
    results = {}
    for name in names:
        for label, fn in workloads(kernels.backend(name)).items():
            results.setdefault(label, {})[name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))

    header = f"{'workload':28}" + "".join(f"{n:>12}" for n in names)
    if len(names) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for label, row in results.items():
        line = f"{label:28}" + "".join(f"{row[n] * 1e3:>10.2f}ms" for n in names)
        if len(names) > 1:
            line += f"{row['python'] / row[names[0]]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
