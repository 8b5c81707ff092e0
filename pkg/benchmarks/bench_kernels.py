"""Time the compiled kernel against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--length N] [--repeat R]

Workloads: a_{w,shape} for every canonical w of length N and every shape
(counting only), the same with full tableau lists, and the unconstrained
strict fillings of (4,3,1,1) over 1..8 used by the fault-injection check.
"""

import argparse
import time

from egstat import _kernels_py
from egstat.eg import _kernel_args
from egstat.perm import enumerate_length_n
from egstat.tableaux import partitions_of

try:
    from egstat import _kernels as compiled
except ImportError:
    compiled = None


def workloads(length):
    tasks = [
        _kernel_args(shape, w, None, True)[:4]
        for w in enumerate_length_n(length)
        for shape in partitions_of(length)
    ]
    free = _kernel_args((4, 3, 1, 1), (), range(1, 9), False)[:4]
    return {
        f"count, length {length} ({len(tasks)} pairs)": ("eg_count", tasks),
        f"list, length {length}": ("eg_fillings", tasks),
        "strict fillings (4,3,1,1) over 1..8": ("eg_fillings", [free]),
    }


def best_of(fn, tasks, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for args in tasks:
            fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--length", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if compiled is not None:
        backends.append(("cython", compiled))
    else:
        print("compiled kernel not built; timing the fallback only")

    print(f"{'workload':<44}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, (fname, tasks) in workloads(args.length).items():
        times = [best_of(getattr(mod, fname), tasks, args.repeat) for _, mod in backends]
        speed = f"{times[0] / times[1]:>9.1f}x" if len(times) == 2 else ""
        print(f"{label:<44}" + "".join(f"{t:>11.3f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
