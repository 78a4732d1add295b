"""Compare the compiled and pure-Python word kernels.

Run:  python3 benchmarks/bench_kernel.py
"""

import random
import time

from hyperlef.braid import _pure

try:
    from hyperlef.braid import _speedups
except ImportError:
    _speedups = None


def make_workload(seed=7, words=2000, max_len=400):
    rng = random.Random(seed)
    alpha = [x for x in range(-5, 6) if x]
    out = []
    for _ in range(words):
        w = [rng.choice(alpha) for _ in range(rng.randrange(1, max_len))]
        out.append(w)
    return out


def run(kernel, workload, reps=5):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        acc = []
        for w in workload:
            acc = kernel.reduce_concat([acc, w, [-x for x in reversed(w)]])
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    workload = make_workload()
    t_pure = run(_pure, workload)
    print(f"pure:     {t_pure * 1000:8.1f} ms")
    if _speedups is None:
        print("compiled: not built")
        return
    # sanity: identical outputs
    sample = workload[:50]
    assert _pure.reduce_concat(sample) == _speedups.reduce_concat(sample)
    t_fast = run(_speedups, workload)
    print(f"compiled: {t_fast * 1000:8.1f} ms   ({t_pure / t_fast:.1f}x)")


if __name__ == "__main__":
    main()
