"""Compare the compiled and numpy kernel backends.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from lcrdetect import attacks, nncore
from lcrdetect.kernels import _fast, _pure


def cases(rng):
    d = 784
    tg, og = rng.normal(size=d), rng.normal(size=d)
    cand = np.arange(d, dtype=np.int64)
    streams = (rng.random((200, 2000)) < 0.05).astype(np.uint8)
    llr = (np.log(0.045 / 0.055), np.log(0.955 / 0.945), np.log(0.05 / 0.95), np.log(19.0))
    return {
        "best_pair (784 candidates)": lambda k: k.best_pair(tg, og, cand),
        "sprt_scan (200 streams x 2000)": lambda k: [k.sprt_scan(s, *llr) for s in streams],
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    rng = np.random.default_rng(0)
    backends = {"python": _pure}
    if _fast is not None:
        backends["cython"] = _fast
    else:
        print("compiled extension not built; timing the numpy backend only")
    print(f"{'kernel':<32}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}")
    for label, fn in cases(rng).items():
        times = {name: min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat))
                 for name, k in backends.items()}
        speedup = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{label:<32}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times.values()) + f"{speedup:>9.1f}x")

    # end to end: one JSMA attack on a random 784-128-10 network
    import lcrdetect.kernels as kernels
    net = nncore.init_network([784, 128, 10], 1)
    x = rng.uniform(0, 0.3, 784)
    cfg = attacks.AttackConfig("jsma")
    row, saved = {}, kernels._impl
    for name, k in backends.items():
        kernels._impl = k
        row[name] = min(timeit.repeat(lambda: attacks.jsma(net, x, 0, cfg), number=1, repeat=args.repeat))
    kernels._impl = saved
    speedup = row["python"] / row["cython"] if "cython" in row else float("nan")
    print(f"{'jsma attack (784-128-10)':<32}" + "".join(f"{t * 1e3:>10.2f}ms" for t in row.values())
          + f"{speedup:>9.1f}x")


if __name__ == "__main__":
    main()
