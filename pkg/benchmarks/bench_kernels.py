"""Compare the compiled and pure-Python kernels on representative inputs.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from brieskorn import _pykernels, kernels
from brieskorn.seifert import brieskorn_seifert_data
from brieskorn.semigroup import bound_N


def cases():
    for t in [(2, 3, 101), (5, 7, 11), (7, 11, 13), (11, 13, 17)]:
        sd = brieskorn_seifert_data(t)
        N = bound_N(t)
        tau = np.concatenate(([0], np.cumsum(_pykernels.delta_sequence(sd.a.values, sd.b, sd.e0, 1, 0, N + 1))))
        _, vals = _pykernels.extrema(tau)
        yield t, {
            "scan_triple": lambda m, t=t: m.scan_triple(*t),
            "profile_rank p=1": lambda m, sd=sd, N=N: m.profile_rank(sd.a.values, sd.b, sd.e0, 1, N + 1),
            "profile_rank p=5": lambda m, sd=sd, N=N: m.profile_rank(sd.a.values, sd.b, sd.e0, 5, N // 5 + 1, N // 5),
            "towers": lambda m, v=vals: m.towers(v),
        }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled is None:
        print("compiled extension not available; nothing to compare")
        return
    print(f"{'triple':<14}{'kernel':<20}{'python (ms)':>12}{'cython (ms)':>12}{'speedup':>9}")
    for t, fns in cases():
        for name, fn in fns.items():
            assert name == "towers" or fn(_pykernels) == fn(kernels.compiled)
            py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
            cy = min(timeit.repeat(lambda: fn(kernels.compiled), number=1, repeat=args.repeat))
            print(f"{str(t):<14}{name:<20}{py * 1e3:>12.2f}{cy * 1e3:>12.3f}{py / cy:>8.0f}x")


if __name__ == "__main__":
    main()
