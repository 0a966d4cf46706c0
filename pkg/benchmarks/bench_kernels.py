"""Time the compiled kernels against the numpy/scipy fallback.

    python benchmarks/bench_kernels.py [--order 512] [--repeat 20]
"""

import argparse
import timeit

import numpy as np

from bohrlab import _kernels_py

try:
    from bohrlab import _kernels
except ImportError:
    _kernels = None


def cases(order, rng):
    coeffs = np.ascontiguousarray(rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1))
    coeffs /= np.abs(coeffs).sum()
    w = 0.4 + 0.3j
    return {
        "taylor_shift(n_terms=64)": lambda mod: mod.taylor_shift(coeffs, w, 64),
        "taylor_shift(n_terms=T)": lambda mod: mod.taylor_shift(coeffs, w, order + 1),
        "blaschke_factor": lambda mod: mod.blaschke_factor(coeffs, 0.5 - 0.2j),
        "horner": lambda mod: mod.horner(coeffs, w),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--order", type=int, default=512)
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()
    rng = np.random.default_rng(0)
    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("cython", _kernels))
    else:
        print("compiled extension not built; timing the fallback only")
    print(f"order T = {args.order}, best of {args.repeat}")
    print(f"{'kernel':28s}" + "".join(f"{name:>14s}" for name, _ in backends) + "   speedup")
    for label, fn in cases(args.order, rng).items():
        times = []
        for _, mod in backends:
            timer = timeit.Timer(lambda: fn(mod))
            number, _ = timer.autorange()
            times.append(min(timer.repeat(repeat=args.repeat, number=number)) / number)
        speed = f"{times[0] / times[1]:9.1f}x" if len(times) == 2 else ""
        print(f"{label:28s}" + "".join(f"{t * 1e6:12.1f}us" for t in times) + speed)
        if len(backends) == 2:
            ref, new = fn(backends[0][1]), fn(backends[1][1])
            np.testing.assert_allclose(new, ref, rtol=1e-9, atol=1e-12)


if __name__ == "__main__":
    main()
