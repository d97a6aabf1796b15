"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5] [--states 200]

Times the three kernels on their own and the full classification pipeline
(root finding, multiplicity resolution, reconstruction) with each backend
swapped in. Prints one row per workload with the speed-up.
"""

import argparse
import contextlib
import timeit

import numpy as np

from symslocc import kernels, majorana_points, oracle, points_to_dicke
from symslocc.classification import enumerate_configurations


@contextlib.contextmanager
def backend(module):
    saved = (kernels.aberth, kernels.spinor_product, kernels.taylor_shift)
    kernels.aberth = module.aberth
    kernels.spinor_product = module.spinor_product
    kernels.taylor_shift = module.taylor_shift
    try:
        yield
    finally:
        kernels.aberth, kernels.spinor_product, kernels.taylor_shift = saved


def workloads(n_states: int):
    rng = np.random.default_rng(0)
    polys = [rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1) for d in (4, 8, 12) for _ in range(20)]
    spinors = [(rng.normal(size=12) + 1j * rng.normal(size=12), rng.normal(size=12) + 0j) for _ in range(50)]
    states = []
    for i in range(n_states):
        n = 2 + i % 11
        configs = enumerate_configurations(n)
        states.append(oracle.random_state(configs[i % len(configs)], i))

    def run_aberth(mod):
        for c in polys:
            mod.aberth(c, 1000)

    def run_spinor(mod):
        for a, b in spinors:
            mod.spinor_product(a, b)

    def run_taylor(mod):
        for c in polys:
            mod.taylor_shift(c, 0.3 + 0.2j, 4)

    def run_pipeline(mod):
        with backend(mod):
            for s in states:
                points_to_dicke(majorana_points(s))

    return [("aberth (60 polys, deg 4-12)", run_aberth),
            ("spinor_product (50 x 12 factors)", run_spinor),
            ("taylor_shift (60 polys, 5 terms)", run_taylor),
            (f"pipeline ({n_states} states, N 2-12)", run_pipeline)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--states", type=int, default=200)
    args = ap.parse_args()
    mods = kernels.available_backends()
    if "cython" not in mods:
        print("compiled extension not built; only the Python backend is available")
    names = list(mods)
    print(f"{'workload':<36}" + "".join(f"{n + ' (ms)':>14}" for n in names) + f"{'speed-up':>10}")
    for label, fn in workloads(args.states):
        times = {n: 1e3 * min(timeit.repeat(lambda: fn(mods[n]), number=1, repeat=args.repeat)) for n in names}
        ratio = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{label:<36}" + "".join(f"{times[n]:>14.2f}" for n in names) + f"{ratio:>9.1f}x")


if __name__ == "__main__":
    main()
