#!/usr/bin/env python3
"""Benchmark the numba-jitted Jacobi kernels against the pure-numpy lane.

Both lanes implement the same cyclic rotation sequence; this script times
them head to head on the dimensions the verification suites actually use,
plus a chain-level end-to-end comparison.

Usage: python benchmarks/bench_eig.py [--repeats 2000] [--dims 2,4,8,16]
"""

import argparse
import time

import numpy as np

from opentropy import _accel
from opentropy.bounds import ChainParams, chain_check
from opentropy.gen import GenConfig, random_partner, random_spd


def _time_kernel(kernel, mats, thresh):
    start = time.perf_counter()
    for m in mats:
        kernel(m.copy(), thresh, 64)
    return time.perf_counter() - start


def bench_kernels(dims, repeats):
    rng = np.random.default_rng(0)
    print(f"{'dim':>4s} {'field':>7s} {'numba':>10s} {'numpy':>10s} "
          f"{'speedup':>8s}")
    for dim in dims:
        for field in ("real", "complex"):
            g = rng.standard_normal((dim, dim))
            if field == "complex":
                g = g + 1j * rng.standard_normal((dim, dim))
            m = ((g + g.conj().T) / 2.0).astype(
                np.complex128 if field == "complex" else np.float64)
            thresh = 1e-13 * float(np.linalg.norm(m))
            mats = [m] * repeats
            if field == "real":
                jit_kernel = _accel.jacobi_real_numba
                np_kernel = _accel.jacobi_real_numpy
            else:
                jit_kernel = _accel.jacobi_herm_numba
                np_kernel = _accel.jacobi_herm_numpy
            if jit_kernel is None:
                print(f"{dim:4d} {field:>7s}  numba unavailable")
                continue
            jit_kernel(m.copy(), thresh, 64)  # compile outside the clock
            t_jit = _time_kernel(jit_kernel, mats, thresh)
            t_np = _time_kernel(np_kernel, mats, thresh)
            print(f"{dim:4d} {field:>7s} {t_jit / repeats * 1e6:9.1f}us "
                  f"{t_np / repeats * 1e6:9.1f}us {t_np / t_jit:7.1f}x")


def bench_chain(trials):
    # end-to-end: one full thm-main1 chain check per trial
    cfg = GenConfig(dim=8, master_seed=1)
    params = ChainParams(alpha=1.0, beta=1.0)
    pairs = []
    for t in range(trials):
        a = random_spd(cfg, t)
        pairs.append((a, random_partner(a, 1.0, 1.0, "dominating", cfg, t)))
    start = time.perf_counter()
    for t, (a, b) in enumerate(pairs):
        chain_check("thm-main1", a, b, params, trial_seed=t)
    elapsed = time.perf_counter() - start
    lane = "numba" if _accel.ACCELERATED else "numpy"
    print(f"\nchain thm-main1, dim 8, {trials} trials on the {lane} lane: "
          f"{elapsed:.2f}s ({elapsed / trials * 1e3:.2f} ms/trial)")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=2000)
    parser.add_argument("--dims", default="2,4,8,16,32")
    parser.add_argument("--chain-trials", type=int, default=200)
    args = parser.parse_args()
    dims = [int(d) for d in args.dims.split(",")]
    print(f"active lane: {'numba' if _accel.ACCELERATED else 'numpy'} "
          f"(OPENTROPY_NO_NUMBA to force numpy)\n")
    bench_kernels(dims, args.repeats)
    bench_chain(args.chain_trials)


if __name__ == "__main__":
    main()
