"""Time the packed multiplication kernel under both backends.

    python3 benchmarks/bench_kernels.py [--terms 400] [--repeat 20]

Operands are packed with the same minimal bit width the polynomial layer
uses.  The second block times one end-to-end expansion, Phi(z2, z6, z10)
in x0, x1, x2, with the backend switched at runtime.
"""

import argparse
import time

import numpy as np

from icoq import _kernels
from icoq._kernels import mul, pack


def _operands(rng, n, nv=3, top=30):
    bits = (2 * top).bit_length()
    exps = rng.integers(0, top + 1, size=(n, nv))
    return pack(exps, bits), rng.integers(-1000, 1000, size=n).astype(np.int64)


def _best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--terms", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    ka, ca = _operands(rng, args.terms)
    kb, cb = _operands(rng, args.terms)

    _kernels.set_backend("numba")
    mul(ka, ca, kb, cb)  # compile outside the timing loop
    results = {}
    for name in ("numpy", "numba"):
        _kernels.set_backend(name)
        results[name] = _best_of(lambda: mul(ka, ca, kb, cb), args.repeat)
        print(f"kernel {name:>5}: {results[name] * 1e3:8.3f} ms for {args.terms}x{args.terms} terms")
    print(f"numba speed-up: {results['numpy'] / results['numba']:.2f}x")

    from icoq.icoinv import klein_construct
    from icoq.multipoly import poly_subst
    k = klein_construct(check_invariance=False)
    gens = {"z2": k.z2, "z6": k.z6, "z10": k.z10}
    for name in ("numpy", "numba"):
        _kernels.set_backend(name)
        t = _best_of(lambda: poly_subst(k.phi, gens, k.z2.ring), max(1, args.repeat // 4))
        print(f"Phi(z2, z6, z10) {name:>5}: {t * 1e3:8.1f} ms")

if __name__ == "__main__":
    main()
