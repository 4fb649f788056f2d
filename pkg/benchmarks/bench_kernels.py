#!/usr/bin/env python3
"""Compare the compiled GF(q) kernels against the pure-Python fallback.

The two backends are bit-identical; this script only measures speed on the
three hot paths (dense solve, matrix product, power table) plus one full
protocol run.  Run after `pip install -e .`:

    python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from polydot_cmpc import _pykernels
from polydot_cmpc.field import MERSENNE61

try:
    from polydot_cmpc import _kernels
except ImportError:
    _kernels = None

Q = MERSENNE61
RNG = np.random.default_rng(99)


def _rand(shape):
    return np.asarray(RNG.integers(0, Q, size=shape), dtype=np.int64)


def timeit(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_kernels():
    n = 120
    a = _rand((n, n))
    x = _rand((n, 8))
    b = _pykernels.mod_matmul(a, x, Q)
    pts = _rand((n,)) % (Q - 1) + 1
    exps = np.arange(0, 4 * n, 4, dtype=np.int64)

    cases = [
        ("solve_mod  (120x120, 8 rhs)", "solve_mod", (a, b, Q)),
        ("mod_matmul (120x120)", "mod_matmul", (a, a, Q)),
        ("power_matrix (120x120)", "power_matrix", (pts, exps, Q)),
    ]
    print(f"{'kernel':<30} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for label, name, args in cases:
        slow, ref = timeit(getattr(_pykernels, name), *args)
        if _kernels is None:
            print(f"{label:<30} {slow * 1e3:>8.1f}ms {'n/a':>10}")
            continue
        fast, out = timeit(getattr(_kernels, name), *args)
        assert np.array_equal(ref, out), f"{name}: backends disagree"
        print(f"{label:<30} {slow * 1e3:>8.1f}ms {fast * 1e3:>8.1f}ms "
              f"{slow / fast:>8.1f}x")


def bench_protocol():
    import os
    import subprocess
    import sys

    code = (
        "import time, numpy as np\n"
        "from polydot_cmpc import ProtocolConfig, SchemeParams, run_protocol, backend\n"
        "cfg = ProtocolConfig(params=SchemeParams(3, 2, 4), m=12, seed=1)\n"
        "rng = np.random.default_rng(0)\n"
        "a = np.asarray(rng.integers(0, cfg.modulus.q, (12, 12)), dtype=np.int64)\n"
        "b = np.asarray(rng.integers(0, cfg.modulus.q, (12, 12)), dtype=np.int64)\n"
        "t0 = time.perf_counter(); run_protocol(a, b, cfg)\n"
        "print(backend.BACKEND_NAME, time.perf_counter() - t0)\n"
    )
    print()
    print("full protocol run (s=3, t=2, z=4, m=12):")
    for pure in ("0", "1"):
        env = dict(os.environ, POLYDOT_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True, check=True)
        name, seconds = out.stdout.split()
        print(f"  {name:<12} {float(seconds) * 1e3:8.1f}ms")


if __name__ == "__main__":
    bench_kernels()
    bench_protocol()
