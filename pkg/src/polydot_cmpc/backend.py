"""Kernel backend selection.

The compiled extension is preferred when importable; set
``POLYDOT_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and the parity tests).  Both backends are exact, so results never depend
on which one is active.
"""

import os

from polydot_cmpc import _pykernels

if os.environ.get("POLYDOT_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from polydot_cmpc import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND_NAME = "compiled" if _impl.__name__.endswith("_kernels") else "pure-python"

mod_matmul = _impl.mod_matmul
mod_mul_elemwise = _impl.mod_mul_elemwise
power_matrix = _impl.power_matrix
sum_mod_axis0 = _impl.sum_mod_axis0
solve_mod = _impl.solve_mod
