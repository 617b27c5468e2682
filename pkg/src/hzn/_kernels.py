"""Kernel backend selection.

The hot inner loops (quadrature integrand sweeps, collapsed series sums)
exist twice: jitted with numba and as pure-numpy fallbacks.  The active
backend is chosen once at import time from the environment:

    HZN_KERNEL_BACKEND=numba   force the jitted kernels (error if missing)
    HZN_KERNEL_BACKEND=numpy   force the pure-numpy fallbacks

Unset, numba is used when importable.  ``benchmarks/backend_bench.py``
times the two implementations against each other.
"""

from __future__ import annotations

import os

from . import _kernels_numpy

_requested = os.environ.get("HZN_KERNEL_BACKEND", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise ImportError(
        f"HZN_KERNEL_BACKEND={_requested!r} not understood; use 'numba' or 'numpy'"
    )

if _requested == "numpy":
    _impl = _kernels_numpy
else:
    try:
        from . import _kernels_numba as _impl  # noqa: F401
    except ImportError:
        if _requested == "numba":
            raise
        _impl = _kernels_numpy

BACKEND = _impl.BACKEND_NAME

cexpm1 = _impl.cexpm1
clog1p = _impl.clog1p
log_f_factor = _impl.log_f_factor
f_power_integrand = _impl.f_power_integrand
f3_integrand = _impl.f3_integrand
j_integrand = _impl.j_integrand
series_sum = _impl.series_sum
