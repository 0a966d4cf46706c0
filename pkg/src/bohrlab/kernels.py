"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the numpy/scipy
fallback. Set ``BOHR_LAB_KERNELS=python`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"

if os.environ.get("BOHR_LAB_KERNELS", "").lower() != "python":
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
else:
    _compiled = None

if _compiled is not None:
    taylor_shift = _compiled.taylor_shift
    blaschke_factor = _compiled.blaschke_factor
    horner = _compiled.horner
    BACKEND = "cython"
else:
    taylor_shift = _kernels_py.taylor_shift
    blaschke_factor = _kernels_py.blaschke_factor
    horner = _kernels_py.horner

__all__ = ["BACKEND", "taylor_shift", "blaschke_factor", "horner"]
