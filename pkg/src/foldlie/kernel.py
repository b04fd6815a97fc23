"""Kernel backend selection: compiled extension if available, else pure Python.

Set ``FOLDLIE_PURE_PYTHON=1`` to force the fallback (used by the benchmark
to compare both backends in one process).
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("FOLDLIE_PURE_PYTHON"):
    _impl = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernel_py
        BACKEND = "python"

mat_mul = _impl.mat_mul
mat_vec = _impl.mat_vec
rref = _impl.rref
charpoly_int = _impl.charpoly_int
charpoly_generic = _impl.charpoly_generic
entries_common_denominator = _impl.entries_common_denominator

IMPLEMENTATIONS = {"python": _kernel_py}
if BACKEND == "cython":
    IMPLEMENTATIONS["cython"] = _impl
else:
    try:
        from . import _speedups as _maybe  # type: ignore[attr-defined]

        IMPLEMENTATIONS["cython"] = _maybe
    except ImportError:
        pass
