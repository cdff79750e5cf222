"""Kernel selection: compiled extension when available, pure Python otherwise.

Set BASSUNITS_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the kernel-equivalence tests).
"""

from __future__ import annotations

import os

if os.environ.get("BASSUNITS_PURE_PYTHON"):
    from ._kernels_py import poly_conv, poly_reduce, ring_conv

    BACKEND = "python"
else:
    try:
        from ._kernels_c import poly_conv, poly_reduce, ring_conv

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import poly_conv, poly_reduce, ring_conv

        BACKEND = "python"

__all__ = ["poly_conv", "poly_reduce", "ring_conv", "BACKEND"]
