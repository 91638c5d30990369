"""Kernel backend selection.

Imports the compiled extension when it is built, otherwise the numpy
fallback.  Set ``QWTRAIN_PURE_PYTHON=1`` to force the fallback (used by the
backend parity tests and the kernel benchmark).
"""

from __future__ import annotations

import os

if os.environ.get("QWTRAIN_PURE_PYTHON"):
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
