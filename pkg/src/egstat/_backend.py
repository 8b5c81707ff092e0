"""Select the kernel implementation at import time.

The compiled ``_kernels`` extension is used when it was built; otherwise
the pure-Python ``_kernels_py`` module.  Setting ``EGSTAT_PURE_PYTHON=1``
forces the fallback.
"""

import os

if os.environ.get("EGSTAT_PURE_PYTHON"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        from . import _kernels_py as kernels

BACKEND: str = kernels.BACKEND
eg_fillings = kernels.eg_fillings
eg_count = kernels.eg_count
inversions = kernels.inversions

__all__ = ["BACKEND", "eg_count", "eg_fillings", "inversions", "kernels"]
