"""Kernel selection.

The compiled extension is used when it imports; ``MNWORDS_PURE_PYTHON=1``
forces the pure-Python kernels.
"""

import os

if os.environ.get("MNWORDS_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = "compiled" if kernels.__name__.endswith("._kernels") else "python"

__all__ = ["kernels", "BACKEND"]
