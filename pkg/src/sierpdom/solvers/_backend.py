"""Kernel backend selection.

The compiled Cython kernels are preferred when present; the pure Python
kernels are a drop-in replacement producing identical results (including
node counts).  Set SIERPDOM_PURE_PYTHON=1 to force the fallback, e.g. for
benchmarking or debugging.
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("SIERPDOM_PURE_PYTHON", "") not in ("", "0"):
    kernels = _pure
else:
    try:
        from . import _core as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = _pure


def backend_name() -> str:
    """"compiled" when the C extension is active, else "pure-python"."""
    return kernels.BACKEND_NAME
