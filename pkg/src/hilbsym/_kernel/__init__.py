"""Kernel selection: compiled extension when available, pure Python otherwise.

Set HILBSYM_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the backend-equivalence tests).
"""

import os

if os.environ.get("HILBSYM_PURE_PYTHON") == "1":
    from . import _polycore_py as polycore
else:
    try:
        from . import _polycore_cy as polycore  # type: ignore[attr-defined]
    except ImportError:
        from . import _polycore_py as polycore

KERNEL_BACKEND = polycore.BACKEND

__all__ = ["polycore", "KERNEL_BACKEND"]
