"""Kernel backend selection.

Prefers the compiled extension, falls back to the pure-Python module.  Set
BEI_FORCE_PURE=1 to force the fallback (useful for debugging and benchmarks).
"""

from __future__ import annotations

import os

if os.environ.get("BEI_FORCE_PURE") == "1":
    from bei import _purepy as kernel
else:
    try:
        from bei import _core as kernel  # type: ignore[attr-defined]
    except ImportError:
        from bei import _purepy as kernel

BACKEND: str = kernel.BACKEND
