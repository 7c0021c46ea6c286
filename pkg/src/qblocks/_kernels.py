"""Selects the compiled hot kernels when available, else the pure-Python ones.

Set ``QBLOCKS_PURE=1`` to force the Python implementations.
"""
from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
convolve = _pykernels.convolve
close_paths = _pykernels.close_paths

if os.environ.get("QBLOCKS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on the build
        pass
    else:
        BACKEND = "cython"
        convolve = _ckernels.convolve
        close_paths = _ckernels.close_paths
