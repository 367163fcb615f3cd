"""Backend selection for the sampling inner loops.

The compiled extension is used when it imports; set ``ELLRANGE_PURE=1`` to
force the pure-Python fallback. ``BACKEND`` names the active choice.
"""
from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("ELLRANGE_PURE"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

rayleigh_batch = _impl.rayleigh_batch
max_focal_excess = _impl.max_focal_excess
sector_gap = _impl.sector_gap
segment_gap = _impl.segment_gap
hull_chain = _impl.hull_chain

__all__ = ["BACKEND", "rayleigh_batch", "max_focal_excess", "sector_gap",
           "segment_gap", "hull_chain"]
