"""Kernel selection: compiled extension when built, numpy otherwise.

The compiled resampler is the pipeline's fast path and is picked at import
whenever the extension loads (TSFF_PURE_PYTHON=1 forces the numpy kernels).
For the CWT correlation both implementations stay addressable by name: the
FFT-based numpy kernel is the default because it wins at production trial
lengths, while the compiled direct kernel is exact time-domain and ahead
for short wavelet supports (see benchmarks/bench_kernels.py).
"""

from __future__ import annotations

import os

from . import _kernels_numpy

EXTENSION_LOADED = False
if not os.environ.get("TSFF_PURE_PYTHON"):
    try:
        from .. import _kernels as _compiled
        EXTENSION_LOADED = True
    except ImportError:
        _compiled = None
else:
    _compiled = None

CWT_KERNELS = {"numpy": _kernels_numpy.scalogram_batch}
RESIZE_KERNELS = {"numpy": _kernels_numpy.resize_bilinear}
if EXTENSION_LOADED:
    CWT_KERNELS["compiled"] = _compiled.scalogram_batch
    RESIZE_KERNELS["compiled"] = _compiled.resize_bilinear

DEFAULT_CWT_BACKEND = "numpy"
DEFAULT_RESIZE_BACKEND = "compiled" if EXTENSION_LOADED else "numpy"


def kernel_info() -> dict:
    """Which implementation each stage uses by default (cache-key material)."""
    return {"extension_loaded": EXTENSION_LOADED,
            "cwt": DEFAULT_CWT_BACKEND,
            "resize": DEFAULT_RESIZE_BACKEND}


def active_backend() -> str:
    return "compiled" if EXTENSION_LOADED else "numpy"


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(CWT_KERNELS))
