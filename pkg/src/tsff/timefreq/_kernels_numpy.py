"""Pure-numpy fallbacks for the compiled kernels (same signatures).

The scalogram kernel convolves by FFT with the forward transform of the
signal block hoisted out of the per-scale loop; the resampler is the same
separable two-pass bilinear scheme as the compiled one.
"""

from __future__ import annotations

import numpy as np
from scipy.fft import irfft, next_fast_len, rfft


def scalogram_batch(signals: np.ndarray, taps: np.ndarray, offsets: np.ndarray,
                    half_widths: np.ndarray, inv_sqrt_scale: np.ndarray) -> np.ndarray:
    """Squared CWT coefficients: (rows, T) -> (rows, n_scales, T)."""
    n_rows, n_samples = signals.shape
    n_scales = len(half_widths)
    max_support = int(offsets[-1] - offsets[-2]) if n_scales else 1
    for k in range(n_scales):
        max_support = max(max_support, int(offsets[k + 1] - offsets[k]))
    nfft = next_fast_len(n_samples + max_support - 1)
    spectra = rfft(signals, nfft, axis=1)
    power = np.empty((n_rows, n_scales, n_samples), dtype=np.float64)
    for k in range(n_scales):
        w = taps[offsets[k]:offsets[k + 1]]
        half = int(half_widths[k])
        full = irfft(spectra * rfft(w, nfft), nfft, axis=1)
        coef = full[:, half:half + n_samples] * inv_sqrt_scale[k]
        power[:, k, :] = coef * coef
    return power


def resize_bilinear(image: np.ndarray, y0, y1, wy, x0, x1, wx) -> np.ndarray:
    """Separable bilinear resampling of (C, H, W) with precomputed
    neighbor indices and weights."""
    cols = image[:, :, x0] * (1.0 - wx) + image[:, :, x1] * wx
    return cols[:, y0] * (1.0 - wy)[:, None] + cols[:, y1] * wy[:, None]
