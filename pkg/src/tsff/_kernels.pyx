# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: bilinear resampling and direct CWT correlation.

Image assembly (two bilinear passes per trial) dominates the spectrogram
pipeline's runtime, so the resampler is what the extension is really for;
the direct time-domain correlation kernel is the exact counterpart of the
FFT-based fallback and wins when wavelet supports are short. Both have
signature-identical numpy fallbacks in tsff.timefreq._kernels_numpy.
"""

import numpy as np

cimport numpy as cnp
from cython.parallel cimport prange

cnp.import_array()


def scalogram_batch(double[:, ::1] signals, double[::1] taps,
                    long long[::1] offsets, long long[::1] half_widths,
                    double[::1] inv_sqrt_scale):
    """Squared CWT coefficients: (rows, T) -> (rows, n_scales, T).

    Scale k owns taps[offsets[k]:offsets[k+1]] covering lags
    [-half_widths[k], +half_widths[k]]; signals are zero outside [0, T).
    """
    cdef Py_ssize_t n_rows = signals.shape[0]
    cdef Py_ssize_t n_samples = signals.shape[1]
    cdef Py_ssize_t n_scales = half_widths.shape[0]
    out = np.empty((n_rows, n_scales, n_samples), dtype=np.float64)
    cdef double[:, :, ::1] power = out
    cdef Py_ssize_t row, k, b, j, lo, hi, base, half
    cdef double acc, norm

    for row in prange(n_rows, nogil=True, schedule="static"):
        for k in range(n_scales):
            base = offsets[k]
            half = half_widths[k]
            norm = inv_sqrt_scale[k]
            for b in range(n_samples):
                # lag range clipped so b + j stays inside the signal
                lo = -half if b >= half else -b
                hi = half if b + half < n_samples else n_samples - 1 - b
                acc = 0.0
                for j in range(lo, hi + 1):
                    acc = acc + signals[row, b + j] * taps[base + half + j]
                acc = acc * norm
                power[row, k, b] = acc * acc
    return out


def resize_bilinear(double[:, :, ::1] image,
                    long long[::1] y0, long long[::1] y1, double[::1] wy,
                    long long[::1] x0, long long[::1] x1, double[::1] wx):
    """Separable bilinear resampling of (C, H, W) using precomputed
    neighbor indices and weights per output row/column."""
    cdef Py_ssize_t n_ch = image.shape[0]
    cdef Py_ssize_t in_w = image.shape[2]
    cdef Py_ssize_t out_h = y0.shape[0]
    cdef Py_ssize_t out_w = x0.shape[0]
    cdef Py_ssize_t in_h = image.shape[1]

    cols = np.empty((n_ch, in_h, out_w), dtype=np.float64)
    out = np.empty((n_ch, out_h, out_w), dtype=np.float64)
    cdef double[:, :, ::1] tmp = cols
    cdef double[:, :, ::1] res = out
    cdef Py_ssize_t c, r, ox, oy
    cdef double w

    for r in prange(n_ch * in_h, nogil=True, schedule="static"):
        c = r // in_h
        oy = r % in_h
        for ox in range(out_w):
            w = wx[ox]
            tmp[c, oy, ox] = (image[c, oy, x0[ox]] * (1.0 - w)
                              + image[c, oy, x1[ox]] * w)
    for r in prange(n_ch * out_h, nogil=True, schedule="static"):
        c = r // out_h
        oy = r % out_h
        w = wy[oy]
        for ox in range(out_w):
            res[c, oy, ox] = (tmp[c, y0[oy], ox] * (1.0 - w)
                              + tmp[c, y1[oy], ox] * w)
    return out
