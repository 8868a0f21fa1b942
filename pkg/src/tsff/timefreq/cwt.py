"""Morlet continuous wavelet transform and scalogram computation.

The mother wavelet is a Gaussian-windowed cosine,
``psi(t) = exp(-beta^2 t^2 / 2) * cos(pi t)``, oscillating at 0.5 cycles per
unit t, so a frequency f maps to the dimensionless scale
``a = 0.5 * fs / f`` (in samples). Coefficients follow the L2 convention,

    coef(a, b) = a^{-1/2} * sum_t s[t] * psi((t - b) / a),

with the signal taken as zero outside its support, and the scalogram is the
squared coefficient magnitude.

Two interchangeable kernels compute the inner correlation: an FFT-based
numpy one (the default; fastest at production trial lengths) and the
compiled direct time-domain one from tsff._kernels (exact correlation,
ahead for short wavelet supports). Pass backend="compiled"/"numpy" to pick
explicitly; TSFF_PURE_PYTHON=1 removes the compiled option entirely.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import ScaleSupportError
from ._backend import (
    CWT_KERNELS,
    DEFAULT_CWT_BACKEND,
    active_backend,
    available_backends,
    kernel_info,
)

CENTER_FREQ = 0.5          # cycles per unit t of the mother wavelet
SUPPORT_CUTOFF = 8.0       # keep |t| <= cutoff/beta; envelope there is exp(-32)


@dataclass(frozen=True)
class CwtSpec:
    """Analysis frequencies and the Morlet time/frequency balance parameter."""

    beta: float = 1.0
    freqs: np.ndarray = field(default_factory=lambda: np.linspace(4.0, 38.0, 69))
    passband: tuple[float, float] = (4.0, 38.0)

    def __post_init__(self):
        object.__setattr__(self, "freqs", np.asarray(self.freqs, dtype=np.float64))
        if self.beta <= 0.0:
            raise ValueError("beta must be positive")
        if self.freqs.ndim != 1 or len(self.freqs) == 0:
            raise ValueError("freqs must be a non-empty 1-D sequence")
        if np.any(np.diff(self.freqs) <= 0.0):
            raise ValueError("freqs must be strictly increasing")
        lo, hi = self.passband
        if self.freqs[0] < lo - 1e-9 or self.freqs[-1] > hi + 1e-9:
            raise ValueError(f"freqs must stay inside the passband [{lo}, {hi}] Hz")
        self.freqs.setflags(write=False)

    @property
    def n_freqs(self) -> int:
        return len(self.freqs)

    @classmethod
    def linear(cls, lo: float = 4.0, hi: float = 38.0, n_freqs: int = 69,
               beta: float = 1.0) -> "CwtSpec":
        return cls(beta=beta, freqs=np.linspace(lo, hi, n_freqs), passband=(lo, hi))

    def key(self) -> tuple:
        """Hashable identity for cache keys."""
        return (self.beta, tuple(self.freqs), self.passband, SUPPORT_CUTOFF)


def morlet_wavelet(t, beta: float = 1.0) -> np.ndarray:
    """Mother wavelet exp(-beta^2 t^2 / 2) * cos(pi t), elementwise."""
    if beta <= 0.0:
        raise ValueError("beta must be positive")
    t = np.asarray(t, dtype=np.float64)
    return np.exp(-0.5 * (beta * t) ** 2) * np.cos(np.pi * t)


def scales_for(freqs: np.ndarray, fs: float) -> np.ndarray:
    """Dimensionless scales (in samples) realizing the requested frequencies."""
    return CENTER_FREQ * fs / np.asarray(freqs, dtype=np.float64)


def wavelet_bank(spec: CwtSpec, fs: float, n_samples: int):
    """Discretized, truncated wavelets for every analysis frequency.

    Returns (taps, offsets, half_widths, inv_sqrt_scale) in the flattened
    layout both kernels consume. Truncation keeps |t| <= cutoff/beta where
    the Gaussian envelope is below 1.3e-14, so the truncated correlation
    matches the full integral far beyond the advertised tolerance.
    """
    scales = scales_for(spec.freqs, fs)
    half_widths = np.ceil(SUPPORT_CUTOFF * scales / spec.beta).astype(np.int64)
    support = 2 * half_widths + 1
    bad = support > n_samples
    if np.any(bad):
        k = int(np.argmax(bad))
        raise ScaleSupportError(
            f"{spec.freqs[k]:g} Hz needs {support[k]} samples of wavelet support "
            f"but the signal has only {n_samples}")
    pieces = []
    for a, half in zip(scales, half_widths):
        lags = np.arange(-half, half + 1, dtype=np.float64)
        pieces.append(morlet_wavelet(lags / a, spec.beta))
    taps = np.concatenate(pieces)
    offsets = np.zeros(len(pieces) + 1, dtype=np.int64)
    np.cumsum(support, out=offsets[1:])
    return taps, offsets, half_widths, 1.0 / np.sqrt(scales)


def scalogram_batch(signals: np.ndarray, fs: float, spec: CwtSpec,
                    backend: str | None = None) -> np.ndarray:
    """Scalogram power for a batch of rows: (B, T) -> (B, n_freqs, T)."""
    signals = np.ascontiguousarray(signals, dtype=np.float64)
    if signals.ndim != 2:
        raise ValueError("signals must be (rows, samples)")
    if not np.isfinite(signals).all():
        raise ValueError("signals must be finite")
    name = backend or DEFAULT_CWT_BACKEND
    try:
        kernel = CWT_KERNELS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    bank = wavelet_bank(spec, fs, signals.shape[1])
    return kernel(signals, *bank)


def cwt_scalogram(signal: np.ndarray, fs: float, spec: CwtSpec,
                  backend: str | None = None) -> np.ndarray:
    """Scalogram power of one signal: (T,) -> (n_freqs, T)."""
    signal = np.asarray(signal, dtype=np.float64)
    if signal.ndim != 1:
        raise ValueError("signal must be 1-D")
    return scalogram_batch(signal[None, :], fs, spec, backend=backend)[0]
