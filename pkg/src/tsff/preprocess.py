"""Signal conditioning: FIR bandpass, segmentation, normalization, alignment.

The pipeline order is filter -> segment -> normalize -> align. Filtering is
linear-phase FIR (windowed sinc under a Blackman window) with the group
delay compensated, so it can run on continuous recordings or on stored
cue-locked windows before cropping; either way the task window sees no
extra shift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.signal import fftconvolve

from .data_io import TrialSet
from .errors import ConditioningError, SegmentationError


@dataclass(frozen=True)
class FilterSpec:
    """Linear-phase bandpass design parameters (taps = order + 1)."""

    order: int = 200
    band: tuple[float, float] = (4.0, 38.0)
    fs: float = 250.0
    window: str = "blackman"

    def __post_init__(self):
        lo, hi = self.band
        if not 0.0 < lo < hi < self.fs / 2.0:
            raise ValueError(f"passband {self.band} must satisfy 0 < lo < hi < fs/2")
        if self.order <= 0 or self.order % 2:
            raise ValueError("order must be a positive even number (symmetric design)")
        if self.window != "blackman":
            raise ValueError(f"unsupported window {self.window!r}")


@dataclass(frozen=True)
class SegmentSpec:
    """Trial window in seconds relative to the cue."""

    start: float
    end: float

    def __post_init__(self):
        if not self.end > self.start:
            raise ValueError("window end must come after start")

    def n_samples(self, fs: float) -> int:
        n = (self.end - self.start) * fs
        if abs(n - round(n)) > 1e-9:
            raise ValueError(f"window length {self.end - self.start}s is not an "
                             f"integer number of samples at {fs} Hz")
        return int(round(n))


def _blackman(n_taps: int) -> np.ndarray:
    # symmetric by construction: compute one half, mirror the other
    n = np.arange(n_taps)
    x = 2.0 * np.pi * n / (n_taps - 1)
    w = 0.42 - 0.5 * np.cos(x) + 0.08 * np.cos(2.0 * x)
    half = (n_taps + 1) // 2
    w[n_taps - half:] = w[:half][::-1]
    return w


def design_blackman_fir(spec: FilterSpec) -> np.ndarray:
    """Windowed-sinc bandpass taps, exactly symmetric, unity gain at band center.

    The ideal response is the difference of two lowpass sincs at the band
    edges; the Blackman window tapers it and the result is scaled so the
    response at the passband center frequency is exactly one.
    """
    n_taps = spec.order + 1
    m = np.arange(n_taps) - spec.order // 2
    lo, hi = (2.0 * f / spec.fs for f in spec.band)
    h = hi * np.sinc(hi * m) - lo * np.sinc(lo * m)
    h *= _blackman(n_taps)
    center = (spec.band[0] + spec.band[1]) / spec.fs  # normalized, cycles/sample*2
    h /= np.sum(h * np.cos(np.pi * m * center))
    half = (n_taps + 1) // 2
    h[n_taps - half:] = h[:half][::-1]
    return h


def frequency_response(taps: np.ndarray, freqs_hz: np.ndarray, fs: float) -> np.ndarray:
    """Complex response H(f) = sum_n taps[n] exp(-2pi i f n / fs)."""
    n = np.arange(len(taps))
    phase = np.exp(-2j * np.pi * np.outer(np.asarray(freqs_hz, dtype=float), n) / fs)
    return phase @ taps


def filter_recording(recording: np.ndarray, spec: FilterSpec) -> np.ndarray:
    """Filter (..., T) samples along the last axis, delay-compensated.

    Zero-padded convolution; the order/2 group delay of the symmetric FIR is
    removed so features stay time-locked to the cue.
    """
    recording = np.asarray(recording, dtype=np.float64)
    n = recording.shape[-1]
    if n <= spec.order:
        raise ValueError(f"signal length {n} must exceed filter order {spec.order}")
    taps = design_blackman_fir(spec)
    full = fftconvolve(recording, taps.reshape((1,) * (recording.ndim - 1) + (-1,)),
                       mode="full", axes=-1)
    delay = spec.order // 2
    return full[..., delay:delay + n]


def bandpass_filter(trials: TrialSet, spec: FilterSpec) -> TrialSet:
    """Apply the bandpass to every channel of every trial."""
    if abs(trials.fs - spec.fs) > 1e-9:
        raise ValueError(f"trial rate {trials.fs} != filter design rate {spec.fs}")
    return trials.with_data(filter_recording(trials.data, spec).astype(np.float32))


def segment_trials(recording: np.ndarray, fs: float, cue_times: np.ndarray,
                   labels: np.ndarray, spec: SegmentSpec,
                   channels=("C3", "Cz", "C4"), n_classes: int | None = None,
                   dataset_id: str = "", subject_id: str = "") -> TrialSet:
    """Cut cue-locked windows out of a continuous (C, L) recording.

    cue_times are in seconds from recording start; trial i spans
    [cue + start, cue + end) and must lie fully inside the recording.
    """
    recording = np.asarray(recording)
    if recording.ndim != 2:
        raise ValueError("recording must be (channels, samples)")
    n_samples = spec.n_samples(fs)
    length = recording.shape[1]
    out = np.empty((len(cue_times), recording.shape[0], n_samples), dtype=np.float32)
    for i, cue in enumerate(cue_times):
        first = int(round((cue + spec.start) * fs))
        last = first + n_samples
        if first < 0 or last > length:
            raise SegmentationError(
                i, f"trial {i}: window [{first}, {last}) outside recording "
                   f"of {length} samples")
        out[i] = recording[:, first:last]
    return TrialSet(data=out, labels=labels, fs=fs, channels=channels,
                    n_classes=n_classes, dataset_id=dataset_id, subject_id=subject_id)


def crop_window(trials: TrialSet, spec: SegmentSpec) -> TrialSet:
    """Crop stored cue-locked trials to a task window (seconds from trial start)."""
    n_samples = spec.n_samples(trials.fs)
    first = int(round(spec.start * trials.fs))
    if first < 0 or first + n_samples > trials.n_samples:
        raise SegmentationError(
            -1, f"window [{spec.start}, {spec.end}]s does not fit in trials of "
                f"{trials.n_samples} samples at {trials.fs} Hz")
    return trials.with_data(trials.data[:, :, first:first + n_samples])


def normalize_trials(trials: TrialSet, per_channel: bool = False):
    """Scale each trial to [-1, 1] by its own max absolute amplitude.

    Returns (normalized TrialSet, zero_mask) where zero_mask flags all-zero
    trials that were left unchanged instead of dividing by zero. Idempotent.
    The per_channel switch scales each channel by its own max instead.
    """
    data = trials.data.astype(np.float64)
    axes = (2,) if per_channel else (1, 2)
    peak = np.max(np.abs(data), axis=axes, keepdims=True)
    zero_mask = np.squeeze(peak, axis=axes) == 0.0
    scale = np.where(peak == 0.0, 1.0, peak)
    return trials.with_data((data / scale).astype(np.float32)), zero_mask


@dataclass(frozen=True)
class AlignmentState:
    """Whitening transform derived from the mean trial covariance."""

    mean_cov: np.ndarray       # C x C, symmetric PSD
    inv_sqrt: np.ndarray       # C x C, symmetric; inv_sqrt @ mean_cov @ inv_sqrt ~ I
    epsilon: float

    @property
    def n_channels(self) -> int:
        return self.mean_cov.shape[0]


def fit_alignment(trials: TrialSet, epsilon: float | None = None) -> AlignmentState:
    """Estimate the inverse square root of the mean trial covariance.

    mean_cov = (1/N) sum_i x_i x_i^T over trials x_i (C x T). The inverse
    square root comes from a symmetric eigendecomposition of
    mean_cov + epsilon*I with eigenvalues clamped at epsilon; by default
    epsilon = 1e-8 * trace(mean_cov) / C, a scale-free conditioning guard.
    """
    data = trials.data.astype(np.float64)
    if not np.isfinite(data).all():
        raise ValueError("alignment requires finite data")
    if trials.n_trials < 1:
        raise ValueError("alignment needs at least one trial")
    mean_cov = np.einsum("nct,ndt->cd", data, data) / trials.n_trials
    c = mean_cov.shape[0]
    if epsilon is None:
        epsilon = 1e-8 * np.trace(mean_cov) / c
    if not epsilon > 0.0:
        raise ConditioningError("mean covariance has zero trace; data is all zero")
    evals, evecs = np.linalg.eigh(mean_cov + epsilon * np.eye(c))
    evals = np.maximum(evals, epsilon)
    if np.any(evals <= 0.0):
        raise ConditioningError(f"non-positive eigenvalues after regularization: {evals}")
    inv_sqrt = (evecs / np.sqrt(evals)) @ evecs.T
    return AlignmentState(mean_cov=mean_cov, inv_sqrt=inv_sqrt, epsilon=float(epsilon))


def apply_alignment(trials: TrialSet, state: AlignmentState) -> TrialSet:
    """Left-multiply every trial by the whitening matrix."""
    if state.n_channels != trials.n_channels:
        raise ValueError(f"alignment fitted for {state.n_channels} channels, "
                         f"trials have {trials.n_channels}")
    aligned = np.einsum("cd,ndt->nct", state.inv_sqrt, trials.data.astype(np.float64))
    return trials.with_data(aligned.astype(np.float32))


@dataclass(frozen=True)
class PreprocessSpec:
    """End-to-end preprocessing switches used by the training pipeline/CLI."""

    band: tuple[float, float] | None = (4.0, 38.0)
    filter_order: int = 200
    window: tuple[float, float] | None = None   # crop, seconds from trial start
    epsilon: float | None = None
    alignment: str = "per-split"                # per-split | none
    per_channel_norm: bool = False

    def __post_init__(self):
        if self.alignment not in ("per-split", "none"):
            raise ValueError(f"unknown alignment mode {self.alignment!r}")


def preprocess_trials(trials: TrialSet, spec: PreprocessSpec,
                      alignment: AlignmentState | None = None):
    """Run filter -> crop -> normalize -> align on one split.

    When spec.alignment is "per-split" and no state is passed, a fresh
    alignment is fitted on these trials (the default, split-local
    reference); passing a state reuses it (e.g. the training reference for
    transductive-free test alignment).

    Returns (TrialSet, AlignmentState | None, zero_mask).
    """
    if spec.band is not None:
        trials = bandpass_filter(
            trials, FilterSpec(order=spec.filter_order, band=tuple(spec.band),
                               fs=trials.fs))
    if spec.window is not None:
        trials = crop_window(trials, SegmentSpec(*spec.window))
    trials, zero_mask = normalize_trials(trials, per_channel=spec.per_channel_norm)
    state = alignment
    if spec.alignment == "per-split":
        if state is None:
            state = fit_alignment(trials, epsilon=spec.epsilon)
        trials = apply_alignment(trials, state)
    return trials, state, zero_mask
