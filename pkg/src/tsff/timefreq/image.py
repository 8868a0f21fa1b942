"""Scalogram rendering, channel stitching, and downsampling to network input.

Per trial, each channel's power matrix is min-max normalized, pushed through
the fixed 256-entry colormap, rasterized to an 800x600 RGB image (frequency
increasing upward), stitched with its siblings, and bilinearly resized to the
square network input. All steps are deterministic array transforms; the same
trial always yields the bit-identical image.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from ..data_io import TrialSet
from ._backend import DEFAULT_RESIZE_BACKEND, RESIZE_KERNELS
from ._colormap import COLORMAP
from .cwt import CwtSpec, scalogram_batch

RENDER_HEIGHT = 600
RENDER_WIDTH = 800
STITCH_MODES = ("widthwise", "lengthwise", "depthwise")


def _axis_coords(n_out: int, n_in: int):
    # half-pixel-centered source coordinates, clamped at the borders
    x = (np.arange(n_out) + 0.5) * (n_in / n_out) - 0.5
    x = np.clip(x, 0.0, n_in - 1.0)
    i0 = np.floor(x).astype(np.int64)
    i1 = np.minimum(i0 + 1, n_in - 1)
    return i0, i1, x - i0


def _bilinear(image: np.ndarray, out_h: int, out_w: int,
              backend: str | None = None) -> np.ndarray:
    """Resample (C, H, W) -> (C, out_h, out_w) with half-pixel-centered bilinear."""
    _, in_h, in_w = image.shape
    y0, y1, wy = _axis_coords(out_h, in_h)
    x0, x1, wx = _axis_coords(out_w, in_w)
    kernel = RESIZE_KERNELS[backend or DEFAULT_RESIZE_BACKEND]
    return kernel(np.ascontiguousarray(image, dtype=np.float64),
                  y0, y1, wy, x0, x1, wx)


def render_spectrogram(power: np.ndarray, out_h: int = RENDER_HEIGHT,
                       out_w: int = RENDER_WIDTH) -> np.ndarray:
    """Turn an (n_freqs, T) power matrix into a (3, out_h, out_w) image in [0, 1].

    Power is min-max normalized per image (a constant matrix maps to the
    colormap origin), colormapped, and rasterized with the lowest analysis
    frequency at the bottom row.
    """
    power = np.asarray(power, dtype=np.float64)
    if power.ndim != 2:
        raise ValueError("power must be (n_freqs, T)")
    if np.any(power < 0.0):
        raise ValueError("power must be nonnegative")
    power = power[::-1]  # row 0 = highest frequency = top of the image
    lo, hi = power.min(), power.max()
    norm = np.zeros_like(power) if hi == lo else (power - lo) / (hi - lo)
    idx = np.rint(norm * (len(COLORMAP) - 1)).astype(np.intp)
    rgb = COLORMAP[idx]                       # (n_freqs, T, 3)
    rgb = np.moveaxis(rgb, -1, 0)             # (3, n_freqs, T)
    return _bilinear(rgb, out_h, out_w)


def stitch_channels(images, mode: str = "widthwise") -> np.ndarray:
    """Combine per-channel images (in channel order, e.g. C3, Cz, C4).

    widthwise  -> (3, H, len*W)   side by side
    lengthwise -> (3, len*H, W)   stacked vertically
    depthwise  -> (3*len, H, W)   extra image channels
    """
    images = [np.asarray(im) for im in images]
    shapes = {im.shape for im in images}
    if len(shapes) != 1 or images[0].ndim != 3:
        raise ValueError(f"need identically shaped (C, H, W) images, got {shapes}")
    if mode == "widthwise":
        return np.concatenate(images, axis=2)
    if mode == "lengthwise":
        return np.concatenate(images, axis=1)
    if mode == "depthwise":
        return np.concatenate(images, axis=0)
    raise ValueError(f"unknown stitch mode {mode!r}; expected one of {STITCH_MODES}")


def resize_image(image: np.ndarray, target: int) -> np.ndarray:
    """Bilinear resampling of (C, H, W) to (C, target, target); keeps [0, 1]."""
    image = np.asarray(image, dtype=np.float64)
    if image.ndim != 3:
        raise ValueError("image must be (C, H, W)")
    if target <= 0:
        raise ValueError("target size must be positive")
    return _bilinear(image, target, target)


def image_channels(stitch: str) -> int:
    """Channel count of stitched trial images (3, or 9 for depthwise)."""
    if stitch not in STITCH_MODES:
        raise ValueError(f"unknown stitch mode {stitch!r}")
    return 9 if stitch == "depthwise" else 3


def spectrogram_batch(trials: TrialSet, spec: CwtSpec, stitch: str = "widthwise",
                      size: int = 224, backend: str | None = None) -> np.ndarray:
    """Full per-trial pipeline: CWT -> render -> stitch -> resize.

    Returns (N, 3, size, size) float32 (9 channels for depthwise stitching).
    """
    n, c, t = trials.data.shape
    rows = trials.data.reshape(n * c, t).astype(np.float64)
    power = scalogram_batch(rows, trials.fs, spec, backend=backend)
    power = power.reshape(n, c, spec.n_freqs, t)
    out = np.empty((n, image_channels(stitch), size, size), dtype=np.float32)
    for i in range(n):
        rendered = [render_spectrogram(power[i, ch]) for ch in range(c)]
        out[i] = resize_image(stitch_channels(rendered, stitch), size)
    return out


def export_images(images: np.ndarray, out_dir, labels=None) -> Path:
    """Write a spectrogram batch as lossless PNGs plus an index file.

    3-channel images become 8-bit RGB PNGs; other channel counts are stored
    as .npy arrays. Returns the path of the written index.json, which maps
    trial index -> {file, label}.
    """
    from PIL import Image

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    index = {}
    for i, img in enumerate(images):
        if img.shape[0] == 3:
            name = f"trial_{i:04d}.png"
            arr = np.rint(np.clip(img, 0.0, 1.0) * 255).astype(np.uint8)
            Image.fromarray(np.moveaxis(arr, 0, -1), mode="RGB").save(out_dir / name)
        else:
            name = f"trial_{i:04d}.npy"
            np.save(out_dir / name, img)
        entry = {"file": name}
        if labels is not None:
            entry["label"] = int(labels[i])
        index[str(i)] = entry
    index_path = out_dir / "index.json"
    index_path.write_text(json.dumps(index, indent=2, sort_keys=True))
    return index_path
