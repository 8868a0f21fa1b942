"""Time-frequency representation: Morlet CWT scalograms and image assembly."""

from .cwt import (
    CENTER_FREQ,
    SUPPORT_CUTOFF,
    CwtSpec,
    active_backend,
    available_backends,
    cwt_scalogram,
    kernel_info,
    morlet_wavelet,
    scales_for,
    scalogram_batch,
    wavelet_bank,
)
from .image import (
    RENDER_HEIGHT,
    RENDER_WIDTH,
    STITCH_MODES,
    export_images,
    image_channels,
    render_spectrogram,
    resize_image,
    spectrogram_batch,
    stitch_channels,
)

__all__ = [
    "CENTER_FREQ", "SUPPORT_CUTOFF", "CwtSpec", "active_backend",
    "available_backends", "cwt_scalogram", "kernel_info", "morlet_wavelet", "scales_for",
    "scalogram_batch", "wavelet_bank", "RENDER_HEIGHT", "RENDER_WIDTH",
    "STITCH_MODES", "export_images", "image_channels", "render_spectrogram",
    "resize_image", "spectrogram_batch", "stitch_channels",
]
