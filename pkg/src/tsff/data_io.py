"""Trial archive format ("TSFF" files) and synthetic dataset generation.

An archive stores a batch of segmented EEG trials as little-endian f32
samples, trial-major then channel-major then time, preceded by a compact
binary header. Raw recordings (GDF etc.) are converted once by an external
step or via ``tsff convert``; everything downstream reads this format only.

Layout (all little-endian):

    offset  size  field
    0       4     magic b"TSFF"
    4       2     format version (u16), currently 1
    6       4     sampling rate in Hz (f32)
    10      4x4   N, C, T, M (u32)
    26      4     data block offset from file start (u32)
    30      2*N   labels (u16 each, values in [0, M))
    ...           C channel names, each u8 length + ascii bytes
    data_offset   N*C*T samples (f32), C-order over (N, C, T)

A plain-text ``<archive>.manifest.json`` sidecar may sit next to the file;
readers ignore it.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ArchiveCorruptError, ArchiveFormatError, UnsupportedVersionError

MAGIC = b"TSFF"
FORMAT_VERSION = 1
_FIXED_HEADER = struct.Struct("<4sHfIIIII")  # magic, version, fs, N, C, T, M, data_offset

DEFAULT_CHANNELS = ("C3", "Cz", "C4")


@dataclass(frozen=True)
class TrialSet:
    """A batch of segmented EEG trials.

    data has shape (N, C, T); labels are 0-based class indices in [0, M).
    Instances are immutable; transformations return new objects.
    """

    data: np.ndarray
    labels: np.ndarray
    fs: float
    channels: tuple[str, ...] = DEFAULT_CHANNELS
    n_classes: int | None = None
    dataset_id: str = ""
    subject_id: str = ""

    def __post_init__(self):
        data = np.ascontiguousarray(self.data, dtype=np.float32)
        labels = np.asarray(self.labels, dtype=np.int64)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "channels", tuple(self.channels))
        if data.ndim != 3:
            raise ValueError(f"data must be (N, C, T), got shape {data.shape}")
        n, c, t = data.shape
        if labels.shape != (n,):
            raise ValueError(f"labels must have length N={n}, got {labels.shape}")
        if c != len(self.channels):
            raise ValueError(
                f"data has {c} channels but {len(self.channels)} channel names")
        if t <= 0:
            raise ValueError("trials must contain at least one sample")
        if not self.fs > 0:
            raise ValueError(f"sampling rate must be positive, got {self.fs}")
        m = self.n_classes
        if m is None:
            m = int(labels.max()) + 1 if n else 1
            object.__setattr__(self, "n_classes", m)
        if n and (labels.min() < 0 or labels.max() >= m):
            raise ValueError(f"labels must lie in [0, {m})")
        self.data.setflags(write=False)
        self.labels.setflags(write=False)

    @property
    def n_trials(self) -> int:
        return self.data.shape[0]

    @property
    def n_channels(self) -> int:
        return self.data.shape[1]

    @property
    def n_samples(self) -> int:
        return self.data.shape[2]

    def with_data(self, data: np.ndarray) -> "TrialSet":
        """Copy of this set with replaced samples (labels/meta preserved)."""
        return replace(self, data=data)


def write_archive(trials: TrialSet, path) -> None:
    """Serialize a TrialSet; round-trips bit-exactly through read_archive."""
    n, c, t = trials.data.shape
    if not np.isfinite(trials.data).all():
        raise ValueError("refusing to write non-finite samples")
    names = [ch.encode("ascii") for ch in trials.channels]
    if any(len(b) > 255 for b in names):
        raise ValueError("channel names longer than 255 bytes")
    name_block = b"".join(struct.pack("<B", len(b)) + b for b in names)
    data_offset = _FIXED_HEADER.size + 2 * n + len(name_block)
    header = _FIXED_HEADER.pack(
        MAGIC, FORMAT_VERSION, float(trials.fs), n, c, t,
        int(trials.n_classes), data_offset)
    labels = trials.labels.astype("<u2").tobytes()
    samples = trials.data.astype("<f4").tobytes(order="C")
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(labels)
        fh.write(name_block)
        fh.write(samples)


def read_archive(path) -> TrialSet:
    """Load a TrialSet written by write_archive."""
    with open(path, "rb") as fh:
        raw = fh.read()
    if len(raw) < _FIXED_HEADER.size:
        raise ArchiveFormatError(f"{path}: file shorter than the fixed header")
    magic, version, fs, n, c, t, m, data_offset = _FIXED_HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise ArchiveFormatError(f"{path}: bad magic {magic!r}")
    if version > FORMAT_VERSION:
        raise UnsupportedVersionError(
            f"{path}: format version {version} is newer than supported "
            f"({FORMAT_VERSION})")
    pos = _FIXED_HEADER.size
    label_end = pos + 2 * n
    if label_end > len(raw) or data_offset > len(raw):
        raise ArchiveCorruptError(f"{path}: header blocks extend past end of file")
    labels = np.frombuffer(raw, dtype="<u2", count=n, offset=pos).astype(np.int64)
    pos = label_end
    channels = []
    for _ in range(c):
        if pos >= data_offset:
            raise ArchiveCorruptError(f"{path}: channel-name block truncated")
        ln = raw[pos]
        pos += 1
        channels.append(raw[pos:pos + ln].decode("ascii"))
        pos += ln
    expected = data_offset + n * c * t * 4
    if len(raw) < expected:
        raise ArchiveCorruptError(
            f"{path}: data block truncated ({len(raw)} bytes, expected {expected})")
    data = np.frombuffer(raw, dtype="<f4", count=n * c * t, offset=data_offset)
    data = data.reshape(n, c, t)
    return TrialSet(data=data, labels=labels, fs=fs, channels=channels, n_classes=m)


def class_frequency(label: int) -> float:
    """Hz of the oscillatory burst carried by trials of a synthetic class.

    Class 0 sits at 10 Hz, class 1 at 22 Hz, further classes interleave
    between them; everything stays inside the 4-38 Hz band of interest.
    """
    return 10.0 + 12.0 * (label % 2) + 4.0 * (label // 2)


def class_mixing(label: int, n_channels: int = 3) -> np.ndarray:
    """Per-channel amplitude of a class burst; even classes are C3-dominant,
    odd classes C4-dominant."""
    mix = np.full(n_channels, 0.25)
    mix[0 if label % 2 == 0 else n_channels - 1] = 1.0
    return mix


def synthesize_trials(n_per_class: int, classes: int, fs: float = 250.0,
                      n_samples: int = 1000, seed: int = 0,
                      noise_amplitude: float = 0.5,
                      dataset_id: str = "synthetic") -> TrialSet:
    """Deterministic synthetic motor-imagery-like dataset for tests and smoke runs.

    Each trial of class m carries a Hann-windowed sinusoid at
    ``class_frequency(m)`` with channel mixing from ``class_mixing(m)``,
    plus white Gaussian noise of the given amplitude. Pure function of its
    arguments.
    """
    if classes < 2:
        raise ValueError("need at least two classes")
    if max(class_frequency(m) for m in range(classes)) >= fs / 2:
        raise ValueError("class frequency would exceed Nyquist; lower `classes` or raise fs")
    rng = np.random.default_rng(seed)
    t = np.arange(n_samples) / fs
    envelope = np.hanning(n_samples)
    data = np.empty((n_per_class * classes, 3, n_samples), dtype=np.float32)
    labels = np.repeat(np.arange(classes), n_per_class)
    for i, label in enumerate(labels):
        phase = rng.uniform(0.0, 2.0 * np.pi)
        amp = 1.0 + 0.1 * rng.standard_normal()
        burst = amp * envelope * np.sin(2.0 * np.pi * class_frequency(label) * t + phase)
        trial = class_mixing(label)[:, None] * burst[None, :]
        trial = trial + noise_amplitude * rng.standard_normal((3, n_samples))
        data[i] = trial.astype(np.float32)
    return TrialSet(data=data, labels=labels, fs=fs, n_classes=classes,
                    dataset_id=dataset_id, subject_id=f"seed{seed}")
