"""Run configuration: every knob of the pipeline in one serializable object.

Configs round-trip through plain dicts (and therefore YAML/JSON), so a run
manifest's config echo is sufficient to reproduce the run. Named presets for
the supported evaluation scenarios ship with the package; explicit values
override preset values, which override dataclass defaults.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field, fields
from importlib import resources
from pathlib import Path

import yaml

from .fusion import FusionConfig
from .networks.img_net import ImgNetConfig
from .networks.raw_net import RawNetConfig
from .preprocess import PreprocessSpec
from .timefreq import CwtSpec

PRESETS = ("smoke_synthetic", "bci2a_binary", "bci2a_4class", "bci2b")


@dataclass(frozen=True)
class SpectrogramSettings:
    beta: float = 1.0
    freq_lo: float = 4.0
    freq_hi: float = 38.0
    n_freqs: int = 69
    stitch: str = "widthwise"
    size: int = 224

    def cwt_spec(self) -> CwtSpec:
        return CwtSpec.linear(self.freq_lo, self.freq_hi, self.n_freqs, self.beta)


@dataclass(frozen=True)
class RawArchSettings:
    """Time-series branch hyperparameters (see configs/raw_net_defaults.yaml)."""

    depth: int = 9
    temporal_filters: int = 24
    spatial_filters: int = 9
    temporal_kernel: int = 75
    pooled_width: int = 64
    attention_kernel: int = 7
    dropout_p: float = 0.65


@dataclass(frozen=True)
class ImgArchSettings:
    feature_channels_last: int = 64
    dropout_p: float = 0.25


@dataclass(frozen=True)
class TsffConfig:
    mode: str = "full"
    dataset_id: str = "synthetic"
    subject_id: str = ""
    n_classes: int = 2
    seed: int = 1
    batch_size: int = 32
    max_epochs: int = 350
    lr: float = 1e-3
    weight_decay: float = 1e-2
    fusion: FusionConfig = field(default_factory=FusionConfig)
    preprocess: PreprocessSpec = field(default_factory=PreprocessSpec)
    spectrogram: SpectrogramSettings = field(default_factory=SpectrogramSettings)
    raw_net: RawArchSettings = field(default_factory=RawArchSettings)
    img_net: ImgArchSettings = field(default_factory=ImgArchSettings)

    def __post_init__(self):
        if self.mode not in ("full", "fusion_no_mmd", "raw_only", "img_only"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not 1 <= self.max_epochs <= 350:
            raise ValueError("max_epochs must lie in [1, 350]")
        if self.batch_size < 1:
            raise ValueError("batch_size must be positive")
        if self.fusion.mmd_weight > 0.0 and self.batch_size < 2:
            raise ValueError("MMD training needs batch_size >= 2")

    def raw_net_config(self, n_channels: int, n_samples: int) -> RawNetConfig:
        return RawNetConfig(n_channels=n_channels, n_samples=n_samples,
                            n_classes=self.n_classes,
                            **dataclasses.asdict(self.raw_net))

    def img_net_config(self) -> ImgNetConfig:
        from .timefreq import image_channels
        return ImgNetConfig(input_size=self.spectrogram.size,
                            in_channels=image_channels(self.spectrogram.stitch),
                            n_classes=self.n_classes,
                            **dataclasses.asdict(self.img_net))

    def to_dict(self) -> dict:
        return _plain(dataclasses.asdict(self))

    @classmethod
    def from_dict(cls, data: dict) -> "TsffConfig":
        return _build(cls, data)

    @classmethod
    def from_yaml(cls, path) -> "TsffConfig":
        with open(path) as fh:
            data = yaml.safe_load(fh) or {}
        return cls.from_dict(data)

    def replacing(self, **updates) -> "TsffConfig":
        """New config with top-level or nested ("fusion.mmd_weight") updates."""
        data = self.to_dict()
        for key, value in updates.items():
            node = data
            *parents, leaf = key.split(".")
            for part in parents:
                node = node[part]
            if leaf not in node:
                raise KeyError(f"unknown config field {key!r}")
            node[leaf] = value
        return type(self).from_dict(data)


_NESTED = {
    "fusion": FusionConfig,
    "preprocess": PreprocessSpec,
    "spectrogram": SpectrogramSettings,
    "raw_net": RawArchSettings,
    "img_net": ImgArchSettings,
}


def _plain(value):
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _build(cls, data: dict):
    known = {f.name: f for f in fields(cls)}
    unknown = set(data) - set(known)
    if unknown:
        raise ValueError(f"unknown {cls.__name__} fields: {sorted(unknown)}")
    kwargs = {}
    for name, value in data.items():
        sub = _NESTED.get(name)
        if sub is not None and isinstance(value, dict):
            base = dataclasses.asdict(sub())
            extra = set(value) - set(base)
            if extra:
                raise ValueError(f"unknown {sub.__name__} fields: {sorted(extra)}")
            base.update(value)
            value = sub(**{k: _tupled(v) for k, v in base.items()})
        kwargs[name] = value
    return cls(**kwargs)


def _tupled(value):
    return tuple(value) if isinstance(value, list) else value


def preset_path(name: str) -> Path:
    """Filesystem path of a named shipped preset."""
    if name not in PRESETS:
        raise ValueError(f"unknown preset {name!r}; available: {PRESETS}")
    return Path(resources.files("tsff").joinpath(f"configs/{name}.yaml"))


def load_config(source: str | Path | None) -> TsffConfig:
    """Load a preset by name, a YAML file by path, or defaults for None."""
    if source is None:
        return TsffConfig()
    if isinstance(source, str) and source in PRESETS:
        return TsffConfig.from_yaml(preset_path(source))
    path = Path(source)
    if not path.exists():
        raise FileNotFoundError(f"config file not found: {path}")
    return TsffConfig.from_yaml(path)
