"""Time-space feature extractor (the time-series branch).

Four stages: a learnable channel-attention tensor that diffuses the three
electrodes into a depth dimension, a separable temporal convolution, a depth
attention block that reweights depth planes from their temporal profile, and
a separable spatial convolution that collapses the electrode axis. The
closing adaptive average pool fixes the temporal width so the flattened
feature length equals the spectrogram branch's (9 * 64 = 576 by default).

Stage hyperparameters follow the reference lightweight decoder's defaults,
frozen in configs/raw_net_defaults.yaml; RawNetConfig must stay in sync with
that file (a test enforces it).
"""

from __future__ import annotations

from dataclasses import dataclass

import torch
from torch import nn


@dataclass(frozen=True)
class RawNetConfig:
    n_channels: int = 3
    n_samples: int = 1000
    n_classes: int = 2
    depth: int = 9
    temporal_filters: int = 24
    spatial_filters: int = 9
    temporal_kernel: int = 75
    pooled_width: int = 64
    attention_kernel: int = 7
    dropout_p: float = 0.65

    def __post_init__(self):
        if self.n_samples < self.temporal_kernel:
            raise ValueError(f"n_samples {self.n_samples} shorter than the "
                             f"temporal kernel {self.temporal_kernel}")
        if self.conv_width < self.pooled_width:
            raise ValueError(f"cannot pool {self.conv_width} columns up to "
                             f"{self.pooled_width}")

    @property
    def conv_width(self) -> int:
        """Temporal width after the (valid) temporal convolution."""
        return self.n_samples - self.temporal_kernel + 1

    @property
    def feature_dim(self) -> int:
        return self.spatial_filters * self.pooled_width


def channel_attention(x: torch.Tensor, attention: torch.Tensor) -> torch.Tensor:
    """Contract the depth axis of (N, D_in, C, T) with a (D_out, D_in, C) tensor.

    out[n, h, c, t] = sum_d x[n, d, c, t] * attention[h, d, c]; linear in both
    arguments. The network input has D_in = 1, so this lifts each electrode
    into D_out learned depth planes.
    """
    if x.ndim != 4 or attention.ndim != 3:
        raise ValueError("expected x (N, D, C, T) and attention (H, D, C)")
    if x.shape[1] != attention.shape[1] or x.shape[2] != attention.shape[2]:
        raise ValueError(f"shape mismatch: x {tuple(x.shape)} vs "
                         f"attention {tuple(attention.shape)}")
    return torch.einsum("ndct,hdc->nhct", x, attention)


class DepthAttention(nn.Module):
    """Reweight depth planes by a softmax over a smoothed temporal profile.

    The (N, D, C, T) input is averaged over electrodes, convolved along the
    depth axis with a k-tap kernel, softmaxed over depth, and multiplied back
    (scaled by D so the average plane gain stays near one).
    """

    def __init__(self, width: int, depth: int, kernel: int = 7):
        super().__init__()
        self.depth = depth
        self.pool = nn.AdaptiveAvgPool2d((1, width))
        self.conv = nn.Conv2d(1, 1, kernel_size=(kernel, 1),
                              padding=(kernel // 2, 0), bias=True)
        self.softmax = nn.Softmax(dim=-2)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        pooled = self.pool(x)                  # N, D, 1, T
        profile = pooled.transpose(-2, -3)     # N, 1, D, T
        weight = self.softmax(self.conv(profile))
        return x * weight.transpose(-2, -3) * self.depth


class TsffRawNet(nn.Module):
    """Time-space feature extractor with an optional classifier head."""

    def __init__(self, config: RawNetConfig, seed: int | None = None):
        super().__init__()
        self.config = config
        c, d = config.n_channels, config.depth
        f1, f2 = config.temporal_filters, config.spatial_filters
        self.channel_weight = nn.Parameter(torch.randn(d, 1, c))
        self.temporal_conv = nn.Sequential(
            nn.Conv2d(d, f1, 1, bias=False),
            nn.BatchNorm2d(f1),
            nn.Conv2d(f1, f1, (1, config.temporal_kernel), groups=f1, bias=False),
            nn.BatchNorm2d(f1),
            nn.GELU(),
        )
        self.depth_attention = DepthAttention(config.conv_width, f1,
                                              config.attention_kernel)
        self.spatial_conv = nn.Sequential(
            nn.Conv2d(f1, f2, 1, bias=False),
            nn.BatchNorm2d(f2),
            nn.Conv2d(f2, f2, (c, 1), groups=f2, bias=False),
            nn.BatchNorm2d(f2),
            nn.GELU(),
        )
        self.norm = nn.Sequential(
            nn.AdaptiveAvgPool2d((1, config.pooled_width)),
            nn.Dropout(config.dropout_p),
        )
        self.fc = nn.Linear(config.feature_dim, config.n_classes)
        if seed is not None:
            self.reset_parameters(seed)

    def reset_parameters(self, seed: int):
        """Deterministic re-init: channel-attention tensor standard normal,
        conv/linear weights uniform in +-1/sqrt(fan_in), batchnorm 1/0."""
        with torch.random.fork_rng():
            torch.manual_seed(seed)
            nn.init.normal_(self.channel_weight)
            for mod in self.modules():
                if isinstance(mod, (nn.Conv2d, nn.Linear)):
                    fan_in = mod.weight.shape[1:].numel()
                    bound = fan_in ** -0.5
                    nn.init.uniform_(mod.weight, -bound, bound)
                    if mod.bias is not None:
                        nn.init.uniform_(mod.bias, -bound, bound)
                elif isinstance(mod, nn.BatchNorm2d):
                    mod.reset_parameters()
                    mod.reset_running_stats()

    def features(self, trials: torch.Tensor) -> torch.Tensor:
        """(N, C, T) -> flattened (N, feature_dim)."""
        cfg = self.config
        if trials.ndim != 3 or trials.shape[1] != cfg.n_channels \
                or trials.shape[2] != cfg.n_samples:
            raise ValueError(f"expected (N, {cfg.n_channels}, {cfg.n_samples}), "
                             f"got {tuple(trials.shape)}")
        x = channel_attention(trials.unsqueeze(1), self.channel_weight)
        x = self.temporal_conv(x)
        x = self.depth_attention(x)
        x = self.spatial_conv(x)
        x = self.norm(x)
        return x.flatten(1)

    def forward(self, trials: torch.Tensor) -> torch.Tensor:
        return self.fc(self.features(trials))
