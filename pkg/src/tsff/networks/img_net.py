"""Shallow 3-block spectrogram CNN (the time-frequency branch).

Three convolutional blocks, each closed by average pooling (chosen over max
pooling because of the low SNR of EEG-derived images) and dropout; the last
block is a separable convolution (pointwise + depthwise, batchnormed). With
the default 224x224 input the flattened feature length is 64*3*3 = 576 and
the standalone binary classifier carries exactly 13,490 learnable
parameters:

    block1 conv 16@4x4 (bias)        784
    block2 conv 32@4x4 (bias)       8224
    block3 pointwise 64@1x1         2048
           batchnorm                 128
           depthwise 64@4x4         1024
           batchnorm                 128
    fc     576 -> 2                 1154
"""

from __future__ import annotations

from dataclasses import dataclass

import torch
from torch import nn


@dataclass(frozen=True)
class ImgNetConfig:
    input_size: int = 224
    in_channels: int = 3
    n_classes: int = 2
    feature_channels_last: int = 64
    dropout_p: float = 0.25

    def __post_init__(self):
        if self.spatial_chain()[-1] < 1:
            raise ValueError(
                f"input_size {self.input_size} collapses to nothing after pooling; "
                f"need at least 39")

    def spatial_chain(self) -> list[int]:
        """Feature-map side length after each stage (conv pads grow maps by 1)."""
        s = self.input_size
        chain = [s]
        s += 1            # conv 4x4 pad 2
        chain.append(s)
        s //= 8           # avgpool 8
        chain.append(s)
        s += 1            # conv 4x4 pad 2
        chain.append(s)
        s //= 3           # avgpool 3
        chain.append(s)
        chain.append(s)   # pointwise 1x1
        s += 1            # depthwise 4x4 pad 2
        chain.append(s)
        s //= 3           # avgpool 3
        chain.append(s)
        return chain

    @property
    def feature_dim(self) -> int:
        side = self.spatial_chain()[-1]
        return self.feature_channels_last * side * side


class TsffImgNet(nn.Module):
    """Time-frequency feature extractor with an optional classifier head."""

    def __init__(self, config: ImgNetConfig, seed: int | None = None):
        super().__init__()
        self.config = config
        k = config.feature_channels_last
        self.block1 = nn.Sequential(
            nn.Conv2d(config.in_channels, 16, 4, stride=1, padding=2, bias=True),
            nn.ReLU(),
            nn.AvgPool2d(8),
            nn.Dropout(config.dropout_p),
        )
        self.block2 = nn.Sequential(
            nn.Conv2d(16, 32, 4, stride=1, padding=2, bias=True),
            nn.ReLU(),
            nn.AvgPool2d(3),
            nn.Dropout(config.dropout_p),
        )
        self.block3 = nn.Sequential(
            nn.Conv2d(32, k, 1, bias=False),
            nn.BatchNorm2d(k),
            nn.Conv2d(k, k, 4, padding=2, groups=k, bias=False),
            nn.BatchNorm2d(k),
            nn.ReLU(),
            nn.AvgPool2d(3),
            nn.Dropout(config.dropout_p),
        )
        self.fc = nn.Linear(config.feature_dim, config.n_classes)
        if seed is not None:
            self.reset_parameters(seed)

    def reset_parameters(self, seed: int):
        """Deterministic re-init: conv/linear weights and biases uniform in
        +-1/sqrt(fan_in), batchnorm scale 1 / shift 0."""
        with torch.random.fork_rng():
            torch.manual_seed(seed)
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

    def features(self, images: torch.Tensor) -> torch.Tensor:
        """(N, C, H, W) -> flattened (N, feature_dim)."""
        if images.shape[1] != self.config.in_channels \
                or images.shape[2] != self.config.input_size \
                or images.shape[3] != self.config.input_size:
            raise ValueError(f"expected (N, {self.config.in_channels}, "
                             f"{self.config.input_size}, {self.config.input_size}), "
                             f"got {tuple(images.shape)}")
        x = self.block1(images)
        x = self.block2(x)
        x = self.block3(x)
        return x.flatten(1)

    def forward(self, images: torch.Tensor) -> torch.Tensor:
        return self.fc(self.features(images))


def count_params(module: nn.Module) -> int:
    """Learnable parameters only (batchnorm running stats are buffers)."""
    return sum(p.numel() for p in module.parameters() if p.requires_grad)


def param_breakdown(net: TsffImgNet) -> dict[str, int]:
    """Per-layer learnable parameter counts, in architecture order."""
    b3 = net.block3
    return {
        "conv1": count_params(net.block1),
        "conv2": count_params(net.block2),
        "pointwise": count_params(b3[0]),
        "batchnorm1": count_params(b3[1]),
        "depthwise": count_params(b3[2]),
        "batchnorm2": count_params(b3[3]),
        "fc": count_params(net.fc),
    }
