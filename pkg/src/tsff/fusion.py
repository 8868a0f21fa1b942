"""Feature fusion and its losses.

The two branch feature matrices (time-space ``S`` and time-frequency ``F``,
both N x D) are combined two ways during training: a weighted sum feeds the
shared classifier head, and a multi-bandwidth Gaussian MMD pulls the two
feature distributions together in kernel space. Features are softmax
normalized before entering the MMD so the branches' amplitude scales cannot
dominate the kernel. The total training loss is

    loss = cross_entropy + mmd_weight * mmd(softmax(S), softmax(F)).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import torch
from torch import nn

from .errors import EstimatorError

DEFAULT_BANDWIDTH_MULTIPLIERS = (0.25, 0.5, 1.0, 2.0, 4.0)


@dataclass(frozen=True)
class FusionConfig:
    """Weights and kernel settings for the fusion stage.

    freq_weight is the share of the time-frequency features in the fused
    representation (0 = time-space only, 1 = time-frequency only).
    """

    freq_weight: float = 0.001
    mmd_weight: float = 0.0
    bandwidth_multipliers: tuple[float, ...] = DEFAULT_BANDWIDTH_MULTIPLIERS
    softmax_axis: str = "features"   # "features" (per sample) or "batch"
    fuse_normalized: bool = False    # fuse softmaxed features instead of raw

    def __post_init__(self):
        if not 0.0 <= self.freq_weight <= 1.0:
            raise ValueError(f"freq_weight must be in [0, 1], got {self.freq_weight}")
        if self.mmd_weight < 0.0:
            raise ValueError(f"mmd_weight must be >= 0, got {self.mmd_weight}")
        if self.softmax_axis not in ("features", "batch"):
            raise ValueError(f"softmax_axis must be 'features' or 'batch'")
        if len(self.bandwidth_multipliers) == 0:
            raise ValueError("need at least one bandwidth multiplier")
        object.__setattr__(self, "bandwidth_multipliers",
                           tuple(float(m) for m in self.bandwidth_multipliers))


def softmax_normalize(x: torch.Tensor, axis: str = "features") -> torch.Tensor:
    """Max-stabilized softmax over each sample's features (or over the batch)."""
    if axis not in ("features", "batch"):
        raise ValueError("axis must be 'features' or 'batch'")
    return torch.softmax(x, dim=1 if axis == "features" else 0)


def _pairwise_sq_dists(a: torch.Tensor, b: torch.Tensor) -> torch.Tensor:
    diff = a.unsqueeze(1) - b.unsqueeze(0)
    return diff.pow(2).sum(-1)


def mmd_loss(s_norm: torch.Tensor, f_norm: torch.Tensor,
             config: FusionConfig = FusionConfig()) -> torch.Tensor:
    """Squared MMD between the two feature batches (biased V-statistic).

    Kernel: mean of Gaussians exp(-d^2 / bw) with bandwidths
    bw = median-of-pairwise-squared-distances * multipliers, the median taken
    over all distinct pairs of the joint (2N) sample. The V-statistic keeps
    the kernel-matrix diagonals, so the estimate is always nonnegative and
    exactly zero for identical batches.
    """
    if s_norm.shape != f_norm.shape or s_norm.ndim != 2:
        raise ValueError(f"expected equal (N, D) shapes, got "
                         f"{tuple(s_norm.shape)} and {tuple(f_norm.shape)}")
    n = s_norm.shape[0]
    if n < 2:
        raise EstimatorError("MMD needs at least two samples per batch")
    joint = torch.cat([s_norm, f_norm], dim=0)
    sq = _pairwise_sq_dists(joint, joint)
    off_diag = sq[~torch.eye(2 * n, dtype=torch.bool, device=sq.device)]
    median = off_diag.median()
    if median <= 0.0:
        median = torch.ones_like(median)
    k_ss = k_ff = k_sf = 0.0
    for mult in config.bandwidth_multipliers:
        kernel = torch.exp(-sq / (median * mult))
        k_ss = k_ss + kernel[:n, :n].mean()
        k_ff = k_ff + kernel[n:, n:].mean()
        k_sf = k_sf + kernel[:n, n:].mean()
    n_kernels = len(config.bandwidth_multipliers)
    return (k_ss + k_ff - 2.0 * k_sf) / n_kernels


def fuse_features(time_space: torch.Tensor, time_freq: torch.Tensor,
                  freq_weight: float) -> torch.Tensor:
    """Weighted sum (1 - w) * S + w * F of the two branch features."""
    if time_space.shape != time_freq.shape:
        raise ValueError(f"feature shapes differ: {tuple(time_space.shape)} vs "
                         f"{tuple(time_freq.shape)}")
    if not 0.0 <= freq_weight <= 1.0:
        raise ValueError(f"freq_weight must be in [0, 1], got {freq_weight}")
    return (1.0 - freq_weight) * time_space + freq_weight * time_freq


def cross_entropy(logits: torch.Tensor, labels: torch.Tensor) -> torch.Tensor:
    """Mean negative log-likelihood of the true classes, log-sum-exp stabilized."""
    if logits.ndim != 2 or labels.ndim != 1 or len(logits) != len(labels):
        raise ValueError("expected logits (N, M) with labels (N,)")
    if labels.numel() and (labels.min() < 0 or labels.max() >= logits.shape[1]):
        raise ValueError(f"labels must lie in [0, {logits.shape[1]})")
    log_probs = logits - torch.logsumexp(logits, dim=1, keepdim=True)
    return -log_probs[torch.arange(len(labels)), labels].mean()


def total_loss(logits: torch.Tensor, labels: torch.Tensor,
               time_space: torch.Tensor, time_freq: torch.Tensor,
               config: FusionConfig):
    """Combined training loss and its parts.

    Returns (loss, {"cross_entropy": ..., "mmd": ...}). With mmd_weight == 0
    the MMD term is skipped entirely, so no gradient flows through it.
    """
    ce = cross_entropy(logits, labels)
    if config.mmd_weight == 0.0:
        return ce, {"cross_entropy": ce, "mmd": None}
    mmd = mmd_loss(softmax_normalize(time_space, config.softmax_axis),
                   softmax_normalize(time_freq, config.softmax_axis), config)
    return ce + config.mmd_weight * mmd, {"cross_entropy": ce, "mmd": mmd}


class TsffNet(nn.Module):
    """Both branches plus one shared classifier head over the fused features.

    Modes: "full" and "fusion_no_mmd" fuse both branches (they differ only in
    the loss's mmd_weight); "raw_only" and "img_only" route a single branch
    through the same head, which is what the ablation arms train.
    """

    MODES = ("full", "fusion_no_mmd", "raw_only", "img_only")

    def __init__(self, raw_net, img_net, fusion: FusionConfig, mode: str = "full",
                 seed: int | None = None):
        super().__init__()
        if mode not in self.MODES:
            raise ValueError(f"unknown mode {mode!r}; expected one of {self.MODES}")
        self.mode = mode
        self.fusion = fusion
        self.raw_net = raw_net if mode != "img_only" else None
        self.img_net = img_net if mode != "raw_only" else None
        dims = {net.config.feature_dim
                for net in (self.raw_net, self.img_net) if net is not None}
        if len(dims) != 1:
            raise ValueError(f"branch feature dims differ: {sorted(dims)}; adjust "
                             f"pooled_width or feature_channels_last")
        classes = {net.config.n_classes
                   for net in (self.raw_net, self.img_net) if net is not None}
        if len(classes) != 1:
            raise ValueError("branch class counts differ")
        self.head = nn.Linear(dims.pop(), classes.pop())
        if seed is not None:
            with torch.random.fork_rng():
                torch.manual_seed(seed)
                bound = self.head.in_features ** -0.5
                nn.init.uniform_(self.head.weight, -bound, bound)
                nn.init.uniform_(self.head.bias, -bound, bound)

    @property
    def uses_images(self) -> bool:
        return self.img_net is not None

    @property
    def uses_raw(self) -> bool:
        return self.raw_net is not None

    def forward(self, trials: torch.Tensor | None,
                images: torch.Tensor | None) -> dict[str, torch.Tensor | None]:
        """Returns {"logits", "time_space", "time_freq"} (absent branch -> None)."""
        s = self.raw_net.features(trials) if self.uses_raw else None
        f = self.img_net.features(images) if self.uses_images else None
        if self.mode == "raw_only":
            fused = s
        elif self.mode == "img_only":
            fused = f
        elif self.fusion.fuse_normalized:
            fused = fuse_features(softmax_normalize(s, self.fusion.softmax_axis),
                                  softmax_normalize(f, self.fusion.softmax_axis),
                                  self.fusion.freq_weight)
        else:
            fused = fuse_features(s, f, self.fusion.freq_weight)
        return {"logits": self.head(fused), "time_space": s, "time_freq": f}

    def loss(self, outputs: dict, labels: torch.Tensor):
        """Training loss for a forward pass, honoring the mode."""
        if self.mode in ("raw_only", "img_only", "fusion_no_mmd") \
                or self.fusion.mmd_weight == 0.0:
            ce = cross_entropy(outputs["logits"], labels)
            return ce, {"cross_entropy": ce, "mmd": None}
        return total_loss(outputs["logits"], labels, outputs["time_space"],
                          outputs["time_freq"], self.fusion)
