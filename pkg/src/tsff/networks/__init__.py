"""Feature-extraction networks and the checkpoint container."""

from .checkpoint import load_checkpoint, save_checkpoint
from .img_net import ImgNetConfig, TsffImgNet, count_params, param_breakdown
from .raw_net import DepthAttention, RawNetConfig, TsffRawNet, channel_attention

__all__ = [
    "ImgNetConfig", "TsffImgNet", "count_params", "param_breakdown",
    "DepthAttention", "RawNetConfig", "TsffRawNet", "channel_attention",
    "load_checkpoint", "save_checkpoint",
]
