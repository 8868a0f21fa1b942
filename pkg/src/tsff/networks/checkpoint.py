"""Checkpoint container: named f32 tensors plus a config echo in one .npz.

Deliberately pickle-free so files stay portable and inspectable: tensors are
stored under "tensor/<state_dict key>", the JSON-encoded config under
"__config__", and the container version under "__format__". Round-trip safe.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import torch

CONTAINER_VERSION = 1


def save_checkpoint(path, model: torch.nn.Module, config: dict) -> Path:
    path = Path(path)
    arrays = {f"tensor/{k}": v.detach().cpu().numpy().astype(np.float32)
              for k, v in model.state_dict().items()}
    arrays["__config__"] = np.frombuffer(
        json.dumps(config, sort_keys=True).encode(), dtype=np.uint8)
    arrays["__format__"] = np.array([CONTAINER_VERSION], dtype=np.int64)
    with open(path, "wb") as fh:
        np.savez(fh, **arrays)
    return path


def load_checkpoint(path):
    """Returns (state_dict of float32 tensors, config dict)."""
    with np.load(path) as archive:
        version = int(archive["__format__"][0])
        if version > CONTAINER_VERSION:
            raise ValueError(f"checkpoint container version {version} is newer "
                             f"than supported ({CONTAINER_VERSION})")
        config = json.loads(archive["__config__"].tobytes().decode())
        state = {k[len("tensor/"):]: torch.from_numpy(archive[k].copy())
                 for k in archive.files if k.startswith("tensor/")}
    return state, config
