"""Deterministic end-to-end training loop and run manifests.

One call to train() is one run: seeded init, seeded shuffling, AdamW with
default coefficients on mini-batches of 32, at most 350 epochs, dropout and
batchnorm statistics active only while training. Per-epoch train loss and
test accuracy are recorded; the manifest echoes the fully resolved config,
so any run can be reproduced from its manifest alone.

Spectrograms are the expensive step, so batches are computed once per
(trials, CWT settings, stitch, size, kernel backend) and cached on disk
under a content hash.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import torch

from . import timefreq
from .config import TsffConfig
from .data_io import TrialSet
from .errors import DivergenceError
from .fusion import TsffNet
from .networks import TsffImgNet, TsffRawNet, load_checkpoint, save_checkpoint

MANIFEST_NAME = "manifest.json"
CHECKPOINT_NAME = "checkpoint.npz"


def cache_dir(override=None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get("TSFF_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "tsff"


def _spectrogram_key(trials: TrialSet, config: TsffConfig) -> str:
    h = hashlib.sha256()
    h.update(trials.data.tobytes())
    h.update(np.ascontiguousarray(trials.labels).tobytes())
    spec = config.spectrogram
    meta = (trials.fs, spec.cwt_spec().key(), spec.stitch, spec.size,
            sorted(timefreq.kernel_info().items()))
    h.update(repr(meta).encode())
    return h.hexdigest()


def spectrograms_for(trials: TrialSet, config: TsffConfig,
                     cache=None) -> np.ndarray:
    """Spectrogram batch for a trial set, computed once and cached on disk."""
    directory = cache_dir(cache)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{_spectrogram_key(trials, config)}.npz"
    if path.exists():
        with np.load(path) as archive:
            return archive["images"]
    spec = config.spectrogram
    images = timefreq.spectrogram_batch(trials, spec.cwt_spec(),
                                        stitch=spec.stitch, size=spec.size)
    tmp = path.with_suffix(".tmp.npz")
    np.savez_compressed(tmp, images=images)
    tmp.replace(path)
    return images


def build_model(config: TsffConfig, n_channels: int, n_samples: int) -> TsffNet:
    """Instantiate both branches and the fused head for a trial shape."""
    raw = TsffRawNet(config.raw_net_config(n_channels, n_samples), seed=config.seed)
    img = TsffImgNet(config.img_net_config(), seed=config.seed + 1)
    return TsffNet(raw, img, config.fusion, mode=config.mode, seed=config.seed + 2)


@dataclass
class TrainResult:
    manifest: dict
    model: TsffNet
    checkpoint_path: Path | None


def _batches(n: int, batch_size: int, generator: torch.Generator):
    order = torch.randperm(n, generator=generator)
    for start in range(0, n, batch_size):
        yield order[start:start + batch_size]


def _predict(model: TsffNet, raw: torch.Tensor | None,
             images: torch.Tensor | None, n: int) -> torch.Tensor:
    model.eval()
    preds = []
    with torch.no_grad():
        for start in range(0, n, 128):
            sl = slice(start, start + 128)
            out = model(raw[sl] if raw is not None else None,
                        images[sl] if images is not None else None)
            preds.append(out["logits"].argmax(dim=1))
    return torch.cat(preds)


def train(train_set: TrialSet, test_set: TrialSet, config: TsffConfig,
          out_dir=None, cache=None) -> TrainResult:
    """Train per the configured mode and record the full per-epoch history.

    Expects preprocessed trials (filtered, normalized, aligned). Raises
    DivergenceError (with the epoch index) on a non-finite loss. When
    out_dir is given, writes manifest.json and checkpoint.npz there.
    """
    if train_set.n_classes != config.n_classes:
        raise ValueError(f"config expects {config.n_classes} classes, trials "
                         f"carry {train_set.n_classes}")
    start_time = time.perf_counter()
    torch.manual_seed(config.seed)
    model = build_model(config, train_set.n_channels, train_set.n_samples)

    def tensors(trials):
        raw = torch.from_numpy(trials.data.copy()) if model.uses_raw else None
        images = None
        if model.uses_images:
            images = torch.from_numpy(spectrograms_for(trials, config, cache))
        labels = torch.from_numpy(trials.labels.copy())
        return raw, images, labels

    raw_tr, img_tr, y_tr = tensors(train_set)
    raw_te, img_te, y_te = tensors(test_set)
    needs_pairs = model.mode == "full" and config.fusion.mmd_weight > 0.0

    optimizer = torch.optim.AdamW(model.parameters(), lr=config.lr,
                                  weight_decay=config.weight_decay)
    shuffler = torch.Generator().manual_seed(config.seed)
    train_losses, test_accuracies = [], []
    n = train_set.n_trials
    for epoch in range(config.max_epochs):
        model.train()
        epoch_losses = []
        for idx in _batches(n, config.batch_size, shuffler):
            if needs_pairs and len(idx) < 2:
                continue  # a singleton tail batch cannot feed the MMD estimator
            optimizer.zero_grad()
            out = model(raw_tr[idx] if raw_tr is not None else None,
                        img_tr[idx] if img_tr is not None else None)
            loss, _ = model.loss(out, y_tr[idx])
            if not torch.isfinite(loss):
                raise DivergenceError(epoch, f"non-finite loss at epoch {epoch}")
            loss.backward()
            optimizer.step()
            epoch_losses.append(loss.item())
        preds = _predict(model, raw_te, img_te, test_set.n_trials)
        accuracy = float((preds == y_te).double().mean())
        train_losses.append(float(np.mean(epoch_losses)))
        test_accuracies.append(accuracy)

    best_epoch = int(np.argmax(test_accuracies))
    manifest = {
        "config": config.to_dict(),
        "dataset_id": train_set.dataset_id or config.dataset_id,
        "subject_id": train_set.subject_id or config.subject_id,
        "n_train": train_set.n_trials,
        "n_test": test_set.n_trials,
        "train_loss": train_losses,
        "test_accuracy": test_accuracies,
        "best_epoch": best_epoch,
        "best_accuracy": test_accuracies[best_epoch],
        "final_accuracy": test_accuracies[-1],
        "kernels": timefreq.kernel_info(),
        "wall_time_s": time.perf_counter() - start_time,
    }
    checkpoint_path = None
    if out_dir is not None:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        checkpoint_path = save_checkpoint(out_dir / CHECKPOINT_NAME, model,
                                          config.to_dict())
        manifest["checkpoint"] = CHECKPOINT_NAME
        write_manifest(out_dir / MANIFEST_NAME, manifest)
    return TrainResult(manifest=manifest, model=model, checkpoint_path=checkpoint_path)


def write_manifest(path, manifest: dict) -> Path:
    path = Path(path)
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return path


def load_model(checkpoint_path, n_channels: int, n_samples: int):
    """Rebuild a model from a checkpoint; returns (model, TsffConfig)."""
    state, config_dict = load_checkpoint(checkpoint_path)
    config = TsffConfig.from_dict(config_dict)
    model = build_model(config, n_channels, n_samples)
    model.load_state_dict(state)
    model.eval()
    return model, config


def evaluate(model_or_checkpoint, test_set: TrialSet, config: TsffConfig | None = None,
             cache=None):
    """Accuracy and per-trial predictions of a trained model on a test set."""
    if isinstance(model_or_checkpoint, (str, Path)):
        model, config = load_model(model_or_checkpoint, test_set.n_channels,
                                   test_set.n_samples)
    else:
        model = model_or_checkpoint
        if config is None:
            raise ValueError("pass the run config when evaluating a live model")
    raw = torch.from_numpy(test_set.data.copy()) if model.uses_raw else None
    images = None
    if model.uses_images:
        images = torch.from_numpy(spectrograms_for(test_set, config, cache))
    preds = _predict(model, raw, images, test_set.n_trials)
    labels = torch.from_numpy(test_set.labels.copy())
    accuracy = float((preds == labels).double().mean())
    return accuracy, preds.numpy()
