import json

import numpy as np
import pytest
import torch

from tsff.config import TsffConfig
from tsff.data_io import TrialSet, synthesize_trials
from tsff.errors import DivergenceError
from tsff.networks import load_checkpoint, save_checkpoint
from tsff.training import build_model, evaluate, spectrograms_for, train

TINY = TsffConfig.from_dict({
    "mode": "full",
    "seed": 11,
    "max_epochs": 2,
    "batch_size": 8,
    "fusion": {"freq_weight": 0.5, "mmd_weight": 0.1},
    "spectrogram": {"size": 64, "n_freqs": 12, "freq_lo": 8.0},
    "raw_net": {"depth": 3, "temporal_filters": 6, "spatial_filters": 4,
                "temporal_kernel": 15, "pooled_width": 16},
})


def tiny_sets(seed=0, n_per_class=4, n_samples=500):
    return (synthesize_trials(n_per_class, 2, n_samples=n_samples, seed=seed),
            synthesize_trials(n_per_class, 2, n_samples=n_samples, seed=seed + 1))


def test_train_writes_manifest_and_checkpoint(tmp_path):
    train_set, test_set = tiny_sets()
    result = train(train_set, test_set, TINY, out_dir=tmp_path / "run")
    manifest = json.loads((tmp_path / "run" / "manifest.json").read_text())
    assert manifest["config"] == TINY.to_dict()
    assert len(manifest["train_loss"]) == len(manifest["test_accuracy"]) == 2
    assert manifest["checkpoint"] == "checkpoint.npz"
    assert 0.0 <= manifest["best_accuracy"] <= 1.0
    assert manifest["best_epoch"] == int(np.argmax(manifest["test_accuracy"]))
    assert result.checkpoint_path.exists()


def test_training_is_deterministic(tmp_path):
    train_set, test_set = tiny_sets(seed=5)
    a = train(train_set, test_set, TINY, cache=tmp_path / "c")
    b = train(train_set, test_set, TINY, cache=tmp_path / "c")
    assert a.manifest["train_loss"] == b.manifest["train_loss"]
    assert a.manifest["test_accuracy"] == b.manifest["test_accuracy"]


def test_checkpoint_round_trip(tmp_path):
    train_set, test_set = tiny_sets(seed=6)
    result = train(train_set, test_set, TINY, out_dir=tmp_path / "run",
                   cache=tmp_path / "c")
    state, config_echo = load_checkpoint(result.checkpoint_path)
    assert config_echo == TINY.to_dict()
    reloaded_acc, preds = evaluate(result.checkpoint_path, test_set,
                                   cache=tmp_path / "c")
    live_acc, live_preds = evaluate(result.model, test_set, TINY,
                                    cache=tmp_path / "c")
    assert reloaded_acc == pytest.approx(live_acc, abs=1e-9)
    assert np.array_equal(preds, live_preds)
    assert len(preds) == test_set.n_trials


def test_checkpoint_container_format(tmp_path):
    model = build_model(TINY, 3, 500)
    path = save_checkpoint(tmp_path / "model.npz", model, TINY.to_dict())
    state, config = load_checkpoint(path)
    assert config == TINY.to_dict()
    original = model.state_dict()
    assert set(state) == set(original)
    for key, tensor in state.items():
        assert torch.allclose(tensor, original[key].float(), atol=1e-7)


def test_raw_only_mode_skips_spectrograms(tmp_path):
    config = TINY.replacing(mode="raw_only", **{"fusion.mmd_weight": 0.0})
    train_set, test_set = tiny_sets(seed=7)
    cache = tmp_path / "cache"
    result = train(train_set, test_set, config, cache=cache)
    assert not cache.exists() or not list(cache.glob("*.npz"))
    assert len(result.manifest["test_accuracy"]) == 2


def test_untrained_accuracy_near_chance():
    # an untrained net on balanced random labels lands in [0.3, 0.7] with
    # overwhelming probability on 144 trials (binomial tail < 1e-6)
    rng = np.random.default_rng(12)
    trials = TrialSet(data=rng.standard_normal((144, 3, 500)).astype(np.float32),
                      labels=rng.integers(0, 2, 144), fs=250.0, n_classes=2)
    config = TINY.replacing(mode="raw_only", **{"fusion.mmd_weight": 0.0})
    torch.manual_seed(config.seed)
    model = build_model(config, 3, 500)
    accuracy, _ = evaluate(model, trials, config)
    assert 0.3 <= accuracy <= 0.7


def test_non_finite_loss_raises_divergence_error():
    bad = np.zeros((8, 3, 500), dtype=np.float32)
    bad[0, 0, 0] = np.inf
    train_set = TrialSet(data=bad, labels=[0, 1] * 4, fs=250.0, n_classes=2)
    test_set = synthesize_trials(2, 2, n_samples=500, seed=1)
    config = TINY.replacing(mode="raw_only", **{"fusion.mmd_weight": 0.0})
    with pytest.raises(DivergenceError) as err:
        train(train_set, test_set, config)
    assert err.value.epoch == 0


def test_class_count_mismatch_rejected():
    train_set, test_set = tiny_sets(seed=8)
    with pytest.raises(ValueError):
        train(train_set, test_set, TINY.replacing(n_classes=4))


def test_spectrogram_cache_hits(tmp_path):
    trials = synthesize_trials(2, 2, n_samples=500, seed=9)
    first = spectrograms_for(trials, TINY, cache=tmp_path)
    cached = spectrograms_for(trials, TINY, cache=tmp_path)
    assert np.array_equal(first, cached)
    assert len(list(tmp_path.glob("*.npz"))) == 1
