import numpy as np
import pytest
import torch

from tsff.data_io import synthesize_trials
from tsff.preprocess import PreprocessSpec, preprocess_trials

torch.set_num_threads(max(1, torch.get_num_threads()))


@pytest.fixture(autouse=True)
def _cache_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("TSFF_CACHE_DIR", str(tmp_path / "cache"))


@pytest.fixture(scope="session")
def smoke_splits():
    """Preprocessed 60-trial synthetic train set plus a held-out test set."""
    spec = PreprocessSpec(band=(4.0, 38.0))
    train_raw = synthesize_trials(30, 2, seed=7)
    test_raw = synthesize_trials(30, 2, seed=8)
    train_set, _, _ = preprocess_trials(train_raw, spec)
    test_set, _, _ = preprocess_trials(test_raw, spec)
    return train_set, test_set


@pytest.fixture(scope="session")
def session_cache(tmp_path_factory):
    """Shared spectrogram cache so expensive batches are computed once."""
    return tmp_path_factory.mktemp("spectrogram-cache")


def random_trials(n=6, c=3, t=400, fs=250.0, seed=0, classes=2):
    rng = np.random.default_rng(seed)
    from tsff.data_io import TrialSet
    return TrialSet(data=rng.standard_normal((n, c, t)).astype(np.float32),
                    labels=rng.integers(0, classes, n), fs=fs,
                    n_classes=classes)
