import numpy as np
import pytest

from tsff.data_io import (
    TrialSet,
    class_frequency,
    read_archive,
    synthesize_trials,
    write_archive,
)
from tsff.errors import ArchiveCorruptError, ArchiveFormatError, UnsupportedVersionError

HEADER_FIXED = 30  # magic+version+fs+N+C+T+M+offset


def make_set(n=4, c=3, t=16, fs=250.0, seed=0, classes=2):
    rng = np.random.default_rng(seed)
    return TrialSet(data=rng.standard_normal((n, c, t)).astype(np.float32),
                    labels=rng.integers(0, classes, n), fs=fs, n_classes=classes)


def test_archive_size_minimal(tmp_path):
    trials = TrialSet(data=np.zeros((1, 3, 4), dtype=np.float32),
                      labels=[0], fs=250.0, n_classes=2)
    path = tmp_path / "tiny.tsff"
    write_archive(trials, path)
    name_block = sum(1 + len(ch) for ch in trials.channels)
    assert path.stat().st_size == HEADER_FIXED + 2 * 1 + name_block + 48


def test_archive_size_full_session(tmp_path):
    trials = make_set(n=144, c=3, t=1000)
    path = tmp_path / "session.tsff"
    write_archive(trials, path)
    loaded = read_archive(path)
    name_block = sum(1 + len(ch) for ch in trials.channels)
    data_offset = HEADER_FIXED + 2 * 144 + name_block
    assert path.stat().st_size - data_offset == 144 * 3 * 1000 * 4 == 1_728_000
    assert loaded.data.shape == (144, 3, 1000)


def test_round_trip_bit_exact(tmp_path):
    trials = make_set(seed=3)
    path = tmp_path / "roundtrip.tsff"
    write_archive(trials, path)
    loaded = read_archive(path)
    assert np.array_equal(loaded.data, trials.data)
    assert np.array_equal(loaded.labels, trials.labels)
    assert loaded.fs == trials.fs
    assert loaded.channels == trials.channels
    assert loaded.n_classes == trials.n_classes


def test_bad_magic_rejected(tmp_path):
    path = tmp_path / "bad.tsff"
    write_archive(make_set(), path)
    raw = bytearray(path.read_bytes())
    raw[:4] = b"XXXX"
    path.write_bytes(bytes(raw))
    with pytest.raises(ArchiveFormatError):
        read_archive(path)


def test_truncated_data_rejected(tmp_path):
    path = tmp_path / "short.tsff"
    write_archive(make_set(), path)
    raw = path.read_bytes()
    path.write_bytes(raw[:-10])
    with pytest.raises(ArchiveCorruptError):
        read_archive(path)


def test_newer_version_rejected(tmp_path):
    path = tmp_path / "future.tsff"
    write_archive(make_set(), path)
    raw = bytearray(path.read_bytes())
    raw[4:6] = (99).to_bytes(2, "little")
    path.write_bytes(bytes(raw))
    with pytest.raises(UnsupportedVersionError):
        read_archive(path)


def test_invariants_enforced():
    with pytest.raises(ValueError):
        TrialSet(data=np.zeros((2, 3, 4), dtype=np.float32), labels=[0], fs=250.0)
    with pytest.raises(ValueError):
        TrialSet(data=np.zeros((2, 3, 4), dtype=np.float32), labels=[0, 5],
                 fs=250.0, n_classes=2)
    with pytest.raises(ValueError):
        TrialSet(data=np.zeros((2, 2, 4), dtype=np.float32), labels=[0, 1],
                 fs=250.0, channels=("C3", "Cz", "C4"))
    with pytest.raises(ValueError):
        TrialSet(data=np.zeros((2, 3, 4), dtype=np.float32), labels=[0, 1], fs=0.0)


def test_trialset_immutable():
    trials = make_set()
    with pytest.raises(ValueError):
        trials.data[0, 0, 0] = 1.0


def test_synthesize_deterministic():
    a = synthesize_trials(5, 2, seed=42)
    b = synthesize_trials(5, 2, seed=42)
    assert np.array_equal(a.data, b.data)
    assert np.array_equal(a.labels, b.labels)
    c = synthesize_trials(5, 2, seed=43)
    assert not np.array_equal(a.data, c.data)


def test_synthesize_counts():
    trials = synthesize_trials(30, 2, seed=0)
    assert trials.n_trials == 60
    assert np.sum(trials.labels == 0) == 30
    assert np.sum(trials.labels == 1) == 30


def test_synthesize_noise_free_dominant_bin():
    # with zero noise the strongest DFT bin of the dominant channel must sit
    # exactly at the class frequency
    trials = synthesize_trials(3, 2, fs=250.0, n_samples=1000, seed=1,
                               noise_amplitude=0.0)
    freqs = np.fft.rfftfreq(trials.n_samples, d=1.0 / trials.fs)
    for trial, label in zip(trials.data, trials.labels):
        channel = trial[0] if label % 2 == 0 else trial[2]
        spectrum = np.abs(np.fft.rfft(channel))
        assert freqs[np.argmax(spectrum)] == pytest.approx(class_frequency(label))
