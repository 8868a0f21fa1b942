import json

import numpy as np
import pytest

from tsff.cli import main
from tsff.data_io import read_archive, synthesize_trials, write_archive


def run(argv):
    return main([str(a) for a in argv])


@pytest.fixture()
def synthetic_archive(tmp_path):
    path = tmp_path / "synthetic.tsff"
    write_archive(synthesize_trials(4, 2, n_samples=500, seed=0), path)
    return path


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exit_info:
        run(["bogus"])
    assert exit_info.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as exit_info:
        run(["train", "--does-not-exist", "x", "--out", "y"])
    assert exit_info.value.code == 2


def test_help_exits_0():
    with pytest.raises(SystemExit) as exit_info:
        run(["--help"])
    assert exit_info.value.code == 0


def test_convert_synthetic_and_npz(tmp_path):
    out = tmp_path / "synth.tsff"
    assert run(["convert", out, "--synthetic", "--n-per-class", 3,
                "--samples", 400, "--seed", 5]) == 0
    trials = read_archive(out)
    assert trials.n_trials == 6
    assert (tmp_path / "synth.tsff.manifest.json").exists()

    npz = tmp_path / "export.npz"
    np.savez(npz, data=trials.data, labels=trials.labels, fs=250.0,
             channels=np.array(["C3", "Cz", "C4"]))
    out2 = tmp_path / "converted.tsff"
    assert run(["convert", out2, "--input", npz]) == 0
    assert np.array_equal(read_archive(out2).data, trials.data)


def test_convert_missing_input_exits_1(tmp_path, capsys):
    assert run(["convert", tmp_path / "o.tsff", "--input",
                tmp_path / "nope.npz"]) == 1
    assert "nope.npz" in capsys.readouterr().err


def test_preprocess_cli(tmp_path, synthetic_archive):
    out = tmp_path / "pre.tsff"
    assert run(["preprocess", synthetic_archive, out,
                "--band", 8, 30, "--epsilon", 1e-8]) == 0
    processed = read_archive(out)
    assert processed.n_trials == 8
    sidecar = json.loads((tmp_path / "pre.tsff.manifest.json").read_text())
    assert sidecar["command"] == "preprocess"
    assert sidecar["resolved"]["spec"]["band"] == [8.0, 30.0]


def test_preprocess_missing_input_exits_1(tmp_path, capsys):
    assert run(["preprocess", tmp_path / "missing.tsff", tmp_path / "o.tsff"]) == 1
    assert "missing.tsff" in capsys.readouterr().err


def test_spectrogram_cli_npz_and_export(tmp_path, synthetic_archive):
    out = tmp_path / "spect.npz"
    assert run(["spectrogram", synthetic_archive, out, "--size", 48,
                "--n-freqs", 10, "--freq-range", 8, 38]) == 0
    with np.load(out) as archive:
        assert archive["images"].shape == (8, 3, 48, 48)

    export_dir = tmp_path / "images"
    assert run(["spectrogram", synthetic_archive, export_dir, "--size", 48,
                "--n-freqs", 10, "--freq-range", 8, 38, "--export-images"]) == 0
    index = json.loads((export_dir / "index.json").read_text())
    assert len(index) == 8
    assert (export_dir / index["0"]["file"]).exists()


def test_train_eval_plot_cycle(tmp_path):
    run_dir = tmp_path / "run"
    args = ["train", "--dataset", "synthetic", "--out", run_dir,
            "--config", "smoke_synthetic", "--max-epochs", 2, "--seed", 3,
            "--mode", "raw_only", "--cache-dir", tmp_path / "cache"]
    assert run(args) == 0
    manifest = json.loads((run_dir / "manifest.json").read_text())
    assert manifest["config"]["max_epochs"] == 2      # flag beat the preset
    assert manifest["config"]["mode"] == "raw_only"
    assert manifest["config"]["fusion"]["freq_weight"] == 0.5  # preset kept

    test_archive = tmp_path / "test.tsff"
    write_archive(synthesize_trials(4, 2, seed=8), test_archive)
    assert run(["eval", "--checkpoint", run_dir / "checkpoint.npz",
                "--test", test_archive, "--preprocess",
                "--config", "smoke_synthetic",
                "--out", tmp_path / "eval.json"]) == 0
    payload = json.loads((tmp_path / "eval.json").read_text())
    assert 0.0 <= payload["accuracy"] <= 1.0
    assert len(payload["predictions"]) == 8

    assert run(["eval", "--runs", tmp_path, "--out", tmp_path / "agg",
                "--label", "runs"]) == 0
    assert (tmp_path / "agg" / "runs.csv").exists()

    assert run(["plot", "--runs", tmp_path, "--out", tmp_path / "plots"]) == 0
    assert (tmp_path / "plots" / "epoch_curves.png").stat().st_size > 0


def test_eval_runs_empty_exits_1(tmp_path, capsys):
    assert run(["eval", "--runs", tmp_path / "empty"]) == 1
    assert "manifest" in capsys.readouterr().err


def test_ablate_synthetic(tmp_path):
    out = tmp_path / "ablation"
    config = tmp_path / "tiny.yaml"
    config.write_text("""
max_epochs: 2
batch_size: 8
seed: 2
fusion: {freq_weight: 0.5, mmd_weight: 0.1}
spectrogram: {size: 64, n_freqs: 10, freq_lo: 8.0}
raw_net: {depth: 3, temporal_filters: 6, spatial_filters: 4,
          temporal_kernel: 15, pooled_width: 16}
""")
    assert run(["ablate", "--dataset", "synthetic", "--subjects", 1,
                "--n-per-class", 3, "--out", out, "--config", config,
                "--cache-dir", tmp_path / "cache"]) == 0
    csvs = sorted(p.name for p in out.glob("*.csv"))
    assert csvs == ["fusion_no_mmd.csv", "tsff_img_only.csv",
                    "tsff_net.csv", "tsff_raw_only.csv"]
    assert (out / "ablation_bars.png").exists()


def test_console_script_installed():
    import subprocess
    result = subprocess.run(["tsff", "--help"], capture_output=True, text=True)
    assert result.returncode == 0
    assert "convert" in result.stdout and "ablate" in result.stdout
