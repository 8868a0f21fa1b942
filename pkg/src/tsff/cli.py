"""Command-line entry point.

Subcommands: convert, preprocess, spectrogram, train, eval, ablate, plot.
Every run writes a manifest echoing its fully resolved configuration next to
its outputs, so any artifact can be reproduced from the manifest alone.
Flag resolution order: built-in defaults < --config file/preset < explicit
flags. The only environment variable honored is TSFF_CACHE_DIR (spectrogram
cache location).

Exit codes: 0 success, 1 runtime failure (one-line diagnostic on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import evaluation, timefreq, training
from .config import PRESETS, TsffConfig, load_config
from .data_io import TrialSet, read_archive, synthesize_trials, write_archive
from .errors import TsffError
from .preprocess import PreprocessSpec, preprocess_trials


def _write_sidecar(output_path: Path, command: str, resolved: dict):
    manifest = {"command": command, "resolved": resolved}
    Path(str(output_path) + ".manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _load_trials(path) -> TrialSet:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"missing input archive: {path}")
    return read_archive(path)


# ---------------------------------------------------------------- convert

def cmd_convert(args) -> int:
    out = Path(args.output)
    if args.synthetic:
        trials = synthesize_trials(args.n_per_class, args.classes, fs=args.fs,
                                   n_samples=args.samples, seed=args.seed,
                                   noise_amplitude=args.noise)
        source = {"synthetic": True, "n_per_class": args.n_per_class,
                  "classes": args.classes, "fs": args.fs, "samples": args.samples,
                  "seed": args.seed, "noise": args.noise}
    else:
        if args.input is None:
            raise ValueError("convert needs an input .npz (or --synthetic)")
        src = Path(args.input)
        if not src.exists():
            raise FileNotFoundError(f"missing input file: {src}")
        with np.load(src, allow_pickle=False) as archive:
            channels = [str(c) for c in archive["channels"]] \
                if "channels" in archive else ["C3", "Cz", "C4"]
            trials = TrialSet(data=archive["data"], labels=archive["labels"],
                              fs=float(archive["fs"]), channels=channels)
        source = {"input": str(src)}
    write_archive(trials, out)
    _write_sidecar(out, "convert", source)
    print(f"wrote {trials.n_trials} trials ({trials.n_channels} ch x "
          f"{trials.n_samples} samples) to {out}")
    return 0


# -------------------------------------------------------------- preprocess

def cmd_preprocess(args) -> int:
    trials = _load_trials(args.input)
    spec = PreprocessSpec(
        band=None if args.no_filter else (args.band[0], args.band[1]),
        filter_order=args.filter_order,
        window=tuple(args.window) if args.window else None,
        epsilon=args.epsilon,
        alignment="none" if args.no_align else "per-split",
        per_channel_norm=args.per_channel_norm,
    )
    processed, _, zero_mask = preprocess_trials(trials, spec)
    if np.any(zero_mask):
        print(f"warning: {int(np.sum(zero_mask))} all-zero trials left "
              f"unnormalized", file=sys.stderr)
    out = Path(args.output)
    write_archive(processed, out)
    _write_sidecar(out, "preprocess", {"input": str(args.input),
                                       "spec": spec.__dict__ | {"band": spec.band and list(spec.band),
                                                                "window": spec.window and list(spec.window)}})
    print(f"preprocessed {processed.n_trials} trials -> {out}")
    return 0


# ------------------------------------------------------------- spectrogram

def cmd_spectrogram(args) -> int:
    trials = _load_trials(args.input)
    spec = timefreq.CwtSpec.linear(args.freq_range[0], args.freq_range[1],
                                   args.n_freqs, args.beta)
    images = timefreq.spectrogram_batch(trials, spec, stitch=args.stitch,
                                        size=args.size)
    out = Path(args.output)
    resolved = {"input": str(args.input), "beta": args.beta,
                "freq_range": list(args.freq_range), "n_freqs": args.n_freqs,
                "stitch": args.stitch, "size": args.size,
                "backend": timefreq.active_backend()}
    if args.export_images:
        index = timefreq.export_images(images, out, labels=trials.labels)
        _write_sidecar(out / "index.json", "spectrogram", resolved)
        print(f"exported {len(images)} images to {out} (index: {index})")
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        np.savez_compressed(out, images=images, labels=trials.labels)
        _write_sidecar(out, "spectrogram", resolved)
        print(f"wrote spectrogram batch {images.shape} to {out}")
    return 0


# ------------------------------------------------------------------- train

def _resolved_config(args) -> TsffConfig:
    config = load_config(args.config)
    overrides = {}
    for flag, key in (("mode", "mode"), ("seed", "seed"),
                      ("max_epochs", "max_epochs"), ("subject", "subject_id"),
                      ("classes", "n_classes")):
        value = getattr(args, flag, None)
        if value is not None:
            overrides[key] = value
    if getattr(args, "freq_weight", None) is not None:
        overrides["fusion.freq_weight"] = args.freq_weight
    if getattr(args, "mmd_weight", None) is not None:
        overrides["fusion.mmd_weight"] = args.mmd_weight
    return config.replacing(**overrides) if overrides else config


def _synthetic_splits(config: TsffConfig, n_per_class: int = 30):
    spec = config.preprocess
    sets = []
    for offset in (0, 1):
        raw = synthesize_trials(n_per_class, config.n_classes,
                                seed=config.seed + offset)
        processed, _, _ = preprocess_trials(raw, spec)
        sets.append(processed)
    return sets[0], sets[1]


def cmd_train(args) -> int:
    config = _resolved_config(args)
    if args.dataset == "synthetic":
        train_set, test_set = _synthetic_splits(config)
    else:
        if not (args.train and args.test):
            raise ValueError("pass --train/--test archives (or --dataset synthetic)")
        train_set, _, _ = preprocess_trials(_load_trials(args.train), config.preprocess)
        test_set, _, _ = preprocess_trials(_load_trials(args.test), config.preprocess)
    out_dir = Path(args.out)
    result = training.train(train_set, test_set, config, out_dir=out_dir,
                            cache=args.cache_dir)
    print(f"trained {config.mode} for {config.max_epochs} epochs: "
          f"best {100 * result.manifest['best_accuracy']:.1f}% "
          f"(epoch {result.manifest['best_epoch'] + 1}), "
          f"final {100 * result.manifest['final_accuracy']:.1f}%")
    print(f"manifest: {out_dir / training.MANIFEST_NAME}")
    return 0


# -------------------------------------------------------------------- eval

def cmd_eval(args) -> int:
    if args.checkpoint:
        test_set, _, _ = preprocess_trials(_load_trials(args.test),
                                           load_config(args.config).preprocess) \
            if args.preprocess else (_load_trials(args.test), None, None)
        accuracy, predictions = training.evaluate(args.checkpoint, test_set,
                                                  cache=args.cache_dir)
        out = {"accuracy": accuracy, "n_test": len(predictions),
               "predictions": predictions.tolist()}
        if args.out:
            path = Path(args.out)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
            print(f"wrote {path}")
        print(f"accuracy: {100 * accuracy:.2f}% on {len(predictions)} trials")
        return 0
    if not args.runs:
        raise ValueError("pass --checkpoint/--test or --runs")
    manifests = []
    for manifest_path in sorted(Path(args.runs).glob(f"**/{training.MANIFEST_NAME}")):
        manifests.append(json.loads(manifest_path.read_text()))
    if not manifests:
        raise FileNotFoundError(f"no run manifests under {args.runs}")
    report = evaluation.accuracy_table(manifests, which=args.which,
                                       label=args.label)
    if args.dataset:
        published = evaluation.published_results(args.dataset)
        others = {name: vals for name, vals in published["methods"].items()
                  if name != "TSFF-Net" and len(vals) == len(report.accuracies)}
        evaluation.attach_p_values(report, others)
        reference = published["methods"]["TSFF-Net"]
        delta = report.mean - sum(reference) / len(reference)
        print(f"mean {report.mean:.1f}% vs published {sum(reference) / len(reference):.1f}% "
              f"(delta {delta:+.1f} points; informational)")
    if args.out:
        files = evaluation.emit_report(report, args.out)
        for name, p in sorted(report.p_values.items()):
            print(f"wilcoxon vs {name}: p = {p:.4g}")
        print(f"wrote {', '.join(str(f) for f in files)}")
    print(f"subjects: {len(report.per_subject)}  mean {report.mean:.1f}%  "
          f"std {report.std:.1f}")
    return 0


# ------------------------------------------------------------------ ablate

def cmd_ablate(args) -> int:
    config = _resolved_config(args)
    splits = {}
    if args.dataset == "synthetic":
        for i in range(args.subjects):
            subject_config = config.replacing(seed=config.seed + 10 * i)
            splits[f"S{i + 1:02d}"] = _synthetic_splits(subject_config,
                                                        args.n_per_class)
    else:
        if not args.data_dir:
            raise ValueError("pass --data-dir for converted datasets")
        published = evaluation.published_results(args.dataset)
        for subject in published["subjects"]:
            tr, te = evaluation.subject_archives(args.data_dir, args.dataset, subject)
            train_set, _, _ = preprocess_trials(_load_trials(tr), config.preprocess)
            test_set, _, _ = preprocess_trials(_load_trials(te), config.preprocess)
            splits[subject] = (train_set, test_set)
    out_dir = Path(args.out)
    reports = evaluation.run_ablation(splits, config, out_dir=out_dir,
                                      cache=args.cache_dir)
    _write_sidecar(out_dir / "ablation", "ablate", _resolved_config(args).to_dict())
    for arm, report in reports.items():
        print(f"{arm}: mean {report.mean:.1f}% std {report.std:.1f}")
    return 0


# -------------------------------------------------------------------- plot

def cmd_plot(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    wrote = []
    if args.runs:
        groups = {}
        for manifest_path in sorted(Path(args.runs).glob(f"**/{training.MANIFEST_NAME}")):
            manifest = json.loads(manifest_path.read_text())
            groups.setdefault(manifest["config"]["mode"], []).append(manifest)
        curves = {mode: evaluation.epoch_curve(runs) for mode, runs in groups.items()}
        wrote.append(evaluation.plot_epoch_curve(curves, out_dir / "epoch_curves.png"))
    if args.ablation_csv_dir:
        reports = {}
        for csv_path in sorted(Path(args.ablation_csv_dir).glob("*.csv")):
            rows = [line.split(",") for line in csv_path.read_text().splitlines()]
            per_subject = {k: float(v) for k, v in rows if k not in ("mean", "std")}
            reports[csv_path.stem] = evaluation.accuracy_table(per_subject,
                                                               label=csv_path.stem)
        if reports:
            wrote.append(evaluation.plot_ablation_bars(reports,
                                                       out_dir / "ablation_bars.png"))
    if not wrote:
        raise ValueError("nothing to plot; pass --runs and/or --ablation-csv-dir")
    print(f"wrote {', '.join(str(p) for p in wrote)}")
    return 0


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsff",
        description="Time-space-frequency fusion for 3-channel motor-imagery EEG")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="build a trial archive from .npz or synthetic")
    p.add_argument("output", help="output .tsff archive")
    p.add_argument("--input", help=".npz with data (N,C,T), labels (N,), fs, "
                                   "and optional channels")
    p.add_argument("--synthetic", action="store_true")
    p.add_argument("--n-per-class", type=int, default=30)
    p.add_argument("--classes", type=int, default=2)
    p.add_argument("--fs", type=float, default=250.0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--noise", type=float, default=0.5)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("preprocess", help="filter, crop, normalize, align an archive")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--band", nargs=2, type=float, default=[4.0, 38.0],
                   metavar=("LO", "HI"))
    p.add_argument("--no-filter", action="store_true")
    p.add_argument("--filter-order", type=int, default=200)
    p.add_argument("--window", nargs=2, type=float, metavar=("START", "END"),
                   help="crop to this window (seconds from trial start)")
    p.add_argument("--epsilon", type=float, help="alignment regularization")
    p.add_argument("--no-align", action="store_true")
    p.add_argument("--per-channel-norm", action="store_true")
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("spectrogram", help="render trial spectrograms")
    p.add_argument("input")
    p.add_argument("output", help=".npz batch, or a directory with --export-images")
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--freq-range", nargs=2, type=float, default=[4.0, 38.0])
    p.add_argument("--n-freqs", type=int, default=69)
    p.add_argument("--stitch", choices=timefreq.STITCH_MODES, default="widthwise")
    p.add_argument("--size", type=int, default=224)
    p.add_argument("--export-images", action="store_true")
    p.set_defaults(func=cmd_spectrogram)

    def training_flags(p):
        p.add_argument("--config", help=f"preset name {PRESETS} or YAML path")
        p.add_argument("--mode", choices=("full", "fusion_no_mmd", "raw_only",
                                          "img_only"))
        p.add_argument("--seed", type=int)
        p.add_argument("--max-epochs", type=int, dest="max_epochs")
        p.add_argument("--classes", type=int)
        p.add_argument("--freq-weight", type=float, dest="freq_weight")
        p.add_argument("--mmd-weight", type=float, dest="mmd_weight")
        p.add_argument("--cache-dir", help="spectrogram cache (default "
                                           "$TSFF_CACHE_DIR or ~/.cache/tsff)")

    p = sub.add_parser("train", help="train one run and write manifest + checkpoint")
    p.add_argument("--dataset", default="archives",
                   help="'synthetic' or a label recorded in the manifest")
    p.add_argument("--train", help="training-split archive")
    p.add_argument("--test", help="test-split archive")
    p.add_argument("--subject")
    p.add_argument("--out", required=True, help="run output directory")
    training_flags(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("eval", help="evaluate a checkpoint, or aggregate runs")
    p.add_argument("--checkpoint")
    p.add_argument("--test", help="test archive for --checkpoint")
    p.add_argument("--preprocess", action="store_true",
                   help="preprocess the test archive before evaluating")
    p.add_argument("--config", help="preprocessing preset for --preprocess")
    p.add_argument("--runs", help="directory of run manifests to aggregate")
    p.add_argument("--which", choices=("best", "final"), default="best")
    p.add_argument("--dataset", help="published-results key for comparison "
                                     "(e.g. bci4-2a-binary)")
    p.add_argument("--label", default="report")
    p.add_argument("--out", help="output file (single) or directory (aggregate)")
    p.add_argument("--cache-dir")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("ablate", help="run the four-arm ablation study")
    p.add_argument("--dataset", default="synthetic")
    p.add_argument("--data-dir", help="root of converted archives")
    p.add_argument("--subjects", type=int, default=2,
                   help="synthetic subjects to simulate")
    p.add_argument("--n-per-class", type=int, default=30)
    p.add_argument("--out", required=True)
    training_flags(p)
    p.set_defaults(func=cmd_ablate)

    p = sub.add_parser("plot", help="epoch curves and ablation bars from outputs")
    p.add_argument("--runs", help="directory of run manifests")
    p.add_argument("--ablation-csv-dir", help="directory of ablation CSVs")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TsffError, OSError, ValueError, KeyError) as exc:
        print(f"tsff {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
