"""Aggregation of per-subject runs into tables, curves, and files.

CSV schema (no header; one line per row):
    column 1: subject id, or the aggregate name "mean" / "std"
    column 2: test accuracy in percent, 6 decimal places
Re-emitting the same report writes byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import IncompleteReportError
from .stats import sample_std, wilcoxon_signed_rank


@dataclass
class EvalReport:
    """Per-subject accuracies (%) with their across-subject summary."""

    per_subject: dict[str, float]
    mean: float
    std: float
    which: str = "best"                       # best-epoch or final-epoch accuracy
    label: str = ""
    p_values: dict[str, float] = field(default_factory=dict)
    epoch_curve: list[float] | None = None

    @property
    def subjects(self) -> list[str]:
        return list(self.per_subject)

    @property
    def accuracies(self) -> list[float]:
        return list(self.per_subject.values())


def _accuracy_of(manifest: dict, which: str) -> float:
    if which == "best":
        return 100.0 * manifest["best_accuracy"]
    if which == "final":
        return 100.0 * manifest["final_accuracy"]
    raise ValueError(f"which must be 'best' or 'final', got {which!r}")


def accuracy_table(runs, which: str = "best", expected_subjects=None,
                   label: str = "") -> EvalReport:
    """Summarize per-subject runs (manifest dicts, or a subject -> % mapping).

    Mean and sample std are computed over subjects. Raises
    IncompleteReportError naming the missing ids when expected_subjects is
    given and not fully covered.
    """
    if isinstance(runs, dict):
        per_subject = {str(k): float(v) for k, v in runs.items()}
    else:
        per_subject = {}
        for manifest in runs:
            subject = manifest.get("subject_id") or f"run{len(per_subject):02d}"
            per_subject[subject] = _accuracy_of(manifest, which)
    per_subject = dict(sorted(per_subject.items()))
    if expected_subjects is not None:
        missing = sorted(set(expected_subjects) - set(per_subject))
        if missing:
            raise IncompleteReportError(
                missing, f"missing runs for subjects: {', '.join(missing)}")
    values = list(per_subject.values())
    if not values:
        raise IncompleteReportError([], "no runs to aggregate")
    std = sample_std(values) if len(values) > 1 else 0.0
    return EvalReport(per_subject=per_subject, mean=float(np.mean(values)),
                      std=std, which=which, label=label)


def attach_p_values(report: EvalReport, others: dict[str, list[float]]) -> EvalReport:
    """Paired Wilcoxon p-values of this report's subjects vs other methods'."""
    for name, values in others.items():
        result = wilcoxon_signed_rank(report.accuracies, values)
        report.p_values[name] = result.p_value
    return report


def epoch_curve(runs) -> np.ndarray:
    """Elementwise mean over subjects of the per-epoch test-accuracy curves."""
    curves = [np.asarray(m["test_accuracy"], dtype=float) for m in runs]
    lengths = {len(c) for c in curves}
    if len(lengths) != 1:
        raise ValueError(f"runs disagree on epoch count: {sorted(lengths)}")
    return np.mean(curves, axis=0)


def emit_report(report: EvalReport, out_dir, formats=("csv", "plot")) -> list[Path]:
    """Write the report as CSV and/or plot files; returns the paths written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = report.label or "report"
    written = []
    if "csv" in formats:
        lines = [f"{s},{v:.6f}" for s, v in report.per_subject.items()]
        lines.append(f"mean,{report.mean:.6f}")
        lines.append(f"std,{report.std:.6f}")
        path = out_dir / f"{stem}.csv"
        path.write_text("\n".join(lines) + "\n")
        written.append(path)
    if "plot" in formats and report.epoch_curve is not None:
        written.append(plot_epoch_curve(
            {report.label or "run": np.asarray(report.epoch_curve)},
            out_dir / f"{stem}_epochs.png"))
    return written


def _agg_pyplot():
    import matplotlib
    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt
    return plt


def plot_epoch_curve(curves: dict[str, np.ndarray], path) -> Path:
    """Mean test accuracy per training epoch, one line per labeled run group."""
    plt = _agg_pyplot()
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, curve in curves.items():
        ax.plot(np.arange(1, len(curve) + 1), 100.0 * np.asarray(curve), label=label)
    ax.set_xlabel("epoch")
    ax.set_ylabel("mean test accuracy (%)")
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def plot_ablation_bars(reports: dict[str, EvalReport], path) -> Path:
    """Grouped bar chart: mean accuracy per arm with std error bars."""
    plt = _agg_pyplot()
    names = list(reports)
    means = [reports[n].mean for n in names]
    stds = [reports[n].std for n in names]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.bar(range(len(names)), means, yerr=stds, capsize=4)
    ax.set_xticks(range(len(names)), names, rotation=15)
    ax.set_ylabel("mean test accuracy (%)")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)
