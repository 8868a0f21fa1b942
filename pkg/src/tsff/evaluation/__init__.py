"""Statistics, report aggregation, and study orchestration."""

from .ablation import (
    ABLATION_ARMS,
    ablation_configs,
    published_results,
    run_ablation,
    run_protocol,
    subject_archives,
)
from .report import (
    EvalReport,
    accuracy_table,
    attach_p_values,
    emit_report,
    epoch_curve,
    plot_ablation_bars,
    plot_epoch_curve,
)
from .stats import WilcoxonResult, sample_std, wilcoxon_signed_rank

__all__ = [
    "ABLATION_ARMS", "ablation_configs", "published_results", "run_ablation",
    "run_protocol", "subject_archives", "EvalReport", "accuracy_table",
    "attach_p_values", "emit_report", "epoch_curve", "plot_ablation_bars",
    "plot_epoch_curve", "WilcoxonResult", "sample_std", "wilcoxon_signed_rank",
]
