"""Time-space-frequency feature fusion for 3-channel motor-imagery EEG.

Pipeline: trial archives (data_io) -> filtering, normalization, Euclidean
alignment (preprocess) -> Morlet scalogram images (timefreq) -> the two
feature branches and their MMD-constrained weighted fusion (networks,
fusion) -> seeded training runs (training) -> statistics and reports
(evaluation). The `tsff` console script drives it all.
"""

__version__ = "0.1.0"

from .config import TsffConfig, load_config
from .data_io import TrialSet, read_archive, synthesize_trials, write_archive

__all__ = ["TsffConfig", "load_config", "TrialSet", "read_archive",
           "synthesize_trials", "write_archive", "__version__"]
