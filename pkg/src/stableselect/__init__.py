"""Stability-aggregated knockoff variable selection with PFER / k-FWER control."""

__version__ = "0.1.0"

from .core import (
    Dataset,
    ErrorTarget,
    GroupPartition,
    SelectionRecord,
    SelectionSet,
    dataset_from_csv,
    make_trivial_partition,
    selection_count_threshold,
)
from .errors import (
    CalibrationInfeasibleError,
    ConfigError,
    InvalidDataError,
    NumericalError,
    StableSelectError,
)

__all__ = [
    "Dataset",
    "ErrorTarget",
    "GroupPartition",
    "SelectionRecord",
    "SelectionSet",
    "dataset_from_csv",
    "make_trivial_partition",
    "selection_count_threshold",
    "StableSelectError",
    "ConfigError",
    "InvalidDataError",
    "CalibrationInfeasibleError",
    "NumericalError",
    "__version__",
]
