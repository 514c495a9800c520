from .comparison import (
    ComparisonReport,
    NoSharedProblemsError,
    ProblemComparison,
    compare_result_files,
)
from .models import ExperimentManifest, ResultEntry, ResultFile
from .result_store import ResultStore

__all__ = [
    "ComparisonReport",
    "NoSharedProblemsError",
    "ProblemComparison",
    "compare_result_files",
    "ExperimentManifest",
    "ResultEntry",
    "ResultFile",
    "ResultStore",
]
