from .config import (
    CurationNeededError,
    CurationReport,
    DecisionFile,
    PipelineConfig,
    Removal,
    Rename,
    removal_of,
)
from .rename import apply_renames, rename_axiom
from .runner import (
    DatasetBundle,
    PipelineRunner,
    RunResult,
    Workspace,
    build_variants,
    is_tautology,
    run,
)

__all__ = [
    "CurationNeededError",
    "CurationReport",
    "DecisionFile",
    "PipelineConfig",
    "Removal",
    "Rename",
    "removal_of",
    "apply_renames",
    "rename_axiom",
    "DatasetBundle",
    "PipelineRunner",
    "RunResult",
    "Workspace",
    "build_variants",
    "is_tautology",
    "run",
]
