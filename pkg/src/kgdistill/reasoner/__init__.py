from .abox import (
    AboxEngine,
    Clash,
    ClashKind,
    InconsistentInputError,
    check_consistency,
    realize,
)
from .closure import SchemaClosure, SchemaIndex, closure_from_index, materialize_schema
from .exchange import read_exchange_inferred, write_exchange_schema
from .justify import Justification, dedup_justifications, minimize_support
from .satisfiability import UnsatReport, clean_schema, detect_unsatisfiable, remove_unsatisfiable

__all__ = [
    "AboxEngine",
    "Clash",
    "ClashKind",
    "InconsistentInputError",
    "check_consistency",
    "realize",
    "SchemaClosure",
    "SchemaIndex",
    "closure_from_index",
    "materialize_schema",
    "read_exchange_inferred",
    "write_exchange_schema",
    "Justification",
    "dedup_justifications",
    "minimize_support",
    "UnsatReport",
    "clean_schema",
    "detect_unsatisfiable",
    "remove_unsatisfiable",
]
