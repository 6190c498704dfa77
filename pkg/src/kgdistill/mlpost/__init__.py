from .coo import CooExport, UnmappedIriError, export_coo, sha256_file, write_coo
from .idmaps import ID_MAP_FILES, IdMaps, build_id_maps, read_id_maps, write_id_maps
from .jsonconv import json_to_axioms, owl_to_json
from .splitting import Split, filter_inversion_leakage, split
from .stats import (
    AXIOM_CENSUS_TYPES,
    StatsReport,
    avg_triples_per_property,
    compute_stats,
    property_category,
)

__all__ = [
    "CooExport",
    "UnmappedIriError",
    "export_coo",
    "sha256_file",
    "write_coo",
    "ID_MAP_FILES",
    "IdMaps",
    "build_id_maps",
    "read_id_maps",
    "write_id_maps",
    "json_to_axioms",
    "owl_to_json",
    "Split",
    "filter_inversion_leakage",
    "split",
    "AXIOM_CENSUS_TYPES",
    "StatsReport",
    "avg_triples_per_property",
    "compute_stats",
    "property_category",
]
