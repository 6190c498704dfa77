from .degrees import DegreeIndex, compute_degrees
from .sources import GraphSource, LocalSource
from .sparql import EndpointError, SparqlClient, SparqlSource
from .subset import ABoxSubset, extract_subset, fetch_class_assertions

__all__ = [
    "DegreeIndex",
    "compute_degrees",
    "GraphSource",
    "LocalSource",
    "EndpointError",
    "SparqlClient",
    "SparqlSource",
    "ABoxSubset",
    "extract_subset",
    "fetch_class_assertions",
]
