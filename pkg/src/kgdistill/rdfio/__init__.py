from .documents import (
    RdfFormat,
    detect_format,
    parse_document,
    parse_ontology,
    parse_ontology_file,
    serialize,
    sort_triples,
    write_ontology,
)
from .imports import catalog_resolver, http_resolver, merge_import_closure, UnresolvableImportError
from .ntriples import RdfSyntaxError, parse_ntriples, serialize_ntriples
from .owlmap import (
    DanglingListError,
    ParseReport,
    SKIP_ANNOTATION,
    SKIP_LITERAL,
    SKIP_MALFORMED_LIST,
    SKIP_UNRECOGNIZED,
    axioms_to_triples,
    triples_to_axioms,
)
from .rdfxml import parse_rdfxml
from .terms import BNode, IRI, Literal, TripleRecord
from .turtle import parse_turtle, serialize_turtle

__all__ = [
    "RdfFormat",
    "detect_format",
    "parse_document",
    "parse_ontology",
    "parse_ontology_file",
    "serialize",
    "sort_triples",
    "write_ontology",
    "catalog_resolver",
    "http_resolver",
    "merge_import_closure",
    "UnresolvableImportError",
    "RdfSyntaxError",
    "parse_ntriples",
    "serialize_ntriples",
    "DanglingListError",
    "ParseReport",
    "SKIP_ANNOTATION",
    "SKIP_LITERAL",
    "SKIP_MALFORMED_LIST",
    "SKIP_UNRECOGNIZED",
    "axioms_to_triples",
    "triples_to_axioms",
    "parse_rdfxml",
    "BNode",
    "IRI",
    "Literal",
    "TripleRecord",
    "parse_turtle",
    "serialize_turtle",
]
