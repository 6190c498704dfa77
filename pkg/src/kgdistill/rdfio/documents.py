"""Document-level parse/serialize entry points with format dispatch."""

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Optional, Union

from ..model import Ontology
from .ntriples import parse_ntriples, serialize_ntriples
from .owlmap import ParseReport, axioms_to_triples, triples_to_axioms
from .rdfxml import parse_rdfxml
from .terms import BNode, IRI, Literal, TripleRecord
from .turtle import parse_turtle, serialize_turtle


class RdfFormat(str, Enum):
    NTRIPLES = "ntriples"
    TURTLE = "turtle"
    RDFXML = "rdfxml"


_EXTENSIONS = {
    ".nt": RdfFormat.NTRIPLES,
    ".ntriples": RdfFormat.NTRIPLES,
    ".ttl": RdfFormat.TURTLE,
    ".turtle": RdfFormat.TURTLE,
    ".rdf": RdfFormat.RDFXML,
    ".owl": RdfFormat.RDFXML,
    ".xml": RdfFormat.RDFXML,
}


def detect_format(path: Union[str, Path]) -> RdfFormat:
    ext = Path(path).suffix.lower()
    if ext not in _EXTENSIONS:
        raise ValueError(f"cannot detect RDF format from extension {ext!r} ({path})")
    return _EXTENSIONS[ext]


def parse_document(
    data: Union[str, bytes],
    format: RdfFormat,
    base: Optional[str] = None,
) -> tuple[list[TripleRecord], ParseReport]:
    """Parse one document into triples in document order plus a count report."""
    if isinstance(data, bytes) and format is not RdfFormat.RDFXML:
        data = data.decode("utf-8")
    if format is RdfFormat.NTRIPLES:
        triples = list(parse_ntriples(data))
    elif format is RdfFormat.TURTLE:
        triples = list(parse_turtle(data, base=base))
    else:
        triples = list(parse_rdfxml(data, base=base))
    return triples, ParseReport(total_triples=len(triples))


def parse_ontology(
    data: Union[str, bytes],
    format: RdfFormat,
    base: Optional[str] = None,
    infer_declarations: bool = False,
    predeclared: Optional[Ontology] = None,
) -> tuple[Ontology, ParseReport]:
    triples, _ = parse_document(data, format, base=base)
    return triples_to_axioms(
        triples, infer_declarations=infer_declarations, predeclared=predeclared
    )


def parse_ontology_file(
    path: Union[str, Path],
    format: Optional[RdfFormat] = None,
    infer_declarations: bool = False,
    predeclared: Optional[Ontology] = None,
) -> tuple[Ontology, ParseReport]:
    path = Path(path)
    fmt = format or detect_format(path)
    data: Union[str, bytes]
    if fmt is RdfFormat.RDFXML:
        data = path.read_bytes()
    else:
        data = path.read_text(encoding="utf-8")
    return parse_ontology(
        data, fmt, infer_declarations=infer_declarations, predeclared=predeclared
    )


def _term_order(term: Union[IRI, BNode, Literal]) -> tuple:
    if isinstance(term, IRI):
        return (0, term.value, "", "")
    if isinstance(term, BNode):
        return (1, term.label, "", "")
    return (2, term.lexical, term.datatype or "", term.lang or "")


def sort_triples(triples: list[TripleRecord]) -> list[TripleRecord]:
    return sorted(
        triples,
        key=lambda t: (_term_order(t.subject), t.predicate.value, _term_order(t.object)),
    )


def serialize(ontology: Ontology, format: RdfFormat) -> str:
    """Serialize deterministically: same ontology, same bytes, always."""
    triples = sort_triples(axioms_to_triples(ontology))
    if format is RdfFormat.NTRIPLES:
        return serialize_ntriples(triples)
    if format is RdfFormat.TURTLE:
        return serialize_turtle(triples)
    raise ValueError(f"serialization to {format} is not supported (read-only format)")


def write_ontology(ontology: Ontology, path: Union[str, Path]) -> None:
    path = Path(path)
    path.write_text(serialize(ontology, detect_format(path)), encoding="utf-8")
