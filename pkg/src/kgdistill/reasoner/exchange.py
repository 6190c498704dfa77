"""External-reasoner exchange: schema out as Turtle, inferred axioms in as N-Triples.

Lets a complete OWL reasoner replace the bundled rule engine: the pipeline
writes `schema.ttl` into the exchange directory and merges back whatever
`inferred.nt` the external tool produced, tagging the axioms as Inferred.
"""

from __future__ import annotations

from dataclasses import replace
from pathlib import Path
from typing import Union

from ..model import Axiom, Ontology, Provenance
from ..rdfio import RdfFormat, parse_ontology_file, serialize

SCHEMA_FILE = "schema.ttl"
INFERRED_FILE = "inferred.nt"


def write_exchange_schema(schema: Ontology, directory: Union[str, Path]) -> Path:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / SCHEMA_FILE
    path.write_text(serialize(schema, RdfFormat.TURTLE), encoding="utf-8")
    return path


def read_exchange_inferred(directory: Union[str, Path]) -> frozenset[Axiom]:
    path = Path(directory) / INFERRED_FILE
    if not path.exists():
        raise FileNotFoundError(
            f"external reasoner exchange: {path} not found; run the external tool "
            f"on {SCHEMA_FILE} first"
        )
    onto, _ = parse_ontology_file(path, RdfFormat.NTRIPLES)
    return frozenset(replace(ax, provenance=Provenance.INFERRED) for ax in onto.axioms())
