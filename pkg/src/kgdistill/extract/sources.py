"""Graph sources the extractor can pull assertions from."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, Protocol, Union

from ..model import ClassAssertion, ObjectPropertyAssertion, Ontology
from ..rdfio import parse_ontology_file


class GraphSource(Protocol):
    def object_property_assertions(self) -> Iterator[ObjectPropertyAssertion]:
        ...

    def class_assertions_for(self, individuals: frozenset[str]) -> Iterator[ClassAssertion]:
        ...

    def typing_subjects(self) -> Iterator[str]:
        """One item per class-assertion triple (for type-inclusive degrees)."""
        ...


class LocalSource:
    """Source over an in-memory ontology (parsed from local dump files)."""

    def __init__(self, ontology: Ontology):
        self.ontology = ontology

    @staticmethod
    def from_files(
        paths: Iterable[Union[str, Path]], infer_declarations: bool = False
    ) -> "LocalSource":
        axioms = []
        for path in paths:
            onto, _ = parse_ontology_file(path, infer_declarations=infer_declarations)
            axioms.extend(onto.axioms())
        return LocalSource(Ontology.from_axioms(axioms))

    def object_property_assertions(self) -> Iterator[ObjectPropertyAssertion]:
        for ax in sorted(self.ontology.abox, key=lambda a: a.key()):
            if isinstance(ax, ObjectPropertyAssertion):
                yield ax

    def class_assertions_for(self, individuals: frozenset[str]) -> Iterator[ClassAssertion]:
        for ax in sorted(self.ontology.abox, key=lambda a: a.key()):
            if isinstance(ax, ClassAssertion) and ax.individual.iri in individuals:
                yield ax

    def typing_subjects(self) -> Iterator[str]:
        for ax in self.ontology.abox:
            if isinstance(ax, ClassAssertion):
                yield ax.individual.iri
