"""Signature-based schema module extraction and dataset decomposition.

Module extraction seeds a signature from the ABox (classes used in class
assertions plus properties used in relation assertions), then repeatedly
pulls in every schema axiom sharing a symbol with the signature and grows
the signature by what those axioms mention, until the signature stabilizes.
Symbols compare as (iri, kind) pairs, so punned names never bridge.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union

from .extract import ABoxSubset
from .model import (
    Axiom,
    Box,
    ClassAssertion,
    EntityKind,
    Ontology,
    Signature,
    classify_box,
    is_taxonomic,
    signature_of,
)
from .rdfio import RdfFormat, serialize


@dataclass(frozen=True)
class Module:
    axioms: frozenset[Axiom]
    final_signature: Signature
    iterations: int


@dataclass(frozen=True)
class DatasetComponents:
    taxonomy: frozenset[Axiom]
    tbox_other: frozenset[Axiom]
    rbox: frozenset[Axiom]
    abox_types: frozenset[Axiom]
    abox_relations: frozenset[Axiom]

    def all_axioms(self) -> frozenset[Axiom]:
        return (
            self.taxonomy | self.tbox_other | self.rbox | self.abox_types | self.abox_relations
        )

    def sizes(self) -> dict[str, int]:
        return {
            "taxonomy": len(self.taxonomy),
            "tbox_other": len(self.tbox_other),
            "rbox": len(self.rbox),
            "abox_types": len(self.abox_types),
            "abox_relations": len(self.abox_relations),
        }


def initial_signature(abox: ABoxSubset) -> Signature:
    """Classes named in class assertions plus properties used in relation
    assertions; individuals never seed the module search."""
    entities = set()
    for ca in abox.class_assertions:
        entities.update(
            e for e in signature_of(ca).entities if e.kind is EntityKind.CLASS
        )
    for pa in abox.property_assertions:
        entities.add(pa.property)
    return Signature(frozenset(entities))


def extract_module(ontology: Ontology, sig0: Signature) -> Module:
    """Alg.: Q1 <- {a in O | sig(a) n Sigma != {}}; M <- M u Q1;
    Sigma <- Sigma u sig(Q1); until Sigma stops changing.

    The search space is the schema (TBox u RBox); the ABox only contributes
    the seed. The fixpoint test is on Sigma, as written.
    """
    schema = [
        (ax, signature_of(ax).entities) for ax in sorted(ontology.schema_axioms(), key=lambda a: a.key())
    ]
    sigma = set(sig0.entities)
    module: set[Axiom] = set()
    iterations = 0
    while True:
        iterations += 1
        before = len(sigma)
        for ax, sig in schema:
            if ax not in module and not sigma.isdisjoint(sig):
                module.add(ax)
        for ax in module:
            sigma.update(signature_of(ax).entities)
        if len(sigma) == before:
            break
    return Module(
        axioms=frozenset(module),
        final_signature=Signature(frozenset(sigma)),
        iterations=iterations,
    )


def decompose(axioms: Iterable[Axiom]) -> DatasetComponents:
    """Partition a dataset into the five released components."""
    taxonomy: set[Axiom] = set()
    tbox_other: set[Axiom] = set()
    rbox: set[Axiom] = set()
    abox_types: set[Axiom] = set()
    abox_relations: set[Axiom] = set()
    for ax in axioms:
        box = classify_box(ax)
        if box is Box.TBOX:
            (taxonomy if is_taxonomic(ax) else tbox_other).add(ax)
        elif box is Box.RBOX:
            rbox.add(ax)
        elif isinstance(ax, ClassAssertion):
            abox_types.add(ax)
        else:
            abox_relations.add(ax)
    return DatasetComponents(
        taxonomy=frozenset(taxonomy),
        tbox_other=frozenset(tbox_other),
        rbox=frozenset(rbox),
        abox_types=frozenset(abox_types),
        abox_relations=frozenset(abox_relations),
    )


COMPONENT_FILES = {
    "taxonomy": ("taxonomy.ttl", RdfFormat.TURTLE),
    "tbox_other": ("tbox.ttl", RdfFormat.TURTLE),
    "rbox": ("rbox.ttl", RdfFormat.TURTLE),
    "abox_types": ("abox_types.nt", RdfFormat.NTRIPLES),
    "abox_relations": ("abox_relations.nt", RdfFormat.NTRIPLES),
}


def write_components(components: DatasetComponents, directory: Union[str, Path]) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (filename, fmt) in COMPONENT_FILES.items():
        onto = Ontology.from_axioms(getattr(components, name))
        path = directory / filename
        path.write_text(serialize(onto, fmt), encoding="utf-8")
        written.append(path)
    return written
