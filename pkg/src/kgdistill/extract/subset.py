"""Degree-filtered ABox subset extraction."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from ..model import (
    ClassAssertion,
    ObjectPropertyAssertion,
    Top,
    signature_of,
)
from ..reasoner import UnsatReport
from .degrees import compute_degrees
from .sources import GraphSource


@dataclass(frozen=True)
class ABoxSubset:
    property_assertions: frozenset[ObjectPropertyAssertion]
    class_assertions: frozenset[ClassAssertion]
    individuals: frozenset[str]
    properties: frozenset[str]
    extraction_k: int

    def with_class_assertions(self, typings: frozenset[ClassAssertion]) -> "ABoxSubset":
        return replace(self, class_assertions=typings)

    def axioms(self) -> frozenset:
        return self.property_assertions | self.class_assertions


def extract_subset(
    source: GraphSource,
    k: int,
    unsat: Optional[UnsatReport] = None,
    *,
    fixpoint: bool = False,
    degree_includes_types: bool = False,
) -> ABoxSubset:
    """Keep assertions whose endpoints each appear in >= k assertions.

    Degrees are computed once over the full source (the published query
    semantics), so post-filter degrees may drop below k; `fixpoint=True`
    re-filters until stable instead. Assertions over unsatisfiable
    properties are dropped regardless of degree.
    """
    if k < 1:
        raise ValueError(f"extraction threshold k must be >= 1, got {k}")
    unsat_props = (
        {e.iri for e in unsat.unsatisfiable_properties} if unsat is not None else set()
    )

    assertions = sorted(set(source.object_property_assertions()), key=lambda a: a.key())
    typing_subjects = source.typing_subjects() if degree_includes_types else ()
    degrees = compute_degrees(assertions, typing_subjects)

    kept = [
        a
        for a in assertions
        if degrees[a.subject.iri] >= k
        and degrees[a.object.iri] >= k
        and a.property.iri not in unsat_props
    ]
    if fixpoint:
        while True:
            inner = compute_degrees(kept)
            refiltered = [
                a for a in kept if inner[a.subject.iri] >= k and inner[a.object.iri] >= k
            ]
            if len(refiltered) == len(kept):
                break
            kept = refiltered

    individuals = frozenset(
        i for a in kept for i in (a.subject.iri, a.object.iri)
    )
    properties = frozenset(a.property.iri for a in kept)
    return ABoxSubset(
        property_assertions=frozenset(kept),
        class_assertions=frozenset(),
        individuals=individuals,
        properties=properties,
        extraction_k=k,
    )


def fetch_class_assertions(
    source: GraphSource,
    individuals: frozenset[str],
    unsat: Optional[UnsatReport] = None,
) -> frozenset[ClassAssertion]:
    """Asserted types of the retained individuals, minus unsatisfiable classes
    and minus owl:Thing bookkeeping typings."""
    flagged = unsat.flagged() if unsat is not None else frozenset()
    out = []
    for ca in source.class_assertions_for(individuals):
        if isinstance(ca.expr, Top):
            continue
        if flagged and (signature_of(ca).entities & flagged):
            continue
        out.append(ca)
    return frozenset(out)
