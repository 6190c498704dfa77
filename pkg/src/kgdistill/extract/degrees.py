"""Degree counting over object-property assertion streams."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from ..model import ObjectPropertyAssertion


@dataclass(frozen=True)
class DegreeIndex:
    """individual IRI -> number of assertions it appears in (either end).

    A self-loop counts twice: once as subject, once as object, matching the
    UNION-of-subselects counting the extraction query performs.
    """

    degree: dict[str, int]

    def __getitem__(self, iri: str) -> int:
        return self.degree.get(iri, 0)

    def total(self) -> int:
        return sum(self.degree.values())


def compute_degrees(
    assertions: Iterable[ObjectPropertyAssertion],
    typing_subjects: Iterable[str] = (),
) -> DegreeIndex:
    """Exact degree counts; `typing_subjects` folds class-assertion triples
    into the count when the degree base includes typings."""
    counts: Counter = Counter()
    for a in assertions:
        counts[a.subject.iri] += 1
        counts[a.object.iri] += 1
    for iri in typing_subjects:
        counts[iri] += 1
    return DegreeIndex(dict(counts))
