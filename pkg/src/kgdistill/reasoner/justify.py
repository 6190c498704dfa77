"""Justifications: support sets of asserted axioms behind a derived fact."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, FrozenSet, Iterable

from ..model import Axiom, axiom_sort_key


@dataclass(frozen=True)
class Justification:
    """A set of asserted axioms from which the engine re-derives `conclusion`."""

    support: frozenset[Axiom]
    conclusion: str

    def __len__(self) -> int:
        return len(self.support)


_MINIMIZE_CAP = 25


def minimize_support(
    support: FrozenSet[Axiom],
    still_derives: Callable[[frozenset[Axiom]], bool],
) -> frozenset[Axiom]:
    """Greedy delete-one minimization in deterministic axiom order.

    `still_derives(subset)` replays the engine on the subset and reports
    whether the conclusion is still derived. Supports larger than a small
    cap are returned as-is (they only arise from degenerate inputs).
    """
    if len(support) > _MINIMIZE_CAP:
        return support
    current = set(support)
    for ax in sorted(support, key=axiom_sort_key):
        if len(current) == 1:
            break
        trial = frozenset(current - {ax})
        if still_derives(trial):
            current.discard(ax)
    return frozenset(current)


def dedup_justifications(justs: Iterable[Justification]) -> tuple[Justification, ...]:
    """Drop duplicates and any justification that supersets another."""
    unique = list({j.support: j for j in justs}.values())
    unique.sort(key=lambda j: (len(j.support), sorted(map(axiom_sort_key, j.support))))
    kept: list[Justification] = []
    for j in unique:
        if not any(k.support < j.support for k in kept):
            kept.append(j)
    return tuple(kept)
