"""Unsatisfiability detection over the schema closure, with justifications."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..model import (
    CharacteristicKind,
    EntityRef,
    Named,
    Ontology,
    UnionOf,
    clazz,
    obj_prop,
    signature_of,
)
from .closure import SchemaIndex
from .justify import Justification, dedup_justifications, minimize_support


@dataclass(frozen=True)
class UnsatReport:
    unsatisfiable_classes: frozenset[EntityRef]
    unsatisfiable_properties: frozenset[EntityRef]
    justifications: dict[EntityRef, tuple[Justification, ...]]

    def is_empty(self) -> bool:
        return not self.unsatisfiable_classes and not self.unsatisfiable_properties

    def flagged(self) -> frozenset[EntityRef]:
        return self.unsatisfiable_classes | self.unsatisfiable_properties


_CONTRADICTORY_CHARS = (
    (CharacteristicKind.SYMMETRIC, CharacteristicKind.ASYMMETRIC),
    (CharacteristicKind.REFLEXIVE, CharacteristicKind.IRREFLEXIVE),
)


def _class_unsat_supports(idx: SchemaIndex, c: int) -> list[frozenset]:
    """Raw (unminimized) supports for class c being unsatisfiable."""
    found: list[frozenset] = []
    reach = set(idx.superclasses_refl(c))

    bottom = idx.bottom_support(c)
    if bottom is not None:
        found.append(bottom)

    for a, b, sup in idx.disjoint_pairs:
        if a in reach and b in reach:
            found.append(sup | idx.class_path_support(c, a) | idx.class_path_support(c, b))

    for a, e, sup in idx.complement_pairs:
        if a in reach and e in reach:
            found.append(sup | idx.class_path_support(c, a) | idx.class_path_support(c, e))
    return found


def detect_unsatisfiable(
    ontology: Ontology, index: Optional[SchemaIndex] = None, minimize: bool = True
) -> UnsatReport:
    """Flag classes and properties the rule closure proves unsatisfiable.

    Classes: subsumed by Bottom, by two disjoint classes, or by a class and
    its complement. Properties: entailed named domain/range unsatisfiable,
    or jointly contradictory characteristics (Symmetric+Asymmetric,
    Reflexive+Irreflexive). Sound but incomplete beyond the rule fragment.
    """
    idx = index or SchemaIndex.build(ontology)
    unsat_classes: dict[EntityRef, list[frozenset]] = {}
    unsat_props: dict[EntityRef, list[frozenset]] = {}

    for c in range(len(idx.cg)):
        supports = _class_unsat_supports(idx, c)
        if supports:
            unsat_classes[clazz(idx.cg.names[c])] = supports

    unsat_class_ids = {idx.cg.ids[e.iri] for e in unsat_classes}

    for p in range(len(idx.pg)):
        supports: list[frozenset] = []
        for kinds in _CONTRADICTORY_CHARS:
            have = idx.chars.get(p, {})
            if kinds[0] in have and kinds[1] in have:
                supports.append(have[kinds[0]] | have[kinds[1]])
        for table in (idx.domains, idx.ranges):
            for expr, s in table.get(p, {}).items():
                if isinstance(expr, Named):
                    cid = idx.class_id(expr.entity.iri)
                    if cid is not None and cid in unsat_class_ids:
                        for cs in _class_unsat_supports(idx, cid):
                            supports.append(s | cs)
                elif isinstance(expr, UnionOf):
                    # a union domain/range is unsatisfiable only if every
                    # named disjunct is; non-named disjuncts block the call
                    ids = [
                        idx.class_id(o.entity.iri)
                        for o in expr.operands
                        if isinstance(o, Named)
                    ]
                    if len(ids) == len(expr.operands) and all(
                        i in unsat_class_ids for i in ids if i is not None
                    ) and ids and all(i is not None for i in ids):
                        merged = s
                        for i in ids:
                            merged = merged | _class_unsat_supports(idx, i)[0]
                        supports.append(merged)
        if supports:
            unsat_props[obj_prop(idx.pg.names[p])] = supports

    justifications: dict[EntityRef, tuple[Justification, ...]] = {}

    def finalize(entity: EntityRef, raw: list[frozenset], is_class: bool) -> None:
        def still(subset: frozenset) -> bool:
            trial = Ontology.from_axioms(subset)
            rep = detect_unsatisfiable(trial, minimize=False)
            return entity in (
                rep.unsatisfiable_classes if is_class else rep.flagged()
            )

        justs = []
        for s in raw:
            support = minimize_support(s, still) if minimize else s
            justs.append(Justification(support, f"unsatisfiable:{entity.iri}"))
        justifications[entity] = dedup_justifications(justs)

    for e, raw in unsat_classes.items():
        finalize(e, raw, True)
    for e, raw in unsat_props.items():
        finalize(e, raw, False)

    return UnsatReport(
        unsatisfiable_classes=frozenset(unsat_classes),
        unsatisfiable_properties=frozenset(unsat_props),
        justifications=justifications,
    )


def remove_unsatisfiable(ontology: Ontology, report: UnsatReport) -> Ontology:
    """Drop every axiom whose signature touches a flagged entity; idempotent."""
    flagged = report.flagged()
    if not flagged:
        return ontology
    keep = [
        ax
        for ax in ontology.axioms()
        if not (signature_of(ax).entities & flagged)
    ]
    return Ontology.from_axioms(keep, imports=ontology.imports, iri=ontology.iri)


def clean_schema(
    ontology: Ontology, max_rounds: int = 10
) -> tuple[Ontology, list[UnsatReport]]:
    """detect/remove until no unsatisfiable entity remains."""
    reports: list[UnsatReport] = []
    current = ontology
    for _ in range(max_rounds):
        report = detect_unsatisfiable(current)
        if report.is_empty():
            return current, reports
        reports.append(report)
        current = remove_unsatisfiable(current, report)
    raise RuntimeError("schema cleaning did not converge")
