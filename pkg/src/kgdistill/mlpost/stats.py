"""Dataset statistics: assertion-level structure, schema counts, axiom census."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from ..model import (
    AllValuesFrom,
    Axiom,
    Characteristic,
    CharacteristicKind,
    ClassAssertion,
    ClassExpr,
    ComplementOf,
    DisjointClasses,
    EntityKind,
    EquivalentClasses,
    EquivalentObjectProperties,
    ExactCardinality,
    IntersectionOf,
    InverseObjectProperties,
    MaxCardinality,
    MinCardinality,
    ObjectPropertyAssertion,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    SomeValuesFrom,
    SubClassOf,
    SubObjectPropertyOf,
    SubPropertyChainOf,
    Top,
    UnionOf,
    signature_of,
)

AXIOM_CENSUS_TYPES = (
    "ClassAssertion",
    "SubClassOf",
    "EquivalentClasses",
    "DisjointClasses",
    "UnionOf",
    "IntersectionOf",
    "ComplementOf",
    "ExistentialRestriction",
    "UniversalRestriction",
    "CardinalityRestriction",
    "ObjectPropertyDomain",
    "ObjectPropertyRange",
    "SubObjectProperty",
    "InverseObjectProperty",
    "EquivalentObjectProperty",
    "ObjectPropertyCharacteristic",
    "ObjectPropertyChain",
)


@dataclass
class StatsReport:
    name: str
    triples: int
    individuals: int
    properties: int
    classes: int
    class_assertions: int
    fraction_1to1: float
    fraction_1toN: float
    fraction_Nto1: float
    fraction_NtoN: float
    avg_triples_per_property: float
    schema_classes: int
    schema_disjoints: int
    schema_subclass: int
    schema_existential: int
    schema_universal: int
    schema_properties: int
    schema_with_domain: int
    schema_with_range: int
    schema_with_both: int
    schema_functional: int
    axiom_census: dict[str, bool] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(self.__dict__, indent=2, sort_keys=True) + "\n"

    def to_markdown(self) -> str:
        abox_header = (
            "| Dataset | Triples | Inds | Props | Classes | 1to1 | 1toN | Nto1 | NtoN "
            "| Avg Triples | Class Assert. |"
        )
        abox_row = (
            f"| {self.name} | {self.triples:,} | {self.individuals:,} "
            f"| {self.properties:,} | {self.classes:,} "
            f"| {self.fraction_1to1:.2f} | {self.fraction_1toN:.2f} "
            f"| {self.fraction_Nto1:.2f} | {self.fraction_NtoN:.2f} "
            f"| {self.avg_triples_per_property:,.2f} | {self.class_assertions:,} |"
        )
        schema_header = (
            "| Dataset | Classes | Disjoints | Subclass | Existential | Universal "
            "| Props | Domain | Range | Both | Functional |"
        )
        schema_row = (
            f"| {self.name} | {self.schema_classes:,} | {self.schema_disjoints:,} "
            f"| {self.schema_subclass:,} | {self.schema_existential:,} "
            f"| {self.schema_universal:,} | {self.schema_properties:,} "
            f"| {self.schema_with_domain:,} | {self.schema_with_range:,} "
            f"| {self.schema_with_both:,} | {self.schema_functional:,} |"
        )
        census_lines = [
            f"| {t} | {'yes' if self.axiom_census.get(t) else 'no'} |"
            for t in AXIOM_CENSUS_TYPES
        ]
        sep = "|" + "---|" * (abox_header.count("|") - 1)
        schema_sep = "|" + "---|" * (schema_header.count("|") - 1)
        return "\n".join(
            [
                "## ABox statistics",
                "",
                abox_header,
                sep,
                abox_row,
                "",
                "## Schema statistics",
                "",
                schema_header,
                schema_sep,
                schema_row,
                "",
                "## Axiom coverage",
                "",
                "| Axiom type | Present |",
                "|---|---|",
                *census_lines,
                "",
                "Leakage is filtered against the training set only; valid-vs-test "
                "reverses are not removed.",
                "",
            ]
        )


def _expr_contains(expr: ClassExpr, cls) -> bool:
    if isinstance(expr, cls):
        return True
    if isinstance(expr, (UnionOf, IntersectionOf)):
        return any(_expr_contains(o, cls) for o in expr.operands)
    if isinstance(expr, ComplementOf):
        return _expr_contains(expr.operand, cls)
    if isinstance(expr, (SomeValuesFrom, AllValuesFrom, MinCardinality, MaxCardinality, ExactCardinality)):
        return _expr_contains(expr.filler, cls)
    return False


def _axiom_exprs(ax: Axiom) -> list[ClassExpr]:
    if isinstance(ax, SubClassOf):
        return [ax.sub, ax.sup]
    if isinstance(ax, (EquivalentClasses, DisjointClasses)):
        return list(ax.operands)
    if isinstance(ax, ClassAssertion):
        return [ax.expr]
    if isinstance(ax, (ObjectPropertyDomain, ObjectPropertyRange)):
        return [ax.expr]
    return []


def avg_triples_per_property(n_relations: int, n_properties: int) -> float:
    """|relations| / |properties| at 2-decimal reporting precision."""
    return round(n_relations / n_properties, 2) if n_properties else 0.0


def property_category(heads_per_tail: float, tails_per_head: float) -> str:
    """The 1.5-threshold convention over mean heads-per-tail / tails-per-head."""
    if heads_per_tail < 1.5 and tails_per_head < 1.5:
        return "1to1"
    if heads_per_tail < 1.5:
        return "1toN"
    if tails_per_head < 1.5:
        return "Nto1"
    return "NtoN"


def compute_stats(
    relations: Iterable[ObjectPropertyAssertion],
    class_assertions: Iterable[ClassAssertion],
    schema_axioms: Iterable[Axiom],
    name: str = "dataset",
) -> StatsReport:
    relations = sorted(set(relations), key=lambda a: a.key())
    class_assertions = sorted(set(class_assertions), key=lambda a: a.key())
    schema_axioms = sorted(set(schema_axioms), key=lambda a: a.key())

    individuals = {a.subject.iri for a in relations} | {a.object.iri for a in relations}
    properties = sorted({a.property.iri for a in relations})
    abox_classes = set()
    for ca in class_assertions:
        abox_classes.update(
            e.iri for e in signature_of(ca).entities if e.kind is EntityKind.CLASS
        )

    heads: dict[str, dict[str, set[str]]] = {p: {} for p in properties}
    tails: dict[str, dict[str, set[str]]] = {p: {} for p in properties}
    for a in relations:
        heads[a.property.iri].setdefault(a.object.iri, set()).add(a.subject.iri)
        tails[a.property.iri].setdefault(a.subject.iri, set()).add(a.object.iri)

    cats = {"1to1": 0, "1toN": 0, "Nto1": 0, "NtoN": 0}
    for p in properties:
        hpt = sum(len(v) for v in heads[p].values()) / len(heads[p])
        tph = sum(len(v) for v in tails[p].values()) / len(tails[p])
        cats[property_category(hpt, tph)] += 1
    n_props = len(properties)
    frac = {
        k: (round(v / n_props, 2) if n_props else 0.0) for k, v in cats.items()
    }
    avg = avg_triples_per_property(len(relations), n_props)

    schema_class_iris = set()
    schema_prop_iris = set()
    for ax in schema_axioms:
        for e in signature_of(ax).entities:
            if e.kind is EntityKind.CLASS:
                schema_class_iris.add(e.iri)
            elif e.kind is EntityKind.OBJECT_PROPERTY:
                schema_prop_iris.add(e.iri)

    n_subclass = sum(1 for ax in schema_axioms if isinstance(ax, SubClassOf))
    n_disjoint = sum(1 for ax in schema_axioms if isinstance(ax, DisjointClasses))
    n_exist = sum(
        1
        for ax in schema_axioms
        if isinstance(ax, SubClassOf) and _expr_contains(ax.sup, SomeValuesFrom)
    )
    n_univ = sum(
        1
        for ax in schema_axioms
        if isinstance(ax, SubClassOf) and _expr_contains(ax.sup, AllValuesFrom)
    )

    with_domain = set()
    with_range = set()
    functional = set()
    for ax in schema_axioms:
        if isinstance(ax, ObjectPropertyDomain) and not isinstance(ax.expr, Top):
            with_domain.add(ax.property.iri)
        elif isinstance(ax, ObjectPropertyRange) and not isinstance(ax.expr, Top):
            with_range.add(ax.property.iri)
        elif isinstance(ax, Characteristic) and ax.kind is CharacteristicKind.FUNCTIONAL:
            functional.add(ax.property.iri)

    census = _axiom_census(schema_axioms, class_assertions)

    return StatsReport(
        name=name,
        triples=len(relations),
        individuals=len(individuals),
        properties=n_props,
        classes=len(abox_classes),
        class_assertions=len(class_assertions),
        fraction_1to1=frac["1to1"],
        fraction_1toN=frac["1toN"],
        fraction_Nto1=frac["Nto1"],
        fraction_NtoN=frac["NtoN"],
        avg_triples_per_property=avg,
        schema_classes=len(schema_class_iris),
        schema_disjoints=n_disjoint,
        schema_subclass=n_subclass,
        schema_existential=n_exist,
        schema_universal=n_univ,
        schema_properties=len(schema_prop_iris),
        schema_with_domain=len(with_domain),
        schema_with_range=len(with_range),
        schema_with_both=len(with_domain & with_range),
        schema_functional=len(functional),
        axiom_census=census,
    )


def _axiom_census(schema_axioms, class_assertions) -> dict[str, bool]:
    present = {t: False for t in AXIOM_CENSUS_TYPES}
    present["ClassAssertion"] = bool(class_assertions)
    for ax in schema_axioms:
        if isinstance(ax, SubClassOf):
            present["SubClassOf"] = True
        elif isinstance(ax, EquivalentClasses):
            present["EquivalentClasses"] = True
        elif isinstance(ax, DisjointClasses):
            present["DisjointClasses"] = True
        elif isinstance(ax, ObjectPropertyDomain):
            present["ObjectPropertyDomain"] = True
        elif isinstance(ax, ObjectPropertyRange):
            present["ObjectPropertyRange"] = True
        elif isinstance(ax, SubObjectPropertyOf):
            present["SubObjectProperty"] = True
        elif isinstance(ax, InverseObjectProperties):
            present["InverseObjectProperty"] = True
        elif isinstance(ax, EquivalentObjectProperties):
            present["EquivalentObjectProperty"] = True
        elif isinstance(ax, Characteristic):
            present["ObjectPropertyCharacteristic"] = True
        elif isinstance(ax, SubPropertyChainOf):
            present["ObjectPropertyChain"] = True
        for expr in _axiom_exprs(ax):
            if _expr_contains(expr, UnionOf):
                present["UnionOf"] = True
            if _expr_contains(expr, IntersectionOf):
                present["IntersectionOf"] = True
            if _expr_contains(expr, ComplementOf):
                present["ComplementOf"] = True
            if _expr_contains(expr, SomeValuesFrom):
                present["ExistentialRestriction"] = True
            if _expr_contains(expr, AllValuesFrom):
                present["UniversalRestriction"] = True
            if (
                _expr_contains(expr, MinCardinality)
                or _expr_contains(expr, MaxCardinality)
                or _expr_contains(expr, ExactCardinality)
            ):
                present["CardinalityRestriction"] = True
    return present
