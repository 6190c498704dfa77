"""Entity renaming: applies punning-resolution decisions across axioms."""

from __future__ import annotations

from dataclasses import replace
from typing import Iterable

from ..model import (
    AllValuesFrom,
    Axiom,
    ClassAssertion,
    ClassExpr,
    ComplementOf,
    DisjointClasses,
    EntityKind,
    EntityRef,
    EquivalentClasses,
    EquivalentObjectProperties,
    ExactCardinality,
    IntersectionOf,
    InverseObjectProperties,
    MaxCardinality,
    MinCardinality,
    Named,
    ObjectPropertyAssertion,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    Characteristic,
    SomeValuesFrom,
    SubClassOf,
    SubObjectPropertyOf,
    SubPropertyChainOf,
    UnionOf,
)
from .config import Rename

Mapping = dict[tuple[str, EntityKind], str]


def _mapping(renames: Iterable[Rename]) -> Mapping:
    return {(r.from_iri, r.kind): r.to_iri for r in renames}


def _entity(e: EntityRef, m: Mapping) -> EntityRef:
    to = m.get((e.iri, e.kind))
    return EntityRef(to, e.kind) if to else e


def _expr(x: ClassExpr, m: Mapping) -> ClassExpr:
    if isinstance(x, Named):
        return Named(_entity(x.entity, m))
    if isinstance(x, (UnionOf, IntersectionOf)):
        return type(x)(tuple(_expr(o, m) for o in x.operands))
    if isinstance(x, ComplementOf):
        return ComplementOf(_expr(x.operand, m))
    if isinstance(x, (SomeValuesFrom, AllValuesFrom)):
        return type(x)(_entity(x.property, m), _expr(x.filler, m))
    if isinstance(x, (MinCardinality, MaxCardinality, ExactCardinality)):
        return type(x)(x.n, _entity(x.property, m), _expr(x.filler, m))
    return x


def rename_axiom(ax: Axiom, m: Mapping) -> Axiom:
    if isinstance(ax, SubClassOf):
        return replace(ax, sub=_expr(ax.sub, m), sup=_expr(ax.sup, m))
    if isinstance(ax, (EquivalentClasses, DisjointClasses)):
        return replace(ax, operands=tuple(_expr(o, m) for o in ax.operands))
    if isinstance(ax, ClassAssertion):
        return replace(ax, individual=_entity(ax.individual, m), expr=_expr(ax.expr, m))
    if isinstance(ax, ObjectPropertyAssertion):
        return replace(
            ax,
            subject=_entity(ax.subject, m),
            property=_entity(ax.property, m),
            object=_entity(ax.object, m),
        )
    if isinstance(ax, SubObjectPropertyOf):
        return replace(ax, sub=_entity(ax.sub, m), sup=_entity(ax.sup, m))
    if isinstance(ax, SubPropertyChainOf):
        return replace(
            ax, chain=tuple(_entity(p, m) for p in ax.chain), sup=_entity(ax.sup, m)
        )
    if isinstance(ax, EquivalentObjectProperties):
        return replace(ax, operands=tuple(_entity(p, m) for p in ax.operands))
    if isinstance(ax, InverseObjectProperties):
        return replace(ax, first=_entity(ax.first, m), second=_entity(ax.second, m))
    if isinstance(ax, (ObjectPropertyDomain, ObjectPropertyRange)):
        return replace(ax, property=_entity(ax.property, m), expr=_expr(ax.expr, m))
    if isinstance(ax, Characteristic):
        return replace(ax, property=_entity(ax.property, m))
    return ax


def apply_renames(axioms: Iterable[Axiom], renames: Iterable[Rename]) -> list[Axiom]:
    m = _mapping(renames)
    if not m:
        return list(axioms)
    return [rename_axiom(ax, m) for ax in axioms]
