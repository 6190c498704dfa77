"""Axioms as plain JSON: nested dictionaries for expressions, arrays for
operand lists, no blank-node identifiers anywhere.

Key order and array order are canonical (type tag first, fields in a fixed
order, axioms sorted), so converting the same axiom set always yields the
same bytes, and model -> JSON -> model -> JSON is byte-stable.
"""

from __future__ import annotations

import json
from typing import Iterable, Union

from ..model import (
    AllValuesFrom,
    Axiom,
    BOTTOM,
    Bottom,
    Characteristic,
    CharacteristicKind,
    ClassAssertion,
    ClassExpr,
    ComplementOf,
    DisjointClasses,
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
    SomeValuesFrom,
    SubClassOf,
    SubObjectPropertyOf,
    SubPropertyChainOf,
    TOP,
    Top,
    UnionOf,
    axiom_sort_key,
    clazz,
    individual,
    obj_prop,
)

_CHAR_TYPE = {
    CharacteristicKind.FUNCTIONAL: "FunctionalObjectProperty",
    CharacteristicKind.INVERSE_FUNCTIONAL: "InverseFunctionalObjectProperty",
    CharacteristicKind.TRANSITIVE: "TransitiveObjectProperty",
    CharacteristicKind.SYMMETRIC: "SymmetricObjectProperty",
    CharacteristicKind.ASYMMETRIC: "AsymmetricObjectProperty",
    CharacteristicKind.REFLEXIVE: "ReflexiveObjectProperty",
    CharacteristicKind.IRREFLEXIVE: "IrreflexiveObjectProperty",
}
_TYPE_CHAR = {v: k for k, v in _CHAR_TYPE.items()}


def _prop(e: EntityRef) -> dict:
    return {"type": "ObjectProperty", "iri": e.iri}


def _ind(e: EntityRef) -> dict:
    return {"type": "NamedIndividual", "iri": e.iri}


def expr_to_obj(expr: ClassExpr) -> dict:
    if isinstance(expr, Named):
        return {"type": "Class", "iri": expr.entity.iri}
    if isinstance(expr, Top):
        return {"type": "Thing"}
    if isinstance(expr, Bottom):
        return {"type": "Nothing"}
    if isinstance(expr, UnionOf):
        return {"type": "ObjectUnionOf", "operands": [expr_to_obj(o) for o in expr.operands]}
    if isinstance(expr, IntersectionOf):
        return {
            "type": "ObjectIntersectionOf",
            "operands": [expr_to_obj(o) for o in expr.operands],
        }
    if isinstance(expr, ComplementOf):
        return {"type": "ObjectComplementOf", "operand": expr_to_obj(expr.operand)}
    if isinstance(expr, SomeValuesFrom):
        return {
            "type": "ObjectSomeValuesFrom",
            "property": _prop(expr.property),
            "filler": expr_to_obj(expr.filler),
        }
    if isinstance(expr, AllValuesFrom):
        return {
            "type": "ObjectAllValuesFrom",
            "property": _prop(expr.property),
            "filler": expr_to_obj(expr.filler),
        }
    if isinstance(expr, (MinCardinality, MaxCardinality, ExactCardinality)):
        tag = {
            MinCardinality: "ObjectMinCardinality",
            MaxCardinality: "ObjectMaxCardinality",
            ExactCardinality: "ObjectExactCardinality",
        }[type(expr)]
        return {
            "type": tag,
            "n": expr.n,
            "property": _prop(expr.property),
            "filler": expr_to_obj(expr.filler),
        }
    raise TypeError(f"cannot encode expression {expr!r}")


def axiom_to_obj(ax: Axiom) -> dict:
    if isinstance(ax, SubClassOf):
        return {"type": "SubClassOf", "sub": expr_to_obj(ax.sub), "sup": expr_to_obj(ax.sup)}
    if isinstance(ax, EquivalentClasses):
        return {
            "type": "EquivalentClasses",
            "operands": [expr_to_obj(o) for o in ax.operands],
        }
    if isinstance(ax, DisjointClasses):
        return {
            "type": "DisjointClasses",
            "operands": [expr_to_obj(o) for o in ax.operands],
        }
    if isinstance(ax, ClassAssertion):
        return {
            "type": "ClassAssertion",
            "individual": _ind(ax.individual),
            "expr": expr_to_obj(ax.expr),
        }
    if isinstance(ax, ObjectPropertyAssertion):
        return {
            "type": "ObjectPropertyAssertion",
            "subject": _ind(ax.subject),
            "property": _prop(ax.property),
            "object": _ind(ax.object),
        }
    if isinstance(ax, SubObjectPropertyOf):
        return {"type": "SubObjectPropertyOf", "sub": _prop(ax.sub), "sup": _prop(ax.sup)}
    if isinstance(ax, SubPropertyChainOf):
        return {
            "type": "SubPropertyChainOf",
            "chain": [_prop(p) for p in ax.chain],
            "sup": _prop(ax.sup),
        }
    if isinstance(ax, EquivalentObjectProperties):
        return {
            "type": "EquivalentObjectProperties",
            "operands": [_prop(p) for p in ax.operands],
        }
    if isinstance(ax, InverseObjectProperties):
        return {
            "type": "InverseObjectProperties",
            "first": _prop(ax.first),
            "second": _prop(ax.second),
        }
    if isinstance(ax, ObjectPropertyDomain):
        return {
            "type": "ObjectPropertyDomain",
            "property": _prop(ax.property),
            "expr": expr_to_obj(ax.expr),
        }
    if isinstance(ax, ObjectPropertyRange):
        return {
            "type": "ObjectPropertyRange",
            "property": _prop(ax.property),
            "expr": expr_to_obj(ax.expr),
        }
    if isinstance(ax, Characteristic):
        return {"type": _CHAR_TYPE[ax.kind], "property": _prop(ax.property)}
    raise TypeError(f"cannot encode axiom {ax!r}")


def owl_to_json(axioms: Iterable[Axiom]) -> str:
    """One JSON array of axiom objects, canonically ordered."""
    objs = [axiom_to_obj(ax) for ax in sorted(set(axioms), key=axiom_sort_key)]
    return json.dumps(objs, indent=2, ensure_ascii=False) + "\n"


def obj_to_expr(obj: dict) -> ClassExpr:
    tag = obj["type"]
    if tag == "Class":
        return Named(clazz(obj["iri"]))
    if tag == "Thing":
        return TOP
    if tag == "Nothing":
        return BOTTOM
    if tag == "ObjectUnionOf":
        return UnionOf(tuple(obj_to_expr(o) for o in obj["operands"]))
    if tag == "ObjectIntersectionOf":
        return IntersectionOf(tuple(obj_to_expr(o) for o in obj["operands"]))
    if tag == "ObjectComplementOf":
        return ComplementOf(obj_to_expr(obj["operand"]))
    if tag == "ObjectSomeValuesFrom":
        return SomeValuesFrom(obj_prop(obj["property"]["iri"]), obj_to_expr(obj["filler"]))
    if tag == "ObjectAllValuesFrom":
        return AllValuesFrom(obj_prop(obj["property"]["iri"]), obj_to_expr(obj["filler"]))
    if tag in ("ObjectMinCardinality", "ObjectMaxCardinality", "ObjectExactCardinality"):
        ctor = {
            "ObjectMinCardinality": MinCardinality,
            "ObjectMaxCardinality": MaxCardinality,
            "ObjectExactCardinality": ExactCardinality,
        }[tag]
        return ctor(obj["n"], obj_prop(obj["property"]["iri"]), obj_to_expr(obj["filler"]))
    raise ValueError(f"unknown expression type {tag!r}")


def obj_to_axiom(obj: dict) -> Axiom:
    tag = obj["type"]
    if tag == "SubClassOf":
        return SubClassOf(obj_to_expr(obj["sub"]), obj_to_expr(obj["sup"]))
    if tag == "EquivalentClasses":
        return EquivalentClasses(tuple(obj_to_expr(o) for o in obj["operands"]))
    if tag == "DisjointClasses":
        return DisjointClasses(tuple(obj_to_expr(o) for o in obj["operands"]))
    if tag == "ClassAssertion":
        return ClassAssertion(individual(obj["individual"]["iri"]), obj_to_expr(obj["expr"]))
    if tag == "ObjectPropertyAssertion":
        return ObjectPropertyAssertion(
            individual(obj["subject"]["iri"]),
            obj_prop(obj["property"]["iri"]),
            individual(obj["object"]["iri"]),
        )
    if tag == "SubObjectPropertyOf":
        return SubObjectPropertyOf(obj_prop(obj["sub"]["iri"]), obj_prop(obj["sup"]["iri"]))
    if tag == "SubPropertyChainOf":
        return SubPropertyChainOf(
            tuple(obj_prop(p["iri"]) for p in obj["chain"]), obj_prop(obj["sup"]["iri"])
        )
    if tag == "EquivalentObjectProperties":
        return EquivalentObjectProperties(tuple(obj_prop(p["iri"]) for p in obj["operands"]))
    if tag == "InverseObjectProperties":
        return InverseObjectProperties(
            obj_prop(obj["first"]["iri"]), obj_prop(obj["second"]["iri"])
        )
    if tag == "ObjectPropertyDomain":
        return ObjectPropertyDomain(obj_prop(obj["property"]["iri"]), obj_to_expr(obj["expr"]))
    if tag == "ObjectPropertyRange":
        return ObjectPropertyRange(obj_prop(obj["property"]["iri"]), obj_to_expr(obj["expr"]))
    if tag in _TYPE_CHAR:
        return Characteristic(obj_prop(obj["property"]["iri"]), _TYPE_CHAR[tag])
    raise ValueError(f"unknown axiom type {tag!r}")


def json_to_axioms(document: Union[str, bytes]) -> frozenset[Axiom]:
    return frozenset(obj_to_axiom(obj) for obj in json.loads(document))
