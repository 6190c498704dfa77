"""RDF term types and the vocabulary constants used by the OWL mapping."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union


@dataclass(frozen=True, slots=True)
class IRI:
    value: str

    def n3(self) -> str:
        return f"<{escape_iri(self.value)}>"


@dataclass(frozen=True, slots=True)
class BNode:
    label: str

    def n3(self) -> str:
        return f"_:{self.label}"


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    datatype: Optional[str] = None
    lang: Optional[str] = None

    def n3(self) -> str:
        body = f'"{escape_literal(self.lexical)}"'
        if self.lang:
            return f"{body}@{self.lang}"
        if self.datatype and self.datatype != XSD_STRING:
            return f"{body}^^<{escape_iri(self.datatype)}>"
        return body


Subject = Union[IRI, BNode]
Object = Union[IRI, BNode, Literal]


@dataclass(frozen=True, slots=True)
class TripleRecord:
    subject: Subject
    predicate: IRI
    object: Object

    def n3(self) -> str:
        return f"{self.subject.n3()} {self.predicate.n3()} {self.object.n3()} ."


_LITERAL_UNSAFE = re.compile(r'["\\\x00-\x1f]')
_IRI_UNSAFE = re.compile(r'[\x00-\x20<>"{}|^`\\]')


def escape_literal(s: str) -> str:
    if _LITERAL_UNSAFE.search(s) is None:
        return s
    out = []
    for ch in s:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def escape_iri(s: str) -> str:
    if _IRI_UNSAFE.search(s) is None:
        return s
    out = []
    for ch in s:
        code = ord(ch)
        if code <= 0x20 or ch in '<>"{}|^`\\':
            out.append(f"\\u{code:04X}")
        else:
            out.append(ch)
    return "".join(out)


RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

RDF_TYPE = RDF_NS + "type"
RDF_FIRST = RDF_NS + "first"
RDF_REST = RDF_NS + "rest"
RDF_NIL = RDF_NS + "nil"

RDFS_SUBCLASSOF = RDFS_NS + "subClassOf"
RDFS_SUBPROPERTYOF = RDFS_NS + "subPropertyOf"
RDFS_DOMAIN = RDFS_NS + "domain"
RDFS_RANGE = RDFS_NS + "range"
RDFS_CLASS = RDFS_NS + "Class"

OWL_CLASS = OWL_NS + "Class"
OWL_OBJECT_PROPERTY = OWL_NS + "ObjectProperty"
OWL_DATATYPE_PROPERTY = OWL_NS + "DatatypeProperty"
OWL_ANNOTATION_PROPERTY = OWL_NS + "AnnotationProperty"
OWL_NAMED_INDIVIDUAL = OWL_NS + "NamedIndividual"
OWL_ONTOLOGY = OWL_NS + "Ontology"
OWL_IMPORTS = OWL_NS + "imports"
OWL_THING = OWL_NS + "Thing"
OWL_NOTHING = OWL_NS + "Nothing"
OWL_RESTRICTION = OWL_NS + "Restriction"
OWL_ON_PROPERTY = OWL_NS + "onProperty"
OWL_ON_CLASS = OWL_NS + "onClass"
OWL_SOME_VALUES_FROM = OWL_NS + "someValuesFrom"
OWL_ALL_VALUES_FROM = OWL_NS + "allValuesFrom"
OWL_MIN_CARDINALITY = OWL_NS + "minCardinality"
OWL_MAX_CARDINALITY = OWL_NS + "maxCardinality"
OWL_CARDINALITY = OWL_NS + "cardinality"
OWL_MIN_QUALIFIED_CARDINALITY = OWL_NS + "minQualifiedCardinality"
OWL_MAX_QUALIFIED_CARDINALITY = OWL_NS + "maxQualifiedCardinality"
OWL_QUALIFIED_CARDINALITY = OWL_NS + "qualifiedCardinality"
OWL_UNION_OF = OWL_NS + "unionOf"
OWL_INTERSECTION_OF = OWL_NS + "intersectionOf"
OWL_COMPLEMENT_OF = OWL_NS + "complementOf"
OWL_EQUIVALENT_CLASS = OWL_NS + "equivalentClass"
OWL_DISJOINT_WITH = OWL_NS + "disjointWith"
OWL_ALL_DISJOINT_CLASSES = OWL_NS + "AllDisjointClasses"
OWL_MEMBERS = OWL_NS + "members"
OWL_EQUIVALENT_PROPERTY = OWL_NS + "equivalentProperty"
OWL_INVERSE_OF = OWL_NS + "inverseOf"
OWL_PROPERTY_CHAIN_AXIOM = OWL_NS + "propertyChainAxiom"
OWL_FUNCTIONAL_PROPERTY = OWL_NS + "FunctionalProperty"
OWL_INVERSE_FUNCTIONAL_PROPERTY = OWL_NS + "InverseFunctionalProperty"
OWL_TRANSITIVE_PROPERTY = OWL_NS + "TransitiveProperty"
OWL_SYMMETRIC_PROPERTY = OWL_NS + "SymmetricProperty"
OWL_ASYMMETRIC_PROPERTY = OWL_NS + "AsymmetricProperty"
OWL_REFLEXIVE_PROPERTY = OWL_NS + "ReflexiveProperty"
OWL_IRREFLEXIVE_PROPERTY = OWL_NS + "IrreflexiveProperty"

XSD_STRING = XSD_NS + "string"
XSD_INTEGER = XSD_NS + "integer"
XSD_DECIMAL = XSD_NS + "decimal"
XSD_DOUBLE = XSD_NS + "double"
XSD_BOOLEAN = XSD_NS + "boolean"
XSD_NON_NEGATIVE_INTEGER = XSD_NS + "nonNegativeInteger"

# predicates treated as annotation metadata and skipped with a report count
ANNOTATION_PREDICATES = frozenset(
    {
        RDFS_NS + "label",
        RDFS_NS + "comment",
        RDFS_NS + "seeAlso",
        RDFS_NS + "isDefinedBy",
        OWL_NS + "versionInfo",
        OWL_NS + "versionIRI",
        OWL_NS + "priorVersion",
        OWL_NS + "deprecated",
        OWL_NS + "backwardCompatibleWith",
        OWL_NS + "incompatibleWith",
    }
)

CHARACTERISTIC_CLASS_TO_KIND = {
    OWL_FUNCTIONAL_PROPERTY: "Functional",
    OWL_INVERSE_FUNCTIONAL_PROPERTY: "InverseFunctional",
    OWL_TRANSITIVE_PROPERTY: "Transitive",
    OWL_SYMMETRIC_PROPERTY: "Symmetric",
    OWL_ASYMMETRIC_PROPERTY: "Asymmetric",
    OWL_REFLEXIVE_PROPERTY: "Reflexive",
    OWL_IRREFLEXIVE_PROPERTY: "Irreflexive",
}
KIND_TO_CHARACTERISTIC_CLASS = {v: k for k, v in CHARACTERISTIC_CLASS_TO_KIND.items()}
