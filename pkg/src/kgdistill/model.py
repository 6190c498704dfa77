"""Core in-memory model: entities, class expressions, axioms, ontologies.

Everything here is immutable after construction so ontologies can be shared
freely across pipeline phases and threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Optional

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")


class EntityKind(str, Enum):
    CLASS = "Class"
    OBJECT_PROPERTY = "ObjectProperty"
    DATA_PROPERTY = "DataProperty"
    NAMED_INDIVIDUAL = "NamedIndividual"


class Provenance(str, Enum):
    ASSERTED = "Asserted"
    INFERRED = "Inferred"


class Box(str, Enum):
    TBOX = "TBox"
    RBOX = "RBox"
    ABOX = "ABox"


class CharacteristicKind(str, Enum):
    FUNCTIONAL = "Functional"
    INVERSE_FUNCTIONAL = "InverseFunctional"
    TRANSITIVE = "Transitive"
    SYMMETRIC = "Symmetric"
    ASYMMETRIC = "Asymmetric"
    REFLEXIVE = "Reflexive"
    IRREFLEXIVE = "Irreflexive"


@dataclass(frozen=True, slots=True)
class EntityRef:
    """A named entity: an absolute IRI plus the kind it is used as."""

    iri: str
    kind: EntityKind

    def __post_init__(self) -> None:
        if not _SCHEME_RE.match(self.iri):
            raise ValueError(f"not an absolute IRI (missing scheme): {self.iri!r}")


@lru_cache(maxsize=None)
def clazz(iri: str) -> EntityRef:
    return EntityRef(iri, EntityKind.CLASS)


@lru_cache(maxsize=None)
def obj_prop(iri: str) -> EntityRef:
    return EntityRef(iri, EntityKind.OBJECT_PROPERTY)


@lru_cache(maxsize=None)
def data_prop(iri: str) -> EntityRef:
    return EntityRef(iri, EntityKind.DATA_PROPERTY)


@lru_cache(maxsize=None)
def individual(iri: str) -> EntityRef:
    return EntityRef(iri, EntityKind.NAMED_INDIVIDUAL)


# ---------------------------------------------------------------------------
# Class expressions
# ---------------------------------------------------------------------------


class ClassExpr:
    """Base class for (possibly nested) class expressions."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Named(ClassExpr):
    entity: EntityRef


@dataclass(frozen=True, slots=True)
class Top(ClassExpr):
    pass


@dataclass(frozen=True, slots=True)
class Bottom(ClassExpr):
    pass


TOP = Top()
BOTTOM = Bottom()


@dataclass(frozen=True, slots=True)
class UnionOf(ClassExpr):
    operands: tuple[ClassExpr, ...]

    def __post_init__(self) -> None:
        if len(self.operands) < 2:
            raise ValueError("UnionOf needs >= 2 operands")


@dataclass(frozen=True, slots=True)
class IntersectionOf(ClassExpr):
    operands: tuple[ClassExpr, ...]

    def __post_init__(self) -> None:
        if len(self.operands) < 2:
            raise ValueError("IntersectionOf needs >= 2 operands")


@dataclass(frozen=True, slots=True)
class ComplementOf(ClassExpr):
    operand: ClassExpr


@dataclass(frozen=True, slots=True)
class SomeValuesFrom(ClassExpr):
    property: EntityRef
    filler: ClassExpr


@dataclass(frozen=True, slots=True)
class AllValuesFrom(ClassExpr):
    property: EntityRef
    filler: ClassExpr


@dataclass(frozen=True, slots=True)
class MinCardinality(ClassExpr):
    n: int
    property: EntityRef
    filler: ClassExpr

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


@dataclass(frozen=True, slots=True)
class MaxCardinality(ClassExpr):
    n: int
    property: EntityRef
    filler: ClassExpr

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


@dataclass(frozen=True, slots=True)
class ExactCardinality(ClassExpr):
    n: int
    property: EntityRef
    filler: ClassExpr

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("cardinality must be non-negative")


def named(iri: str) -> Named:
    return Named(clazz(iri))


def expr_sort_key(expr: ClassExpr) -> tuple:
    """Total deterministic order over class expressions.

    Used wherever a canonical ordering is needed (serialization, JSON export,
    order-insensitive axiom equality).
    """
    if isinstance(expr, Named):
        return (0, expr.entity.iri)
    if isinstance(expr, Top):
        return (1,)
    if isinstance(expr, Bottom):
        return (2,)
    if isinstance(expr, UnionOf):
        return (3, tuple(expr_sort_key(o) for o in expr.operands))
    if isinstance(expr, IntersectionOf):
        return (4, tuple(expr_sort_key(o) for o in expr.operands))
    if isinstance(expr, ComplementOf):
        return (5, expr_sort_key(expr.operand))
    if isinstance(expr, SomeValuesFrom):
        return (6, expr.property.iri, expr_sort_key(expr.filler))
    if isinstance(expr, AllValuesFrom):
        return (7, expr.property.iri, expr_sort_key(expr.filler))
    if isinstance(expr, MinCardinality):
        return (8, expr.n, expr.property.iri, expr_sort_key(expr.filler))
    if isinstance(expr, MaxCardinality):
        return (9, expr.n, expr.property.iri, expr_sort_key(expr.filler))
    if isinstance(expr, ExactCardinality):
        return (10, expr.n, expr.property.iri, expr_sort_key(expr.filler))
    raise TypeError(f"unknown class expression: {expr!r}")


def expr_signature(expr: ClassExpr) -> frozenset[EntityRef]:
    """Entity names occurring in the expression; Top/Bottom contribute nothing."""
    out: set[EntityRef] = set()
    _collect_expr(expr, out)
    return frozenset(out)


def _collect_expr(expr: ClassExpr, out: set[EntityRef]) -> None:
    if isinstance(expr, Named):
        out.add(expr.entity)
    elif isinstance(expr, (Top, Bottom)):
        pass
    elif isinstance(expr, (UnionOf, IntersectionOf)):
        for o in expr.operands:
            _collect_expr(o, out)
    elif isinstance(expr, ComplementOf):
        _collect_expr(expr.operand, out)
    elif isinstance(expr, (SomeValuesFrom, AllValuesFrom)):
        out.add(expr.property)
        _collect_expr(expr.filler, out)
    elif isinstance(expr, (MinCardinality, MaxCardinality, ExactCardinality)):
        out.add(expr.property)
        _collect_expr(expr.filler, out)
    else:
        raise TypeError(f"unknown class expression: {expr!r}")


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------


class Axiom:
    """Base class for all axioms.

    Structural equality ignores provenance; EquivalentClasses, DisjointClasses
    and EquivalentObjectProperties compare order-insensitively while
    SubPropertyChainOf chains stay order-sensitive.
    """

    __slots__ = ()

    provenance: Provenance

    def key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Axiom) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())


def _prov_field() -> Provenance:
    return Provenance.ASSERTED


@dataclass(frozen=True, eq=False, slots=True)
class SubClassOf(Axiom):
    sub: ClassExpr
    sup: ClassExpr
    provenance: Provenance = field(default_factory=_prov_field)

    def key(self) -> tuple:
        return ("SubClassOf", expr_sort_key(self.sub), expr_sort_key(self.sup))


@dataclass(frozen=True, eq=False, slots=True)
class EquivalentClasses(Axiom):
    operands: tuple[ClassExpr, ...]
    provenance: Provenance = field(default_factory=_prov_field)

    def key(self) -> tuple:
        return ("EquivalentClasses", tuple(sorted(expr_sort_key(o) for o in self.operands)))


@dataclass(frozen=True, eq=False, slots=True)
class DisjointClasses(Axiom):
    operands: tuple[ClassExpr, ...]
    provenance: Provenance = field(default_factory=_prov_field)

    def key(self) -> tuple:
        return ("DisjointClasses", tuple(sorted(expr_sort_key(o) for o in self.operands)))


@dataclass(frozen=True, eq=False, slots=True)
class ClassAssertion(Axiom):
    individual: EntityRef
    expr: ClassExpr
    provenance: Provenance = field(default_factory=_prov_field)

    def key(self) -> tuple:
        return ("ClassAssertion", self.individual.iri, expr_sort_key(self.expr))


@dataclass(frozen=True, eq=False, slots=True)
class ObjectPropertyAssertion(Axiom):
    subject: EntityRef
    property: EntityRef
    object: EntityRef
    provenance: Provenance = field(default_factory=_prov_field)

    def key(self) -> tuple:
        return ("ObjectPropertyAssertion", self.subject.iri, self.property.iri, self.object.iri)


@dataclass(frozen=True, eq=False, slots=True)
class SubObjectPropertyOf(Axiom):
    sub: EntityRef
    sup: EntityRef
    provenance: Provenance = field(default_factory=_prov_field)

    def key(self) -> tuple:
        return ("SubObjectPropertyOf", self.sub.iri, self.sup.iri)


@dataclass(frozen=True, eq=False, slots=True)
class SubPropertyChainOf(Axiom):
    chain: tuple[EntityRef, ...]
    sup: EntityRef
    provenance: Provenance = field(default_factory=_prov_field)

    def key(self) -> tuple:
        return ("SubPropertyChainOf", tuple(p.iri for p in self.chain), self.sup.iri)


@dataclass(frozen=True, eq=False, slots=True)
class EquivalentObjectProperties(Axiom):
    operands: tuple[EntityRef, ...]
    provenance: Provenance = field(default_factory=_prov_field)

    def key(self) -> tuple:
        return ("EquivalentObjectProperties", tuple(sorted(p.iri for p in self.operands)))


@dataclass(frozen=True, eq=False, slots=True)
class InverseObjectProperties(Axiom):
    first: EntityRef
    second: EntityRef
    provenance: Provenance = field(default_factory=_prov_field)

    def key(self) -> tuple:
        return ("InverseObjectProperties", self.first.iri, self.second.iri)


@dataclass(frozen=True, eq=False, slots=True)
class ObjectPropertyDomain(Axiom):
    property: EntityRef
    expr: ClassExpr
    provenance: Provenance = field(default_factory=_prov_field)

    def key(self) -> tuple:
        return ("ObjectPropertyDomain", self.property.iri, expr_sort_key(self.expr))


@dataclass(frozen=True, eq=False, slots=True)
class ObjectPropertyRange(Axiom):
    property: EntityRef
    expr: ClassExpr
    provenance: Provenance = field(default_factory=_prov_field)

    def key(self) -> tuple:
        return ("ObjectPropertyRange", self.property.iri, expr_sort_key(self.expr))


@dataclass(frozen=True, eq=False, slots=True)
class Characteristic(Axiom):
    property: EntityRef
    kind: CharacteristicKind
    provenance: Provenance = field(default_factory=_prov_field)

    def key(self) -> tuple:
        return ("Characteristic", self.property.iri, self.kind.value)


TBOX_TYPES = (SubClassOf, EquivalentClasses, DisjointClasses)
RBOX_TYPES = (
    SubObjectPropertyOf,
    SubPropertyChainOf,
    EquivalentObjectProperties,
    InverseObjectProperties,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    Characteristic,
)
ABOX_TYPES = (ClassAssertion, ObjectPropertyAssertion)


def classify_box(axiom: Axiom) -> Box:
    """Assign an axiom to exactly one of TBox, RBox, ABox."""
    if isinstance(axiom, TBOX_TYPES):
        return Box.TBOX
    if isinstance(axiom, RBOX_TYPES):
        return Box.RBOX
    if isinstance(axiom, ABOX_TYPES):
        return Box.ABOX
    raise TypeError(f"unknown axiom: {axiom!r}")


def is_taxonomic(axiom: Axiom) -> bool:
    """True iff the axiom is a SubClassOf between two named classes."""
    return (
        isinstance(axiom, SubClassOf)
        and isinstance(axiom.sub, Named)
        and isinstance(axiom.sup, Named)
    )


def signature_of(axiom: Axiom) -> "Signature":
    """All entity names occurring in the axiom, nested expressions included.

    Top and Bottom never appear in a signature.
    """
    out: set[EntityRef] = set()
    if isinstance(axiom, SubClassOf):
        _collect_expr(axiom.sub, out)
        _collect_expr(axiom.sup, out)
    elif isinstance(axiom, (EquivalentClasses, DisjointClasses)):
        for o in axiom.operands:
            _collect_expr(o, out)
    elif isinstance(axiom, ClassAssertion):
        out.add(axiom.individual)
        _collect_expr(axiom.expr, out)
    elif isinstance(axiom, ObjectPropertyAssertion):
        out.add(axiom.subject)
        out.add(axiom.property)
        out.add(axiom.object)
    elif isinstance(axiom, SubObjectPropertyOf):
        out.add(axiom.sub)
        out.add(axiom.sup)
    elif isinstance(axiom, SubPropertyChainOf):
        out.update(axiom.chain)
        out.add(axiom.sup)
    elif isinstance(axiom, EquivalentObjectProperties):
        out.update(axiom.operands)
    elif isinstance(axiom, InverseObjectProperties):
        out.add(axiom.first)
        out.add(axiom.second)
    elif isinstance(axiom, (ObjectPropertyDomain, ObjectPropertyRange)):
        out.add(axiom.property)
        _collect_expr(axiom.expr, out)
    elif isinstance(axiom, Characteristic):
        out.add(axiom.property)
    else:
        raise TypeError(f"unknown axiom: {axiom!r}")
    return Signature(frozenset(out))


def axiom_sort_key(axiom: Axiom) -> tuple:
    return axiom.key()


# ---------------------------------------------------------------------------
# Signature and Ontology
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Signature:
    """A set of entity names; membership is by (iri, kind)."""

    entities: frozenset[EntityRef] = frozenset()

    def __contains__(self, e: EntityRef) -> bool:
        return e in self.entities

    def __iter__(self) -> Iterator[EntityRef]:
        return iter(self.entities)

    def __len__(self) -> int:
        return len(self.entities)

    def __or__(self, other: "Signature") -> "Signature":
        return Signature(self.entities | other.entities)

    def intersects(self, other: "Signature") -> bool:
        return not self.entities.isdisjoint(other.entities)

    def of_kind(self, kind: EntityKind) -> frozenset[EntityRef]:
        return frozenset(e for e in self.entities if e.kind == kind)


@dataclass(frozen=True)
class Ontology:
    """An immutable ontology: TBox/RBox/ABox axiom sets plus vocabulary.

    The vocabulary is derived, never stored independently, so it always equals
    the union of the signatures of the contained axioms.
    """

    tbox: frozenset[Axiom]
    rbox: frozenset[Axiom]
    abox: frozenset[Axiom]
    vocabulary: frozenset[EntityRef]
    imports: tuple[str, ...] = ()
    iri: Optional[str] = None

    @staticmethod
    def from_axioms(
        axioms: Iterable[Axiom],
        imports: Iterable[str] = (),
        iri: Optional[str] = None,
    ) -> "Ontology":
        tbox: set[Axiom] = set()
        rbox: set[Axiom] = set()
        abox: set[Axiom] = set()
        vocab: set[EntityRef] = set()
        for ax in axioms:
            box = classify_box(ax)
            if box is Box.TBOX:
                tbox.add(ax)
            elif box is Box.RBOX:
                rbox.add(ax)
            else:
                abox.add(ax)
            vocab.update(signature_of(ax).entities)
        return Ontology(
            tbox=frozenset(tbox),
            rbox=frozenset(rbox),
            abox=frozenset(abox),
            vocabulary=frozenset(vocab),
            imports=tuple(imports),
            iri=iri,
        )

    def axioms(self) -> frozenset[Axiom]:
        return self.tbox | self.rbox | self.abox

    def schema_axioms(self) -> frozenset[Axiom]:
        return self.tbox | self.rbox

    def __len__(self) -> int:
        return len(self.tbox) + len(self.rbox) + len(self.abox)

    def punning_conflicts(self) -> dict[str, frozenset[EntityKind]]:
        """IRIs carried by more than one entity kind in the vocabulary."""
        kinds: dict[str, set[EntityKind]] = {}
        for e in self.vocabulary:
            kinds.setdefault(e.iri, set()).add(e.kind)
        return {iri: frozenset(ks) for iri, ks in kinds.items() if len(ks) > 1}

    def with_axioms(self, extra: Iterable[Axiom]) -> "Ontology":
        return Ontology.from_axioms(
            list(self.axioms()) + list(extra), imports=self.imports, iri=self.iri
        )

    def without_axioms(self, removed: Iterable[Axiom]) -> "Ontology":
        gone = set(removed)
        return Ontology.from_axioms(
            [a for a in self.axioms() if a not in gone], imports=self.imports, iri=self.iri
        )
