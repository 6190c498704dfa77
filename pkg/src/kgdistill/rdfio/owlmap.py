"""Bidirectional OWL 2 RDF mapping: triple streams to axioms and back.

Decoding is multi-pass: index triples, close rdf:Lists, collect entity
declarations (explicit typings plus structural positions such as
rdfs:subClassOf endpoints or owl:onProperty objects), then recognize one
axiom per mapped pattern. Every input triple is either consumed by a
recognized axiom / declaration / list scaffold or counted in the skip
report; nothing is silently dropped.

Strictness: object-property assertions require the predicate to be a
declared object property. With ``infer_declarations=True`` any undeclared
predicate joining two IRI endpoints is taken as an object property, which
is what DBpedia-style dumps without typings need.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from ..model import (
    AllValuesFrom,
    Axiom,
    BOTTOM,
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
    Named,
    ObjectPropertyAssertion,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    Ontology,
    SomeValuesFrom,
    SubClassOf,
    SubObjectPropertyOf,
    SubPropertyChainOf,
    TOP,
    Top,
    Bottom,
    UnionOf,
    axiom_sort_key,
    clazz,
    individual,
    obj_prop,
)
from . import terms as T
from .terms import BNode, IRI, Literal, TripleRecord

Term = Union[IRI, BNode, Literal]

SKIP_LITERAL = "literal-object assertion"
SKIP_ANNOTATION = "annotation"
SKIP_UNRECOGNIZED = "unrecognized pattern"
SKIP_MALFORMED_LIST = "malformed list"

_XSD_DATATYPES_PREFIX = T.XSD_NS
_RDFS_LITERAL = T.RDFS_NS + "Literal"

_DECLARATION_CLASSES = {
    T.OWL_CLASS,
    T.RDFS_CLASS,
    T.OWL_OBJECT_PROPERTY,
    T.OWL_DATATYPE_PROPERTY,
    T.OWL_ANNOTATION_PROPERTY,
    T.OWL_NAMED_INDIVIDUAL,
    T.OWL_ONTOLOGY,
    T.RDFS_NS + "Datatype",
}


class DanglingListError(ValueError):
    pass


@dataclass
class ParseReport:
    """Accounting of what the decoder did with every input triple."""

    total_triples: int = 0
    axioms_read: int = 0
    triples_consumed: int = 0
    triples_skipped: int = 0
    skip_reasons: Counter = field(default_factory=Counter)

    def merge(self, other: "ParseReport") -> None:
        self.total_triples += other.total_triples
        self.axioms_read += other.axioms_read
        self.triples_consumed += other.triples_consumed
        self.triples_skipped += other.triples_skipped
        self.skip_reasons.update(other.skip_reasons)


class _Decoder:
    def __init__(
        self,
        triples: Iterable[TripleRecord],
        infer_declarations: bool,
        predeclared: Optional[Ontology] = None,
    ):
        self.triples: list[TripleRecord] = list(triples)
        self.infer = infer_declarations
        self.predeclared = predeclared
        self.consumed = bytearray(len(self.triples))
        self.skip_reason: dict[int, str] = {}
        self.axioms: list[Axiom] = []

        self.by_subject: dict[Term, list[int]] = {}
        self.by_pred: dict[str, list[int]] = {}
        for i, t in enumerate(self.triples):
            self.by_subject.setdefault(t.subject, []).append(i)
            self.by_pred.setdefault(t.predicate.value, []).append(i)

        self.lists: dict[Term, tuple[list[Term], list[int]]] = {}
        self.malformed_list_nodes: set[Term] = set()

        self.classes: set[str] = set()
        self.objprops: set[str] = set()
        self.dataprops: set[str] = set()
        self.annprops: set[str] = set()
        self.individuals: set[str] = set()

        self.ontology_iri: Optional[str] = None
        self.imports: list[str] = []

    # -- helpers ---------------------------------------------------------

    def _mark(self, idx: int) -> None:
        self.consumed[idx] = 1

    def _pvals(self, subject: Term, pred: str) -> list[tuple[Term, int]]:
        out = []
        for i in self.by_subject.get(subject, ()):
            t = self.triples[i]
            if t.predicate.value == pred:
                out.append((t.object, i))
        return out

    def _pval(self, subject: Term, pred: str) -> Optional[tuple[Term, int]]:
        vals = self._pvals(subject, pred)
        return vals[0] if len(vals) == 1 else None

    # -- pass 1: rdf lists -----------------------------------------------

    def _close_lists(self) -> None:
        firsts: dict[Term, tuple[Term, int]] = {}
        rests: dict[Term, tuple[Term, int]] = {}
        for i, t in enumerate(self.triples):
            if t.predicate.value == T.RDF_FIRST:
                if t.subject in firsts:
                    self.malformed_list_nodes.add(t.subject)
                firsts[t.subject] = (t.object, i)
            elif t.predicate.value == T.RDF_REST:
                if t.subject in rests:
                    self.malformed_list_nodes.add(t.subject)
                rests[t.subject] = (t.object, i)
        for node in firsts:
            if node in self.lists or node in self.malformed_list_nodes:
                continue
            items: list[Term] = []
            indices: list[int] = []
            cur: Term = node
            seen: set[Term] = set()
            ok = True
            while True:
                if cur in seen:
                    ok = False
                    break
                seen.add(cur)
                if cur not in firsts or cur not in rests:
                    ok = False
                    break
                items.append(firsts[cur][0])
                indices.append(firsts[cur][1])
                indices.append(rests[cur][1])
                nxt = rests[cur][0]
                if isinstance(nxt, IRI) and nxt.value == T.RDF_NIL:
                    break
                if isinstance(nxt, Literal):
                    ok = False
                    break
                cur = nxt
            if not ok:
                if cur in firsts and cur not in rests:
                    raise DanglingListError(
                        f"rdf:List at {node} not terminated by rdf:nil"
                    )
                self.malformed_list_nodes.add(node)
                continue
            self.lists[node] = (items, indices)

    # -- pass 2: declarations --------------------------------------------

    def _declarations(self) -> None:
        if self.predeclared is not None:
            for e in self.predeclared.vocabulary:
                if e.kind is EntityKind.CLASS:
                    self.classes.add(e.iri)
                elif e.kind is EntityKind.OBJECT_PROPERTY:
                    self.objprops.add(e.iri)
                elif e.kind is EntityKind.DATA_PROPERTY:
                    self.dataprops.add(e.iri)
        for i in self.by_pred.get(T.RDF_TYPE, ()):
            t = self.triples[i]
            if not isinstance(t.object, IRI):
                continue
            obj = t.object.value
            subj = t.subject
            if obj == T.OWL_ONTOLOGY:
                if isinstance(subj, IRI) and self.ontology_iri is None:
                    self.ontology_iri = subj.value
                self._mark(i)
            elif obj in (T.OWL_CLASS, T.RDFS_CLASS):
                if isinstance(subj, IRI):
                    self.classes.add(subj.value)
                    self._mark(i)
            elif obj == T.OWL_OBJECT_PROPERTY:
                if isinstance(subj, IRI):
                    self.objprops.add(subj.value)
                    self._mark(i)
            elif obj == T.OWL_DATATYPE_PROPERTY:
                if isinstance(subj, IRI):
                    self.dataprops.add(subj.value)
                    self._mark(i)
            elif obj == T.OWL_ANNOTATION_PROPERTY:
                if isinstance(subj, IRI):
                    self.annprops.add(subj.value)
                    self._mark(i)
            elif obj == T.OWL_NAMED_INDIVIDUAL:
                if isinstance(subj, IRI):
                    self.individuals.add(subj.value)
                    self._mark(i)
            elif obj == T.RDFS_NS + "Datatype":
                self._mark(i)

        for i in self.by_pred.get(T.OWL_IMPORTS, ()):
            t = self.triples[i]
            if isinstance(t.object, IRI):
                self.imports.append(t.object.value)
                self._mark(i)

        def note_class(term: Term) -> None:
            if isinstance(term, IRI) and not self._is_builtin(term.value):
                self.classes.add(term.value)

        def note_objprop(term: Term) -> None:
            if isinstance(term, IRI) and not self._is_builtin(term.value):
                iri = term.value
                if iri not in self.dataprops and iri not in self.annprops:
                    self.objprops.add(iri)

        for t in self.triples:
            p = t.predicate.value
            if p in (T.RDFS_SUBCLASSOF, T.OWL_EQUIVALENT_CLASS, T.OWL_DISJOINT_WITH):
                note_class(t.subject)
                note_class(t.object)
            elif p == T.OWL_COMPLEMENT_OF:
                note_class(t.object)
            elif p == T.OWL_ON_CLASS:
                note_class(t.object)
            elif p in (T.OWL_SOME_VALUES_FROM, T.OWL_ALL_VALUES_FROM):
                note_class(t.object)
            elif p == T.OWL_ON_PROPERTY:
                note_objprop(t.object)
            elif p in (T.OWL_INVERSE_OF, T.OWL_EQUIVALENT_PROPERTY):
                note_objprop(t.subject)
                note_objprop(t.object)
            elif p == T.OWL_PROPERTY_CHAIN_AXIOM:
                note_objprop(t.subject)
                if t.object in self.lists:
                    for item in self.lists[t.object][0]:
                        note_objprop(item)
            elif p == T.RDFS_SUBPROPERTYOF:
                note_objprop(t.subject)
                note_objprop(t.object)
            elif p in (T.RDFS_DOMAIN, T.RDFS_RANGE):
                if self._looks_data_property(t.subject):
                    if isinstance(t.subject, IRI):
                        self.dataprops.add(t.subject.value)
                else:
                    note_objprop(t.subject)
                if p == T.RDFS_DOMAIN or not self._is_datatype_term(t.object):
                    note_class(t.object)
            elif p == T.RDF_TYPE and isinstance(t.object, IRI):
                if t.object.value in T.CHARACTERISTIC_CLASS_TO_KIND:
                    note_objprop(t.subject)

        self.objprops -= self.dataprops
        self.objprops -= self.annprops

    def _looks_data_property(self, subject: Term) -> bool:
        if not isinstance(subject, IRI):
            return True
        if subject.value in self.dataprops:
            return True
        if subject.value in self.objprops:
            return False
        for obj, _ in self._pvals(subject, T.RDFS_RANGE):
            if self._is_datatype_term(obj):
                return True
        return False

    @staticmethod
    def _is_datatype_term(term: Term) -> bool:
        return isinstance(term, IRI) and (
            term.value.startswith(_XSD_DATATYPES_PREFIX) or term.value == _RDFS_LITERAL
        )

    @staticmethod
    def _is_builtin(iri: str) -> bool:
        return (
            iri.startswith(T.RDF_NS)
            or iri.startswith(T.RDFS_NS)
            or iri.startswith(T.OWL_NS)
            or iri.startswith(T.XSD_NS)
        )

    # -- class expression decoding ----------------------------------------

    def _decode_expr(
        self, term: Term, visiting: Optional[set[Term]] = None
    ) -> Optional[tuple[ClassExpr, list[int]]]:
        if isinstance(term, Literal):
            return None
        if isinstance(term, IRI):
            if term.value == T.OWL_THING:
                return TOP, []
            if term.value == T.OWL_NOTHING:
                return BOTTOM, []
            if self._is_builtin(term.value):
                return None
            return Named(clazz(term.value)), []

        if visiting is None:
            visiting = set()
        if term in visiting:
            return None
        visiting = visiting | {term}

        used: list[int] = []
        for obj, i in self._pvals(term, T.RDF_TYPE):
            if isinstance(obj, IRI) and obj.value in (T.OWL_RESTRICTION, T.OWL_CLASS, T.RDFS_CLASS):
                used.append(i)

        for pred, ctor in ((T.OWL_UNION_OF, UnionOf), (T.OWL_INTERSECTION_OF, IntersectionOf)):
            got = self._pval(term, pred)
            if got is not None:
                obj, i = got
                if obj in self.malformed_list_nodes or obj not in self.lists:
                    return None
                items, list_idx = self.lists[obj]
                operands = []
                for item in items:
                    sub = self._decode_expr(item, visiting)
                    if sub is None:
                        return None
                    operands.append(sub[0])
                    used.extend(sub[1])
                if len(operands) < 2:
                    return None
                return ctor(tuple(operands)), used + [i] + list_idx

        got = self._pval(term, T.OWL_COMPLEMENT_OF)
        if got is not None:
            obj, i = got
            sub = self._decode_expr(obj, visiting)
            if sub is None:
                return None
            return ComplementOf(sub[0]), used + [i] + sub[1]

        on_prop = self._pval(term, T.OWL_ON_PROPERTY)
        if on_prop is not None:
            pterm, pi = on_prop
            if not isinstance(pterm, IRI):
                return None
            prop = obj_prop(pterm.value)
            used.append(pi)

            for pred, ctor2 in (
                (T.OWL_SOME_VALUES_FROM, SomeValuesFrom),
                (T.OWL_ALL_VALUES_FROM, AllValuesFrom),
            ):
                got = self._pval(term, pred)
                if got is not None:
                    obj, i = got
                    sub = self._decode_expr(obj, visiting)
                    if sub is None:
                        return None
                    return ctor2(prop, sub[0]), used + [i] + sub[1]

            qualified = (
                (T.OWL_MIN_QUALIFIED_CARDINALITY, MinCardinality),
                (T.OWL_MAX_QUALIFIED_CARDINALITY, MaxCardinality),
                (T.OWL_QUALIFIED_CARDINALITY, ExactCardinality),
            )
            plain = (
                (T.OWL_MIN_CARDINALITY, MinCardinality),
                (T.OWL_MAX_CARDINALITY, MaxCardinality),
                (T.OWL_CARDINALITY, ExactCardinality),
            )
            for pred, ctor3 in qualified + plain:
                got = self._pval(term, pred)
                if got is None:
                    continue
                obj, i = got
                if not isinstance(obj, Literal):
                    return None
                try:
                    n = int(obj.lexical)
                except ValueError:
                    return None
                if n < 0:
                    return None
                used.append(i)
                filler: ClassExpr = TOP
                on_class = self._pval(term, T.OWL_ON_CLASS)
                if on_class is not None:
                    sub = self._decode_expr(on_class[0], visiting)
                    if sub is None:
                        return None
                    filler = sub[0]
                    used.append(on_class[1])
                    used.extend(sub[1])
                return ctor3(n, prop, filler), used
        return None

    # -- pass 3: axioms ----------------------------------------------------

    def _emit(self, axiom: Axiom, indices: Iterable[int]) -> None:
        self.axioms.append(axiom)
        for i in indices:
            self._mark(i)

    def _is_individual_term(self, term: Term) -> bool:
        if not isinstance(term, IRI):
            return False
        iri = term.value
        if self._is_builtin(iri):
            return False
        if iri in self.classes or iri in self.objprops or iri in self.dataprops:
            return False
        return True

    def _recognize(self) -> None:
        for i, t in enumerate(self.triples):
            if self.consumed[i]:
                continue
            p = t.predicate.value
            s, o = t.subject, t.object

            if p == T.RDF_TYPE and isinstance(o, IRI):
                kind = T.CHARACTERISTIC_CLASS_TO_KIND.get(o.value)
                if kind is not None:
                    if isinstance(s, IRI) and s.value in self.objprops:
                        self._emit(
                            Characteristic(obj_prop(s.value), CharacteristicKind(kind)), [i]
                        )
                    continue
                if o.value == T.OWL_ALL_DISJOINT_CLASSES:
                    members = self._pval(s, T.OWL_MEMBERS)
                    if members is None or members[0] not in self.lists:
                        continue
                    items, list_idx = self.lists[members[0]]
                    operands = []
                    used = [i, members[1]] + list_idx
                    ok = True
                    for item in items:
                        sub = self._decode_expr(item)
                        if sub is None:
                            ok = False
                            break
                        operands.append(sub[0])
                        used.extend(sub[1])
                    if ok and len(operands) >= 2:
                        self._emit(DisjointClasses(tuple(operands)), used)
                    continue
                if o.value in _DECLARATION_CLASSES or (
                    self._is_builtin(o.value)
                    and o.value not in (T.OWL_THING, T.OWL_NOTHING)
                ):
                    continue
                if not isinstance(s, IRI):
                    continue
                if s.value in self.classes or s.value in self.objprops or s.value in self.dataprops:
                    continue
                expr = self._decode_expr(o)
                if expr is None:
                    continue
                self.individuals.add(s.value)
                self._emit(
                    ClassAssertion(individual(s.value), expr[0]), [i] + expr[1]
                )
                continue

            if p == T.RDF_TYPE and isinstance(o, BNode):
                if isinstance(s, IRI) and self._is_individual_term(s):
                    expr = self._decode_expr(o)
                    if expr is not None:
                        self.individuals.add(s.value)
                        self._emit(ClassAssertion(individual(s.value), expr[0]), [i] + expr[1])
                continue

            if p == T.RDFS_SUBCLASSOF:
                se = self._decode_expr(s)
                oe = self._decode_expr(o)
                if se is not None and oe is not None:
                    self._emit(SubClassOf(se[0], oe[0]), [i] + se[1] + oe[1])
                continue

            if p == T.OWL_EQUIVALENT_CLASS:
                se = self._decode_expr(s)
                oe = self._decode_expr(o)
                if se is not None and oe is not None:
                    self._emit(EquivalentClasses((se[0], oe[0])), [i] + se[1] + oe[1])
                continue

            if p == T.OWL_DISJOINT_WITH:
                se = self._decode_expr(s)
                oe = self._decode_expr(o)
                if se is not None and oe is not None:
                    self._emit(DisjointClasses((se[0], oe[0])), [i] + se[1] + oe[1])
                continue

            if p in (T.OWL_UNION_OF, T.OWL_INTERSECTION_OF, T.OWL_COMPLEMENT_OF):
                # named class defined by a boolean expression
                if isinstance(s, IRI) and not self._is_builtin(s.value):
                    expr = self._decode_expr_from_definition(s, p, o, i)
                    if expr is not None:
                        self._emit(
                            EquivalentClasses((Named(clazz(s.value)), expr[0])), expr[1]
                        )
                continue

            if p == T.RDFS_SUBPROPERTYOF:
                if (
                    isinstance(s, IRI)
                    and isinstance(o, IRI)
                    and s.value in self.objprops
                    and o.value in self.objprops
                ):
                    self._emit(SubObjectPropertyOf(obj_prop(s.value), obj_prop(o.value)), [i])
                continue

            if p == T.OWL_PROPERTY_CHAIN_AXIOM:
                if isinstance(s, IRI) and o in self.lists:
                    items, list_idx = self.lists[o]
                    if all(isinstance(it, IRI) for it in items) and len(items) >= 2:
                        chain = tuple(obj_prop(it.value) for it in items)  # type: ignore[union-attr]
                        self._emit(
                            SubPropertyChainOf(chain, obj_prop(s.value)), [i] + list_idx
                        )
                continue

            if p == T.OWL_EQUIVALENT_PROPERTY:
                if (
                    isinstance(s, IRI)
                    and isinstance(o, IRI)
                    and s.value in self.objprops
                    and o.value in self.objprops
                ):
                    self._emit(
                        EquivalentObjectProperties((obj_prop(s.value), obj_prop(o.value))), [i]
                    )
                continue

            if p == T.OWL_INVERSE_OF:
                if isinstance(s, IRI) and isinstance(o, IRI):
                    self._emit(
                        InverseObjectProperties(obj_prop(s.value), obj_prop(o.value)), [i]
                    )
                continue

            if p in (T.RDFS_DOMAIN, T.RDFS_RANGE):
                if not (isinstance(s, IRI) and s.value in self.objprops):
                    continue
                expr = self._decode_expr(o)
                if expr is None:
                    continue
                ctor4 = ObjectPropertyDomain if p == T.RDFS_DOMAIN else ObjectPropertyRange
                self._emit(ctor4(obj_prop(s.value), expr[0]), [i] + expr[1])
                continue

            # plain s/p/o: object property assertion?
            if isinstance(s, IRI) and isinstance(o, IRI) and not self._is_builtin(p):
                known = p in self.objprops
                if (known or (self.infer and p not in self.dataprops and p not in self.annprops)) \
                        and self._is_individual_term(s) and self._is_individual_term(o):
                    if self.infer and not known:
                        self.objprops.add(p)
                    self.individuals.add(s.value)
                    self.individuals.add(o.value)
                    self._emit(
                        ObjectPropertyAssertion(individual(s.value), obj_prop(p), individual(o.value)),
                        [i],
                    )
                    continue

    def _decode_expr_from_definition(
        self, subject: IRI, pred: str, obj: Term, idx: int
    ) -> Optional[tuple[ClassExpr, list[int]]]:
        if pred == T.OWL_COMPLEMENT_OF:
            sub = self._decode_expr(obj)
            if sub is None:
                return None
            return ComplementOf(sub[0]), [idx] + sub[1]
        if obj not in self.lists:
            return None
        items, list_idx = self.lists[obj]
        operands = []
        used = [idx] + list_idx
        for item in items:
            sub = self._decode_expr(item)
            if sub is None:
                return None
            operands.append(sub[0])
            used.extend(sub[1])
        if len(operands) < 2:
            return None
        ctor = UnionOf if pred == T.OWL_UNION_OF else IntersectionOf
        return ctor(tuple(operands)), used

    # -- finish ------------------------------------------------------------

    def run(self) -> tuple[Ontology, ParseReport]:
        self._close_lists()
        self._declarations()
        self._recognize()

        report = ParseReport(total_triples=len(self.triples))
        report.axioms_read = len(set(self.axioms))
        for i, t in enumerate(self.triples):
            if self.consumed[i]:
                report.triples_consumed += 1
                continue
            report.triples_skipped += 1
            p = t.predicate.value
            subj_is_list = t.subject in self.malformed_list_nodes
            if p in (T.RDF_FIRST, T.RDF_REST) and (
                subj_is_list or t.subject not in self.lists
            ):
                report.skip_reasons[SKIP_MALFORMED_LIST] += 1
            elif p in T.ANNOTATION_PREDICATES or p in self.annprops:
                report.skip_reasons[SKIP_ANNOTATION] += 1
            elif isinstance(t.object, Literal):
                report.skip_reasons[SKIP_LITERAL] += 1
            else:
                report.skip_reasons[SKIP_UNRECOGNIZED] += 1

        ontology = Ontology.from_axioms(
            self.axioms, imports=self.imports, iri=self.ontology_iri
        )
        return ontology, report


def triples_to_axioms(
    triples: Iterable[TripleRecord],
    *,
    infer_declarations: bool = False,
    predeclared: Optional[Ontology] = None,
) -> tuple[Ontology, ParseReport]:
    """Decode an OWL 2 RDF triple set into an Ontology plus skip report.

    `predeclared` feeds entity declarations from another document (typically
    the schema) into recognition, the way an endpoint query sees typing
    triples from the whole graph rather than one dump file.
    """
    return _Decoder(triples, infer_declarations, predeclared).run()


# ---------------------------------------------------------------------------
# Inverse mapping
# ---------------------------------------------------------------------------


class _Emitter:
    def __init__(self) -> None:
        self.triples: list[TripleRecord] = []
        self._gen = 0
        self._iris: dict[str, IRI] = {}

    def fresh(self) -> BNode:
        self._gen += 1
        return BNode(f"b{self._gen}")

    def iri(self, value: str) -> IRI:
        got = self._iris.get(value)
        if got is None:
            got = IRI(value)
            self._iris[value] = got
        return got

    def add(self, s: Union[IRI, BNode], p: str, o: Term) -> None:
        self.triples.append(TripleRecord(s, self.iri(p), o))

    def expr_ref(self, expr: ClassExpr) -> Union[IRI, BNode]:
        if isinstance(expr, Named):
            return self.iri(expr.entity.iri)
        if isinstance(expr, Top):
            return self.iri(T.OWL_THING)
        if isinstance(expr, Bottom):
            return self.iri(T.OWL_NOTHING)
        node = self.fresh()
        if isinstance(expr, (UnionOf, IntersectionOf)):
            self.add(node, T.RDF_TYPE, self.iri(T.OWL_CLASS))
            pred = T.OWL_UNION_OF if isinstance(expr, UnionOf) else T.OWL_INTERSECTION_OF
            self.add(node, pred, self.list_ref([self.expr_ref(o) for o in expr.operands]))
        elif isinstance(expr, ComplementOf):
            self.add(node, T.RDF_TYPE, self.iri(T.OWL_CLASS))
            self.add(node, T.OWL_COMPLEMENT_OF, self.expr_ref(expr.operand))
        elif isinstance(expr, (SomeValuesFrom, AllValuesFrom)):
            self.add(node, T.RDF_TYPE, self.iri(T.OWL_RESTRICTION))
            self.add(node, T.OWL_ON_PROPERTY, self.iri(expr.property.iri))
            pred = (
                T.OWL_SOME_VALUES_FROM
                if isinstance(expr, SomeValuesFrom)
                else T.OWL_ALL_VALUES_FROM
            )
            self.add(node, pred, self.expr_ref(expr.filler))
        elif isinstance(expr, (MinCardinality, MaxCardinality, ExactCardinality)):
            self.add(node, T.RDF_TYPE, self.iri(T.OWL_RESTRICTION))
            self.add(node, T.OWL_ON_PROPERTY, self.iri(expr.property.iri))
            n_lit = Literal(str(expr.n), datatype=T.XSD_NON_NEGATIVE_INTEGER)
            unqualified = isinstance(expr.filler, Top)
            if isinstance(expr, MinCardinality):
                pred = T.OWL_MIN_CARDINALITY if unqualified else T.OWL_MIN_QUALIFIED_CARDINALITY
            elif isinstance(expr, MaxCardinality):
                pred = T.OWL_MAX_CARDINALITY if unqualified else T.OWL_MAX_QUALIFIED_CARDINALITY
            else:
                pred = T.OWL_CARDINALITY if unqualified else T.OWL_QUALIFIED_CARDINALITY
            self.add(node, pred, n_lit)
            if not unqualified:
                self.add(node, T.OWL_ON_CLASS, self.expr_ref(expr.filler))
        else:
            raise TypeError(f"cannot serialize expression {expr!r}")
        return node

    def list_ref(self, items: list[Term]) -> Union[IRI, BNode]:
        if not items:
            return self.iri(T.RDF_NIL)
        nodes = [self.fresh() for _ in items]
        for i, item in enumerate(items):
            self.add(nodes[i], T.RDF_FIRST, item)
            rest: Term = nodes[i + 1] if i + 1 < len(items) else self.iri(T.RDF_NIL)
            self.add(nodes[i], T.RDF_REST, rest)
        return nodes[0]


_DECL_BY_KIND = {
    EntityKind.CLASS: T.OWL_CLASS,
    EntityKind.OBJECT_PROPERTY: T.OWL_OBJECT_PROPERTY,
    EntityKind.DATA_PROPERTY: T.OWL_DATATYPE_PROPERTY,
    EntityKind.NAMED_INDIVIDUAL: T.OWL_NAMED_INDIVIDUAL,
}


def axioms_to_triples(ontology: Ontology) -> list[TripleRecord]:
    """Deterministic inverse mapping; blank labels follow emission order."""
    em = _Emitter()

    header: Union[IRI, BNode] = IRI(ontology.iri) if ontology.iri else em.fresh()
    em.add(header, T.RDF_TYPE, IRI(T.OWL_ONTOLOGY))
    for imp in sorted(ontology.imports):
        em.add(header, T.OWL_IMPORTS, IRI(imp))

    for e in sorted(ontology.vocabulary, key=lambda e: (e.kind.value, e.iri)):
        em.add(em.iri(e.iri), T.RDF_TYPE, em.iri(_DECL_BY_KIND[e.kind]))

    for ax in sorted(ontology.axioms(), key=axiom_sort_key):
        _axiom_triples(em, ax)
    return em.triples


def _axiom_triples(em: _Emitter, ax: Axiom) -> None:
    if isinstance(ax, SubClassOf):
        em.add(em.expr_ref(ax.sub), T.RDFS_SUBCLASSOF, em.expr_ref(ax.sup))
    elif isinstance(ax, EquivalentClasses):
        refs = [em.expr_ref(o) for o in ax.operands]
        for a, b in zip(refs, refs[1:]):
            em.add(a, T.OWL_EQUIVALENT_CLASS, b)  # type: ignore[arg-type]
    elif isinstance(ax, DisjointClasses):
        if len(ax.operands) == 2:
            em.add(
                em.expr_ref(ax.operands[0]), T.OWL_DISJOINT_WITH, em.expr_ref(ax.operands[1])
            )
        else:
            node = em.fresh()
            em.add(node, T.RDF_TYPE, IRI(T.OWL_ALL_DISJOINT_CLASSES))
            em.add(node, T.OWL_MEMBERS, em.list_ref([em.expr_ref(o) for o in ax.operands]))
    elif isinstance(ax, ClassAssertion):
        em.add(em.iri(ax.individual.iri), T.RDF_TYPE, em.expr_ref(ax.expr))
    elif isinstance(ax, ObjectPropertyAssertion):
        em.add(em.iri(ax.subject.iri), ax.property.iri, em.iri(ax.object.iri))
    elif isinstance(ax, SubObjectPropertyOf):
        em.add(em.iri(ax.sub.iri), T.RDFS_SUBPROPERTYOF, em.iri(ax.sup.iri))
    elif isinstance(ax, SubPropertyChainOf):
        em.add(
            em.iri(ax.sup.iri),
            T.OWL_PROPERTY_CHAIN_AXIOM,
            em.list_ref([em.iri(p.iri) for p in ax.chain]),
        )
    elif isinstance(ax, EquivalentObjectProperties):
        ops = list(ax.operands)
        for a, b in zip(ops, ops[1:]):
            em.add(em.iri(a.iri), T.OWL_EQUIVALENT_PROPERTY, em.iri(b.iri))
    elif isinstance(ax, InverseObjectProperties):
        em.add(em.iri(ax.first.iri), T.OWL_INVERSE_OF, em.iri(ax.second.iri))
    elif isinstance(ax, ObjectPropertyDomain):
        em.add(em.iri(ax.property.iri), T.RDFS_DOMAIN, em.expr_ref(ax.expr))
    elif isinstance(ax, ObjectPropertyRange):
        em.add(em.iri(ax.property.iri), T.RDFS_RANGE, em.expr_ref(ax.expr))
    elif isinstance(ax, Characteristic):
        em.add(
            em.iri(ax.property.iri),
            T.RDF_TYPE,
            em.iri(T.KIND_TO_CHARACTERISTIC_CLASS[ax.kind.value]),
        )
    else:
        raise TypeError(f"cannot serialize axiom {ax!r}")
