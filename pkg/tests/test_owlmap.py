import pytest

from kgdistill.model import (
    Characteristic,
    CharacteristicKind,
    ClassAssertion,
    DisjointClasses,
    EquivalentClasses,
    Named,
    ObjectPropertyAssertion,
    ObjectPropertyDomain,
    SomeValuesFrom,
    SubClassOf,
    SubPropertyChainOf,
    TOP,
    UnionOf,
)
from kgdistill.rdfio import (
    DanglingListError,
    RdfFormat,
    parse_ontology,
    triples_to_axioms,
)
from kgdistill.rdfio.owlmap import SKIP_ANNOTATION, SKIP_LITERAL, SKIP_UNRECOGNIZED
from kgdistill.rdfio.ntriples import parse_ntriples

from conftest import C, ce, ie, pe

PREFIXES = """@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .
@prefix ex: <http://example.org/> .
"""


def parse_ttl(body: str, infer=False):
    return parse_ontology(PREFIXES + body, RdfFormat.TURTLE, infer_declarations=infer)


def test_union_list_fixture_binds_to_named_class():
    # the five-triple rdf:List fixture, decoded by hand
    doc = """
_:l rdf:first ex:A .
_:l rdf:rest _:m .
_:m rdf:first ex:B .
_:m rdf:rest rdf:nil .
ex:C owl:unionOf _:l .
"""
    onto, report = parse_ttl(doc)
    expected = EquivalentClasses((C("C"), UnionOf((C("A"), C("B")))))
    assert expected in onto.tbox
    assert report.triples_skipped == 0


def test_transitive_property_typing():
    onto, _ = parse_ttl("ex:p rdf:type owl:TransitiveProperty .")
    assert Characteristic(pe("p"), CharacteristicKind.TRANSITIVE) in onto.rbox


def test_object_property_assertion_requires_declarations():
    doc = """
ex:i rdf:type owl:NamedIndividual .
ex:j rdf:type owl:NamedIndividual .
ex:p rdf:type owl:ObjectProperty .
ex:i ex:p ex:j .
"""
    onto, report = parse_ttl(doc)
    assert ObjectPropertyAssertion(ie("i"), pe("p"), ie("j")) in onto.abox
    assert report.triples_skipped == 0
    assert report.triples_consumed == report.total_triples


def test_undeclared_predicate_skipped_without_infer_flag():
    doc = "ex:i ex:p ex:j .\n"
    onto, report = parse_ttl(doc)
    assert len(onto.abox) == 0
    assert report.skip_reasons[SKIP_UNRECOGNIZED] == 1

    onto2, report2 = parse_ttl(doc, infer=True)
    assert ObjectPropertyAssertion(ie("i"), pe("p"), ie("j")) in onto2.abox
    assert report2.triples_skipped == 0


def test_type_triple_becomes_class_assertion():
    onto, _ = parse_ttl("ex:i rdf:type ex:A .")
    assert ClassAssertion(ie("i"), C("A")) in onto.abox


def test_metamodeling_type_triple_skipped():
    doc = """
ex:A rdfs:subClassOf ex:B .
ex:A rdf:type ex:Meta .
"""
    onto, report = parse_ttl(doc)
    assert len(onto.abox) == 0
    assert report.skip_reasons[SKIP_UNRECOGNIZED] == 1


def test_literal_objects_counted_not_errors():
    doc = 'ex:i ex:height "42"^^xsd:integer .\n'
    onto, report = parse_ttl(doc)
    assert report.skip_reasons[SKIP_LITERAL] == 1


def test_annotations_counted():
    doc = 'ex:A rdfs:label "a label" .\nex:A rdfs:comment "c" .\n'
    _, report = parse_ttl(doc)
    assert report.skip_reasons[SKIP_ANNOTATION] == 2


def test_dangling_list_is_an_error():
    doc = """
_:l rdf:first ex:A .
ex:C owl:unionOf _:l .
"""
    with pytest.raises(DanglingListError):
        parse_ttl(doc)


def test_subclass_with_restriction():
    doc = """
ex:A rdfs:subClassOf [ rdf:type owl:Restriction ;
                       owl:onProperty ex:r ;
                       owl:someValuesFrom ex:B ] .
"""
    onto, report = parse_ttl(doc)
    assert SubClassOf(C("A"), SomeValuesFrom(pe("r"), C("B"))) in onto.tbox
    assert report.triples_skipped == 0


def test_gci_with_restriction_subject():
    doc = """
[ rdf:type owl:Restriction ; owl:onProperty ex:r ; owl:someValuesFrom ex:D ]
    rdfs:subClassOf ex:E .
"""
    onto, _ = parse_ttl(doc)
    assert SubClassOf(SomeValuesFrom(pe("r"), C("D")), C("E")) in onto.tbox


def test_all_disjoint_classes():
    doc = """
[] rdf:type owl:AllDisjointClasses ; owl:members (ex:A ex:B ex:C) .
"""
    onto, report = parse_ttl(doc)
    assert DisjointClasses((C("A"), C("B"), C("C"))) in onto.tbox
    assert report.triples_skipped == 0


def test_property_chain():
    doc = "ex:r owl:propertyChainAxiom (ex:p ex:q) .\n"
    onto, _ = parse_ttl(doc)
    assert SubPropertyChainOf((pe("p"), pe("q")), pe("r")) in onto.rbox


def test_domain_of_datatype_property_skipped():
    doc = """
ex:d rdfs:range xsd:string .
ex:d rdfs:domain ex:A .
"""
    onto, report = parse_ttl(doc)
    assert len(onto.rbox) == 0
    assert report.triples_skipped == 2


def test_cardinality_forms():
    doc = """
ex:A rdfs:subClassOf [ rdf:type owl:Restriction ; owl:onProperty ex:p ;
                       owl:maxCardinality "1"^^xsd:nonNegativeInteger ] .
ex:B rdfs:subClassOf [ rdf:type owl:Restriction ; owl:onProperty ex:p ;
                       owl:minQualifiedCardinality "2"^^xsd:nonNegativeInteger ;
                       owl:onClass ex:C ] .
"""
    onto, report = parse_ttl(doc)
    from kgdistill.model import MaxCardinality, MinCardinality

    assert SubClassOf(C("A"), MaxCardinality(1, pe("p"), TOP)) in onto.tbox
    assert SubClassOf(C("B"), MinCardinality(2, pe("p"), C("C"))) in onto.tbox
    assert report.triples_skipped == 0


def test_ontology_header_and_imports():
    doc = """
<http://example.org/onto> rdf:type owl:Ontology ;
    owl:imports <http://example.org/dep> .
"""
    onto, report = parse_ttl(doc)
    assert onto.iri == "http://example.org/onto"
    assert onto.imports == ("http://example.org/dep",)
    assert report.triples_skipped == 0


def test_every_triple_accounted():
    doc = """
ex:A rdfs:subClassOf ex:B .
ex:A rdfs:label "A" .
ex:i ex:unknown ex:j .
"""
    _, report = parse_ttl(doc)
    assert report.triples_consumed + report.triples_skipped == report.total_triples
    assert report.triples_skipped == 2


def test_owl_thing_typing_parses_to_top():
    onto, _ = parse_ttl("ex:i rdf:type owl:Thing .")
    assert ClassAssertion(ie("i"), TOP) in onto.abox


def test_nt_input_accepted():
    nt = "<http://example.org/A> <http://www.w3.org/2000/01/rdf-schema#subClassOf> <http://example.org/B> .\n"
    onto, _ = triples_to_axioms(parse_ntriples(nt))
    assert SubClassOf(C("A"), C("B")) in onto.tbox


def test_malformed_list_counted():
    # two rdf:first values on one node make the list undecodable
    doc = """
_:l rdf:first ex:A .
_:l rdf:first ex:B .
_:l rdf:rest rdf:nil .
ex:C owl:unionOf _:l .
"""
    onto, report = parse_ttl(doc)
    assert len(onto.tbox) == 0
    from kgdistill.rdfio.owlmap import SKIP_MALFORMED_LIST

    assert report.skip_reasons[SKIP_MALFORMED_LIST] >= 2
    assert report.triples_consumed + report.triples_skipped == report.total_triples
