import pytest

from kgdistill.model import (
    Characteristic,
    CharacteristicKind,
    ObjectPropertyDomain,
    SubClassOf,
    SomeValuesFrom,
    UnionOf,
    EquivalentClasses,
)
from kgdistill.rdfio import RdfFormat, RdfSyntaxError, parse_ontology, parse_rdfxml

from conftest import C, pe

DOC = """<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xmlns:owl="http://www.w3.org/2002/07/owl#"
         xml:base="http://example.org/">
  <owl:Ontology rdf:about="http://example.org/onto"/>
  <owl:Class rdf:about="http://example.org/A">
    <rdfs:subClassOf rdf:resource="http://example.org/B"/>
    <rdfs:label>class A</rdfs:label>
  </owl:Class>
  <owl:Class rdf:about="http://example.org/C">
    <owl:unionOf rdf:parseType="Collection">
      <owl:Class rdf:about="http://example.org/A"/>
      <owl:Class rdf:about="http://example.org/B"/>
    </owl:unionOf>
  </owl:Class>
  <owl:Class rdf:about="http://example.org/D">
    <rdfs:subClassOf>
      <owl:Restriction>
        <owl:onProperty rdf:resource="http://example.org/r"/>
        <owl:someValuesFrom rdf:resource="http://example.org/B"/>
      </owl:Restriction>
    </rdfs:subClassOf>
  </owl:Class>
  <owl:ObjectProperty rdf:about="http://example.org/p">
    <rdfs:domain rdf:resource="http://example.org/A"/>
    <rdf:type rdf:resource="http://www.w3.org/2002/07/owl#TransitiveProperty"/>
  </owl:ObjectProperty>
</rdf:RDF>
"""


def test_parse_owl_rdfxml_schema():
    onto, report = parse_ontology(DOC, RdfFormat.RDFXML)
    assert onto.iri == "http://example.org/onto"
    assert SubClassOf(C("A"), C("B")) in onto.tbox
    assert EquivalentClasses((C("C"), UnionOf((C("A"), C("B"))))) in onto.tbox
    assert SubClassOf(C("D"), SomeValuesFrom(pe("r"), C("B"))) in onto.tbox
    assert ObjectPropertyDomain(pe("p"), C("A")) in onto.rbox
    assert Characteristic(pe("p"), CharacteristicKind.TRANSITIVE) in onto.rbox
    assert report.skip_reasons["annotation"] == 1  # the rdfs:label


def test_relative_iri_resolution_with_base():
    doc = """<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xml:base="http://example.org/dir/">
  <rdf:Description rdf:about="A">
    <rdfs:subClassOf rdf:resource="B"/>
  </rdf:Description>
</rdf:RDF>
"""
    triples = list(parse_rdfxml(doc))
    assert triples[0].subject.value == "http://example.org/dir/A"
    assert triples[0].object.value == "http://example.org/dir/B"


def test_rdf_id_resolution():
    doc = """<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:ex="http://example.org/" xml:base="http://example.org/doc">
  <rdf:Description rdf:ID="thing"><ex:p rdf:resource="http://example.org/o"/></rdf:Description>
</rdf:RDF>
"""
    (t,) = parse_rdfxml(doc)
    assert t.subject.value == "http://example.org/doc#thing"


def test_malformed_xml_reports_position():
    with pytest.raises(RdfSyntaxError):
        list(parse_rdfxml("<rdf:RDF><broken"))


def test_parse_type_resource():
    doc = """<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:ex="http://example.org/">
  <rdf:Description rdf:about="http://example.org/x">
    <ex:p rdf:parseType="Resource"><ex:q rdf:resource="http://example.org/y"/></ex:p>
  </rdf:Description>
</rdf:RDF>
"""
    triples = list(parse_rdfxml(doc))
    assert len(triples) == 2
