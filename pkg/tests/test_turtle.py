import pytest

from kgdistill.rdfio import IRI, Literal, RdfSyntaxError, TripleRecord, parse_turtle
from kgdistill.rdfio.terms import BNode, RDF_FIRST, RDF_NIL, RDF_REST, RDF_TYPE, XSD_INTEGER


def test_prefix_expansion():
    doc = "@prefix ex: <http://e/> .\nex:a ex:p ex:b ."
    (t,) = parse_turtle(doc)
    assert t == TripleRecord(IRI("http://e/a"), IRI("http://e/p"), IRI("http://e/b"))


def test_sparql_style_prefix():
    doc = "PREFIX ex: <http://e/>\nex:a ex:p ex:b ."
    assert len(list(parse_turtle(doc))) == 1


def test_base_resolution():
    doc = "@base <http://e/dir/> .\n<a> <p> <../b> ."
    (t,) = parse_turtle(doc)
    assert t.subject == IRI("http://e/dir/a")
    assert t.object == IRI("http://e/b")


def test_a_keyword_and_semicolon_comma():
    doc = """@prefix ex: <http://e/> .
ex:x a ex:C ;
     ex:p ex:y , ex:z .
"""
    triples = list(parse_turtle(doc))
    assert triples[0].predicate == IRI(RDF_TYPE)
    assert len(triples) == 3
    assert {t.object for t in triples[1:]} == {IRI("http://e/y"), IRI("http://e/z")}


def test_unresolvable_prefix_errors():
    with pytest.raises(RdfSyntaxError) as err:
        list(parse_turtle("nope:a <http://e/p> nope:b ."))
    assert "unresolvable prefix" in str(err.value)


def test_error_carries_line_and_column():
    doc = "@prefix ex: <http://e/> .\nex:a ex:p ; .\n"
    with pytest.raises(RdfSyntaxError) as err:
        list(parse_turtle(doc))
    assert err.value.line == 2


def test_collection_becomes_rdf_list():
    doc = "@prefix ex: <http://e/> .\nex:c ex:list (ex:a ex:b) ."
    triples = list(parse_turtle(doc))
    firsts = [t for t in triples if t.predicate == IRI(RDF_FIRST)]
    rests = [t for t in triples if t.predicate == IRI(RDF_REST)]
    assert len(firsts) == 2 and len(rests) == 2
    assert any(t.object == IRI(RDF_NIL) for t in rests)


def test_anonymous_bnode_property_list():
    doc = "@prefix ex: <http://e/> .\nex:x ex:p [ ex:q ex:y ] ."
    triples = list(parse_turtle(doc))
    assert len(triples) == 2
    inner = [t for t in triples if t.predicate == IRI("http://e/q")]
    assert isinstance(inner[0].subject, BNode)


def test_literal_forms():
    doc = """@prefix ex: <http://e/> .
ex:x ex:p "s" , 'q' , \"\"\"long
line\"\"\" , 5 , 2.5 , 1e3 , true , "typed"^^ex:dt , "it"@it .
"""
    objs = [t.object for t in parse_turtle(doc)]
    assert Literal("5", datatype=XSD_INTEGER) in objs
    assert any(isinstance(o, Literal) and o.lang == "it" for o in objs)
    assert any(isinstance(o, Literal) and "long\nline" == o.lexical for o in objs)
    assert any(isinstance(o, Literal) and o.datatype == "http://e/dt" for o in objs)


def test_document_order_preserved():
    doc = "@prefix ex: <http://e/> .\nex:a ex:p ex:b .\nex:c ex:q ex:d ."
    subs = [t.subject.value for t in parse_turtle(doc)]
    assert subs == ["http://e/a", "http://e/c"]


def test_labeled_bnodes_keep_identity():
    doc = "@prefix ex: <http://e/> .\n_:n ex:p ex:a .\n_:n ex:p ex:b ."
    triples = list(parse_turtle(doc))
    assert triples[0].subject == triples[1].subject


def test_statement_dot_not_swallowed_by_local_name():
    doc = "@prefix ex: <http://e/> .\nex:a ex:p ex:b.\nex:c ex:p ex:d .\n"
    triples = list(parse_turtle(doc))
    assert [t.object.value for t in triples] == ["http://e/b", "http://e/d"]


def test_dots_inside_local_names_kept():
    doc = "@prefix ex: <http://e/> .\nex:a.b ex:p ex:c.d.e .\n"
    (t,) = parse_turtle(doc)
    assert t.subject.value == "http://e/a.b"
    assert t.object.value == "http://e/c.d.e"


def test_nested_collections():
    doc = "@prefix ex: <http://e/> .\nex:c ex:list ((ex:a) ex:b) .\n"
    triples = list(parse_turtle(doc))
    firsts = [t for t in triples if t.predicate == IRI(RDF_FIRST)]
    assert len(firsts) == 3


def test_numeric_then_statement_dot():
    doc = "@prefix ex: <http://e/> .\nex:a ex:p 5.\n"
    (t,) = parse_turtle(doc)
    assert t.object.lexical == "5"
