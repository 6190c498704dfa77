import pytest
from hypothesis import given, strategies as st

from kgdistill.rdfio import IRI, Literal, RdfSyntaxError, TripleRecord, parse_ntriples, serialize_ntriples
from kgdistill.rdfio.terms import BNode, XSD_STRING


def test_single_triple():
    triples = list(parse_ntriples("<http://e/a> <http://e/p> <http://e/b> ."))
    assert triples == [TripleRecord(IRI("http://e/a"), IRI("http://e/p"), IRI("http://e/b"))]


def test_malformed_line_reports_line_number():
    doc = "<http://e/a> <http://e/p> <http://e/b> .\n<http://e/a> <http://e/p>\n"
    with pytest.raises(RdfSyntaxError) as err:
        list(parse_ntriples(doc))
    assert err.value.line == 2


def test_comments_and_blank_lines():
    doc = "# header\n\n<http://e/a> <http://e/p> <http://e/b> . # trailing\n"
    assert len(list(parse_ntriples(doc))) == 1


def test_literals_with_datatype_and_lang():
    doc = (
        '<http://e/a> <http://e/p> "plain" .\n'
        '<http://e/a> <http://e/p> "5"^^<http://www.w3.org/2001/XMLSchema#integer> .\n'
        '<http://e/a> <http://e/p> "ciao"@it .\n'
    )
    lits = [t.object for t in parse_ntriples(doc)]
    assert lits[0] == Literal("plain", datatype=XSD_STRING)
    assert lits[1].datatype.endswith("integer")
    assert lits[2].lang == "it"


def test_escapes_roundtrip():
    lit = Literal('say "hi"\n\tdone\\', datatype=XSD_STRING)
    t = TripleRecord(IRI("http://e/a"), IRI("http://e/p"), lit)
    out = serialize_ntriples([t])
    back = list(parse_ntriples(out))
    assert back == [t]


def test_unicode_escape_decoding():
    doc = '<http://e/a> <http://e/p> "caf\\u00E9" .\n'
    (t,) = parse_ntriples(doc)
    assert t.object.lexical == "café"


def test_bnodes():
    doc = "_:x <http://e/p> _:y .\n"
    (t,) = parse_ntriples(doc)
    assert t.subject == BNode("x") and t.object == BNode("y")


@given(
    st.text(
        alphabet=st.characters(blacklist_categories=("Cs",)),
        max_size=60,
    )
)
def test_any_literal_roundtrips(s):
    t = TripleRecord(IRI("http://e/a"), IRI("http://e/p"), Literal(s, datatype=XSD_STRING))
    assert list(parse_ntriples(serialize_ntriples([t]))) == [t]
