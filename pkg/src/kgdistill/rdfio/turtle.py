"""Turtle parser (tokenizer + recursive descent) and deterministic serializer.

Covers the Turtle constructs that occur in published ontologies: prefix and
base directives (both @-style and SPARQL-style), predicate/object lists,
anonymous blank nodes, collections, the `a` keyword, quoted/long/numeric/
boolean literals with language tags and datatypes.
"""

from __future__ import annotations

import re
from typing import Iterator, Optional, Union
from urllib.parse import urljoin

from .ntriples import RdfSyntaxError, _unescape
from .terms import (
    IRI,
    BNode,
    Literal,
    TripleRecord,
    RDF_TYPE,
    RDF_FIRST,
    RDF_REST,
    RDF_NIL,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
    XSD_STRING,
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<iriref><[^<>"{}|^`\\\x00-\x20]*>)
  | (?P<string>\"\"\"(?:[^"\\]|\\.|"(?!""))*\"\"\"
      |'''(?:[^'\\]|\\.|'(?!''))*'''
      |"(?:[^"\\\n\r]|\\.)*"
      |'(?:[^'\\\n\r]|\\.)*')
  | (?P<langtag>@[a-zA-Z]+(?:-[a-zA-Z0-9]+)*)
  | (?P<double>[+-]?(?:[0-9]+\.[0-9]*|\.?[0-9]+)[eE][+-]?[0-9]+)
  | (?P<decimal>[+-]?[0-9]*\.[0-9]+)
  | (?P<integer>[+-]?[0-9]+)
  | (?P<bnode>_:[A-Za-z0-9_][A-Za-z0-9._\-]*)
  | (?P<hathat>\^\^)
  | (?P<punct>[.;,()\[\]])
  | (?P<pname>(?:[A-Za-z_][A-Za-z0-9_\-.]*)?:(?:[A-Za-z0-9_:%\-.~]|\\[-_~.!$&'()*+,;=/?\#@%])*)
  | (?P<keyword>[A-Za-z]+)
    """,
    re.VERBOSE,
)

_PN_LOCAL_ESC = re.compile(r"\\([-_~.!$&'()*+,;=/?#@%])")


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tok: Optional[tuple[str, str]] = None
        self.tok_pos = 0
        self.advance()

    def _line_col(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        last = self.text.rfind("\n", 0, pos)
        return line, pos - last

    def error(self, msg: str) -> RdfSyntaxError:
        line, col = self._line_col(self.tok_pos)
        return RdfSyntaxError(msg, line, col)

    def advance(self) -> None:
        while self.pos < len(self.text):
            m = _TOKEN_RE.match(self.text, self.pos)
            if not m:
                self.tok_pos = self.pos
                raise self.error(f"unexpected character {self.text[self.pos]!r}")
            kind = m.lastgroup
            value = m.group()
            self.pos = m.end()
            if kind in ("ws", "comment"):
                continue
            if kind in ("pname", "bnode"):
                # a local name cannot end with '.'; trailing dots terminate
                # the statement instead
                while value.endswith(".") and not value.endswith("\\."):
                    value = value[:-1]
                    self.pos -= 1
            self.tok_pos = m.start()
            self.tok = (kind, value)
            return
        self.tok_pos = self.pos
        self.tok = None


class TurtleParser:
    def __init__(self, text: str, base: Optional[str] = None):
        self.tz = _Tokenizer(text)
        self.base = base
        self.prefixes: dict[str, str] = {}
        self._gen = 0

    def _fresh_bnode(self) -> BNode:
        self._gen += 1
        return BNode(f"g{self._gen}")

    def parse(self) -> Iterator[TripleRecord]:
        while self.tz.tok is not None:
            kind, val = self.tz.tok
            if kind == "keyword" and val.lower() in ("prefix", "base"):
                yield from self._directive(sparql_style=True)
            elif kind == "langtag" and val.lower() in ("@prefix", "@base"):
                yield from self._directive(sparql_style=False)
            else:
                yield from self._triples()
                self._expect_punct(".")

    def _directive(self, sparql_style: bool) -> Iterator[TripleRecord]:
        kind, val = self.tz.tok
        name = val.lstrip("@").lower()
        self.tz.advance()
        if name == "prefix":
            pkind, pval = self._current("prefixed name expected after @prefix")
            if pkind != "pname" or not pval.endswith(":"):
                raise self.tz.error("prefix declaration must end with ':'")
            prefix = pval[:-1]
            self.tz.advance()
            ikind, ival = self._current("IRI expected in prefix declaration")
            if ikind != "iriref":
                raise self.tz.error("IRI expected in prefix declaration")
            self.prefixes[prefix] = self._resolve(_unescape(ival[1:-1]))
            self.tz.advance()
        else:
            ikind, ival = self._current("IRI expected in base declaration")
            if ikind != "iriref":
                raise self.tz.error("IRI expected in base declaration")
            self.base = self._resolve(_unescape(ival[1:-1]))
            self.tz.advance()
        if not sparql_style:
            self._expect_punct(".")
        return iter(())

    def _current(self, msg: str) -> tuple[str, str]:
        if self.tz.tok is None:
            raise self.tz.error(f"unexpected end of document: {msg}")
        return self.tz.tok

    def _expect_punct(self, ch: str) -> None:
        kind, val = self._current(f"{ch!r} expected")
        if kind != "punct" or val != ch:
            raise self.tz.error(f"{ch!r} expected, found {val!r}")
        self.tz.advance()

    def _resolve(self, iri: str) -> str:
        if self.base and not re.match(r"^[A-Za-z][A-Za-z0-9+.\-]*:", iri):
            return urljoin(self.base, iri)
        return iri

    def _pname_to_iri(self, pname: str) -> str:
        prefix, _, local = pname.partition(":")
        if prefix not in self.prefixes:
            raise self.tz.error(f"unresolvable prefix {prefix + ':'!r}")
        local = _PN_LOCAL_ESC.sub(r"\1", local)
        return self.prefixes[prefix] + local

    # --- grammar productions -------------------------------------------------

    def _triples(self) -> Iterator[TripleRecord]:
        kind, val = self._current("subject expected")
        if kind == "punct" and val == "[":
            subject, triples = self._bnode_property_list()
            yield from triples
            kind2 = self.tz.tok
            if kind2 is not None and not (kind2[0] == "punct" and kind2[1] == "."):
                yield from self._predicate_object_list(subject)
        else:
            subject, triples = self._subject()
            yield from triples
            yield from self._predicate_object_list(subject)

    def _subject(self) -> tuple[Union[IRI, BNode], list[TripleRecord]]:
        kind, val = self._current("subject expected")
        if kind == "iriref":
            self.tz.advance()
            return IRI(self._resolve(_unescape(val[1:-1]))), []
        if kind == "pname":
            self.tz.advance()
            return IRI(self._pname_to_iri(val)), []
        if kind == "bnode":
            self.tz.advance()
            return BNode("d" + val[2:]), []
        if kind == "punct" and val == "(":
            return self._collection()
        raise self.tz.error(f"subject expected, found {val!r}")

    def _predicate_object_list(self, subject: Union[IRI, BNode]) -> Iterator[TripleRecord]:
        while True:
            predicate = self._verb()
            yield from self._object_list(subject, predicate)
            kind = self.tz.tok
            if kind is not None and kind[0] == "punct" and kind[1] == ";":
                self.tz.advance()
                nxt = self.tz.tok
                if nxt is None or (nxt[0] == "punct" and nxt[1] in (".", "]", ";")):
                    while self.tz.tok is not None and self.tz.tok == ("punct", ";"):
                        self.tz.advance()
                    return
                continue
            return

    def _verb(self) -> IRI:
        kind, val = self._current("predicate expected")
        if kind == "keyword" and val == "a":
            self.tz.advance()
            return IRI(RDF_TYPE)
        if kind == "iriref":
            self.tz.advance()
            return IRI(self._resolve(_unescape(val[1:-1])))
        if kind == "pname":
            self.tz.advance()
            return IRI(self._pname_to_iri(val))
        raise self.tz.error(f"predicate expected, found {val!r}")

    def _object_list(self, subject: Union[IRI, BNode], predicate: IRI) -> Iterator[TripleRecord]:
        while True:
            obj, triples = self._object()
            yield TripleRecord(subject, predicate, obj)
            yield from triples
            kind = self.tz.tok
            if kind is not None and kind[0] == "punct" and kind[1] == ",":
                self.tz.advance()
                continue
            return

    def _object(self) -> tuple[Union[IRI, BNode, Literal], list[TripleRecord]]:
        kind, val = self._current("object expected")
        if kind == "iriref":
            self.tz.advance()
            return IRI(self._resolve(_unescape(val[1:-1]))), []
        if kind == "pname":
            self.tz.advance()
            return IRI(self._pname_to_iri(val)), []
        if kind == "bnode":
            self.tz.advance()
            return BNode("d" + val[2:]), []
        if kind == "punct" and val == "(":
            return self._collection()
        if kind == "punct" and val == "[":
            return self._bnode_property_list()
        if kind == "string":
            return self._literal(val), []
        if kind == "integer":
            self.tz.advance()
            return Literal(val, datatype=XSD_INTEGER), []
        if kind == "decimal":
            self.tz.advance()
            return Literal(val, datatype=XSD_DECIMAL), []
        if kind == "double":
            self.tz.advance()
            return Literal(val, datatype=XSD_DOUBLE), []
        if kind == "keyword" and val in ("true", "false"):
            self.tz.advance()
            return Literal(val, datatype=XSD_BOOLEAN), []
        raise self.tz.error(f"object expected, found {val!r}")

    def _literal(self, raw: str) -> Literal:
        self.tz.advance()
        if raw.startswith(('"""', "'''")):
            body = raw[3:-3]
        else:
            body = raw[1:-1]
        value = _unescape(body)
        kind = self.tz.tok
        if kind is not None and kind[0] == "langtag":
            self.tz.advance()
            return Literal(value, lang=kind[1][1:])
        if kind is not None and kind[0] == "hathat":
            self.tz.advance()
            dkind, dval = self._current("datatype IRI expected after ^^")
            if dkind == "iriref":
                dt = self._resolve(_unescape(dval[1:-1]))
            elif dkind == "pname":
                dt = self._pname_to_iri(dval)
            else:
                raise self.tz.error("datatype IRI expected after ^^")
            self.tz.advance()
            return Literal(value, datatype=dt)
        return Literal(value, datatype=XSD_STRING)

    def _bnode_property_list(self) -> tuple[BNode, list[TripleRecord]]:
        self._expect_punct("[")
        node = self._fresh_bnode()
        triples: list[TripleRecord] = []
        kind = self._current("']' or predicate expected")
        if not (kind[0] == "punct" and kind[1] == "]"):
            triples = list(self._predicate_object_list(node))
        self._expect_punct("]")
        return node, triples

    def _collection(self) -> tuple[Union[IRI, BNode], list[TripleRecord]]:
        self._expect_punct("(")
        items: list[tuple[Union[IRI, BNode, Literal], list[TripleRecord]]] = []
        while True:
            kind, val = self._current("')' or collection item expected")
            if kind == "punct" and val == ")":
                self.tz.advance()
                break
            items.append(self._object())
        if not items:
            return IRI(RDF_NIL), []
        triples: list[TripleRecord] = []
        nodes = [self._fresh_bnode() for _ in items]
        for i, (obj, sub_triples) in enumerate(items):
            triples.append(TripleRecord(nodes[i], IRI(RDF_FIRST), obj))
            triples.extend(sub_triples)
            rest: Union[IRI, BNode] = nodes[i + 1] if i + 1 < len(items) else IRI(RDF_NIL)
            triples.append(TripleRecord(nodes[i], IRI(RDF_REST), rest))
        return nodes[0], triples


def parse_turtle(text: str, base: Optional[str] = None) -> Iterator[TripleRecord]:
    return TurtleParser(text, base=base).parse()


_STANDARD_PREFIXES = (
    ("rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"),
    ("rdfs", "http://www.w3.org/2000/01/rdf-schema#"),
    ("owl", "http://www.w3.org/2002/07/owl#"),
    ("xsd", "http://www.w3.org/2001/XMLSchema#"),
)

_LOCAL_OK = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_\-]*$")


def serialize_turtle(triples: list[TripleRecord]) -> str:
    """One statement per line, standard prefixes only, caller-defined order.

    Line-based output keeps the serialization deterministic: no grouping
    heuristics, no content-dependent prefix table.
    """
    lines = [f"@prefix {p}: <{ns}> ." for p, ns in _STANDARD_PREFIXES]
    lines.append("")
    for t in triples:
        s = _term_ttl(t.subject)
        p = _term_ttl(t.predicate)
        if isinstance(t.predicate, IRI) and t.predicate.value == RDF_TYPE:
            p = "a"
        o = _term_ttl(t.object)
        lines.append(f"{s} {p} {o} .")
    return "\n".join(lines) + "\n"


def _term_ttl(term: Union[IRI, BNode, Literal]) -> str:
    if isinstance(term, IRI):
        for p, ns in _STANDARD_PREFIXES:
            if term.value.startswith(ns):
                local = term.value[len(ns):]
                if _LOCAL_OK.match(local):
                    return f"{p}:{local}"
        return term.n3()
    return term.n3()
