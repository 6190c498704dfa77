"""N-Triples parsing and serialization (line-based, W3C grammar)."""

from __future__ import annotations

import re
from typing import Iterable, Iterator, TextIO, Union

from .terms import IRI, BNode, Literal, TripleRecord, XSD_STRING


class RdfSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f"line {line}, col {column}: {message}")
        self.line = line
        self.column = column


_IRIREF = r"<([^\x00-\x20<>\"{}|^`\\]*)>"
_BNODE = r"_:([A-Za-z0-9][A-Za-z0-9._\-]*)"
_LITERAL = r'"((?:[^"\\\n\r]|\\.)*)"(?:\^\^<([^\x00-\x20<>"{}|^`\\]*)>|@([a-zA-Z]+(?:-[a-zA-Z0-9]+)*))?'

_TRIPLE_RE = re.compile(
    rf"^[ \t]*(?:{_IRIREF}|{_BNODE})"
    rf"[ \t]+{_IRIREF}"
    rf"[ \t]+(?:{_IRIREF}|{_BNODE}|{_LITERAL})"
    rf"[ \t]*\.[ \t]*(?:#.*)?$"
)

_UNESCAPE_RE = re.compile(r"\\(u[0-9A-Fa-f]{4}|U[0-9A-Fa-f]{8}|[tbnrf\"'\\])")

_ESCAPE_MAP = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}


def _unescape(s: str) -> str:
    def repl(m: re.Match) -> str:
        code = m.group(1)
        if code[0] == "u":
            return chr(int(code[1:], 16))
        if code[0] == "U":
            return chr(int(code[1:], 16))
        return _ESCAPE_MAP[code]

    return _UNESCAPE_RE.sub(repl, s)


def parse_ntriples(lines: Union[str, TextIO, Iterable[str]]) -> Iterator[TripleRecord]:
    """Yield triples in document order; raises RdfSyntaxError on bad lines."""
    if isinstance(lines, str):
        lines = lines.split("\n")
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _TRIPLE_RE.match(raw.rstrip("\n\r"))
        if not m:
            raise RdfSyntaxError(f"malformed N-Triples statement: {line[:80]!r}", lineno)
        s_iri, s_bnode, pred, o_iri, o_bnode, o_lit, o_dt, o_lang = m.groups()
        subject = IRI(_unescape(s_iri)) if s_iri is not None else BNode(s_bnode)
        predicate = IRI(_unescape(pred))
        if o_iri is not None:
            obj: Union[IRI, BNode, Literal] = IRI(_unescape(o_iri))
        elif o_bnode is not None:
            obj = BNode(o_bnode)
        else:
            obj = Literal(
                _unescape(o_lit),
                datatype=_unescape(o_dt) if o_dt else (None if o_lang else XSD_STRING),
                lang=o_lang,
            )
        yield TripleRecord(subject, predicate, obj)


def serialize_ntriples(triples: Iterable[TripleRecord]) -> str:
    """Canonical N-Triples: one statement per line, given order preserved."""
    return "".join(t.n3() + "\n" for t in triples)
