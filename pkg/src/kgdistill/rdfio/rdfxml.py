"""Read-only RDF/XML parser for schema documents.

Supports the node/property element core of the syntax: typed nodes,
rdf:about/ID/nodeID/resource, property attributes, xml:base and xml:lang,
rdf:parseType Resource and Collection, rdf:datatype. That covers how
published OWL ontologies are distributed; exotic constructs raise.
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from typing import Iterator, Optional, Union
from urllib.parse import urljoin

from .ntriples import RdfSyntaxError
from .terms import (
    IRI,
    BNode,
    Literal,
    TripleRecord,
    RDF_NS,
    RDF_TYPE,
    RDF_FIRST,
    RDF_REST,
    RDF_NIL,
    XSD_STRING,
)

_XML_NS = "http://www.w3.org/XML/1998/namespace"
_RDF_RDF = f"{{{RDF_NS}}}RDF"
_RDF_DESCRIPTION = f"{{{RDF_NS}}}Description"
_ATTR_ABOUT = f"{{{RDF_NS}}}about"
_ATTR_ID = f"{{{RDF_NS}}}ID"
_ATTR_NODEID = f"{{{RDF_NS}}}nodeID"
_ATTR_RESOURCE = f"{{{RDF_NS}}}resource"
_ATTR_DATATYPE = f"{{{RDF_NS}}}datatype"
_ATTR_PARSETYPE = f"{{{RDF_NS}}}parseType"
_ATTR_XML_BASE = f"{{{_XML_NS}}}base"
_ATTR_XML_LANG = f"{{{_XML_NS}}}lang"

_ABSOLUTE_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")


def _tag_iri(tag: str) -> str:
    if not tag.startswith("{"):
        raise RdfSyntaxError(f"unqualified XML name {tag!r}", 0)
    ns, local = tag[1:].split("}", 1)
    return ns + local


class _RdfXmlReader:
    def __init__(self, base: Optional[str]):
        self.base = base
        self._gen = 0
        self.triples: list[TripleRecord] = []

    def _fresh(self) -> BNode:
        self._gen += 1
        return BNode(f"g{self._gen}")

    def _resolve(self, iri: str, base: Optional[str]) -> str:
        if _ABSOLUTE_RE.match(iri):
            return iri
        if base is None:
            raise RdfSyntaxError(f"relative IRI {iri!r} with no xml:base", 0)
        return urljoin(base, iri)

    def read(self, root: ET.Element) -> list[TripleRecord]:
        base = root.get(_ATTR_XML_BASE, self.base)
        if root.tag == _RDF_RDF:
            for child in root:
                self._node_element(child, base)
        else:
            self._node_element(root, base)
        return self.triples

    def _subject_of(self, elem: ET.Element, base: Optional[str]) -> Union[IRI, BNode]:
        about = elem.get(_ATTR_ABOUT)
        rid = elem.get(_ATTR_ID)
        node_id = elem.get(_ATTR_NODEID)
        if about is not None:
            return IRI(self._resolve(about, base))
        if rid is not None:
            return IRI(self._resolve(f"#{rid}", base))
        if node_id is not None:
            return BNode("d" + node_id)
        return self._fresh()

    def _node_element(self, elem: ET.Element, base: Optional[str]) -> Union[IRI, BNode]:
        base = elem.get(_ATTR_XML_BASE, base)
        subject = self._subject_of(elem, base)
        tag = _tag_iri(elem.tag)
        if tag != _tag_iri(_RDF_DESCRIPTION):
            self.triples.append(TripleRecord(subject, IRI(RDF_TYPE), IRI(tag)))
        for attr, value in elem.attrib.items():
            if attr.startswith(f"{{{RDF_NS}}}") or attr.startswith(f"{{{_XML_NS}}}"):
                continue
            self.triples.append(
                TripleRecord(subject, IRI(_tag_iri(attr)), Literal(value, datatype=XSD_STRING))
            )
        for prop in elem:
            self._property_element(subject, prop, base)
        return subject

    def _property_element(
        self, subject: Union[IRI, BNode], prop: ET.Element, base: Optional[str]
    ) -> None:
        base = prop.get(_ATTR_XML_BASE, base)
        predicate = IRI(_tag_iri(prop.tag))
        parse_type = prop.get(_ATTR_PARSETYPE)
        resource = prop.get(_ATTR_RESOURCE)
        node_id = prop.get(_ATTR_NODEID)
        datatype = prop.get(_ATTR_DATATYPE)
        lang = prop.get(_ATTR_XML_LANG)
        children = list(prop)

        if parse_type == "Collection":
            members = [self._node_element(c, base) for c in children]
            head: Union[IRI, BNode] = IRI(RDF_NIL)
            nodes = [self._fresh() for _ in members]
            for i, m in enumerate(members):
                rest: Union[IRI, BNode] = nodes[i + 1] if i + 1 < len(members) else IRI(RDF_NIL)
                self.triples.append(TripleRecord(nodes[i], IRI(RDF_FIRST), m))
                self.triples.append(TripleRecord(nodes[i], IRI(RDF_REST), rest))
            if nodes:
                head = nodes[0]
            self.triples.append(TripleRecord(subject, predicate, head))
            return
        if parse_type == "Resource":
            node = self._fresh()
            self.triples.append(TripleRecord(subject, predicate, node))
            for inner in children:
                self._property_element(node, inner, base)
            return
        if parse_type == "Literal":
            text = "".join(ET.tostring(c, encoding="unicode") for c in children)
            text = (prop.text or "") + text
            self.triples.append(
                TripleRecord(subject, predicate, Literal(text, datatype=RDF_NS + "XMLLiteral"))
            )
            return
        if resource is not None:
            self.triples.append(TripleRecord(subject, predicate, IRI(self._resolve(resource, base))))
            return
        if node_id is not None:
            self.triples.append(TripleRecord(subject, predicate, BNode("d" + node_id)))
            return
        if children:
            if len(children) != 1:
                raise RdfSyntaxError(
                    f"property element {predicate.value} with {len(children)} child nodes", 0
                )
            obj = self._node_element(children[0], base)
            self.triples.append(TripleRecord(subject, predicate, obj))
            return
        text = prop.text or ""
        self.triples.append(
            TripleRecord(
                subject,
                predicate,
                Literal(text, datatype=datatype or (None if lang else XSD_STRING), lang=lang),
            )
        )


def parse_rdfxml(text: Union[str, bytes], base: Optional[str] = None) -> Iterator[TripleRecord]:
    try:
        root = ET.fromstring(text)
    except ET.ParseError as e:
        line, col = e.position
        raise RdfSyntaxError(f"XML parse error: {e.msg.split(':')[0]}", line, col) from e
    yield from _RdfXmlReader(base).read(root)
