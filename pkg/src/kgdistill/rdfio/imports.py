"""Import-closure merging with a local catalog resolver."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Callable, Optional, Union

from ..model import Ontology
from .documents import RdfFormat, detect_format, parse_ontology, parse_ontology_file

logger = logging.getLogger(__name__)

Resolver = Callable[[str], Ontology]


class UnresolvableImportError(ValueError):
    pass


def catalog_resolver(catalog_path: Union[str, Path], infer_declarations: bool = False) -> Resolver:
    """Resolver backed by a two-column TSV catalog: ontology IRI <TAB> file path.

    Relative paths are resolved against the catalog file's directory.
    """
    catalog_path = Path(catalog_path)
    mapping: dict[str, Path] = {}
    for lineno, line in enumerate(catalog_path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"{catalog_path}:{lineno}: expected 'IRI<TAB>path'")
        iri, rel = parts
        mapping[iri] = (catalog_path.parent / rel).resolve()

    def resolve(iri: str) -> Ontology:
        if iri not in mapping:
            raise UnresolvableImportError(f"import {iri} not in catalog {catalog_path}")
        onto, _ = parse_ontology_file(mapping[iri], infer_declarations=infer_declarations)
        return onto

    return resolve


def http_resolver(timeout: float = 30.0, infer_declarations: bool = False) -> Resolver:
    """Fetch imports over HTTP. Off by default; enable via --allow-http."""

    def resolve(iri: str) -> Ontology:
        import requests

        resp = requests.get(
            iri,
            headers={"Accept": "text/turtle, application/rdf+xml, application/n-triples"},
            timeout=timeout,
        )
        resp.raise_for_status()
        ctype = resp.headers.get("content-type", "").split(";")[0].strip()
        fmt = {
            "text/turtle": RdfFormat.TURTLE,
            "application/x-turtle": RdfFormat.TURTLE,
            "application/rdf+xml": RdfFormat.RDFXML,
            "application/n-triples": RdfFormat.NTRIPLES,
            "text/plain": RdfFormat.NTRIPLES,
        }.get(ctype)
        if fmt is None:
            try:
                fmt = detect_format(iri)
            except ValueError:
                raise UnresolvableImportError(f"cannot determine format of {iri} ({ctype})")
        onto, _ = parse_ontology(resp.content, fmt, base=iri, infer_declarations=infer_declarations)
        return onto

    return resolve


def merge_import_closure(
    root: Ontology,
    resolver: Optional[Resolver] = None,
    on_missing: str = "fail",
) -> Ontology:
    """Union of the root's axioms with every transitively imported ontology.

    Cycle-safe: each import IRI is fetched at most once. ``on_missing`` is
    "fail" (raise) or "warn" (log and skip the missing import).
    """
    if on_missing not in ("fail", "warn"):
        raise ValueError("on_missing must be 'fail' or 'warn'")
    seen: set[str] = set()
    if root.iri:
        seen.add(root.iri)
    pending = list(root.imports)
    axioms = set(root.axioms())
    while pending:
        iri = pending.pop(0)
        if iri in seen:
            continue
        seen.add(iri)
        if resolver is None:
            if on_missing == "fail":
                raise UnresolvableImportError(f"no resolver configured for import {iri}")
            logger.warning("skipping import %s: no resolver configured", iri)
            continue
        try:
            imported = resolver(iri)
        except UnresolvableImportError:
            if on_missing == "fail":
                raise
            logger.warning("skipping unresolvable import %s", iri)
            continue
        axioms.update(imported.axioms())
        pending.extend(i for i in imported.imports if i not in seen)
    return Ontology.from_axioms(axioms, imports=(), iri=root.iri)
