"""Integer index-table export: the sparse-loadable face of a dataset.

Six header-less TSV integer tables plus a manifest with cardinalities, row
counts, and per-file checksums. Relation rows are split across
train/valid/test; class assertions ship whole; union-shaped domains and
ranges flatten to one row per named disjunct; anything more complex stays
in the symbolic serializations only.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Union

from ..model import (
    Axiom,
    ClassAssertion,
    Named,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    SubClassOf,
    SubObjectPropertyOf,
    UnionOf,
)
from .idmaps import IdMaps
from .splitting import Split

Row = tuple[int, ...]


class UnmappedIriError(KeyError):
    pass


@dataclass
class CooExport:
    relations: dict[str, list[Row]]  # train/valid/test -> (subject, property, object)
    types: list[Row]  # (individual, class)
    taxonomy: list[Row]  # (class, superclass)
    domain: list[Row]  # (property, class)
    range: list[Row]  # (property, class)
    subproperty: list[Row]  # (sub, super)
    manifest: dict = field(default_factory=dict)


def _lookup(mapping: dict[str, int], iri: str, category: str) -> int:
    try:
        return mapping[iri]
    except KeyError:
        raise UnmappedIriError(f"unmapped {category} IRI: {iri}") from None


def _pair_rows_for(expr, prop_id: int, class_ids: dict[str, int]) -> list[Row]:
    if isinstance(expr, Named):
        return [(prop_id, _lookup(class_ids, expr.entity.iri, "class"))]
    if isinstance(expr, UnionOf):
        rows = []
        for op in expr.operands:
            if isinstance(op, Named):
                rows.append((prop_id, _lookup(class_ids, op.entity.iri, "class")))
        return rows
    return []


def export_coo(
    split: Split,
    class_assertions: Iterable[ClassAssertion],
    schema_axioms: Iterable[Axiom],
    maps: IdMaps,
) -> CooExport:
    iid, pid, cid = maps.individual_ids, maps.property_ids, maps.class_ids

    relations: dict[str, list[Row]] = {}
    for part, assertions in split.parts().items():
        rows = [
            (
                _lookup(iid, a.subject.iri, "individual"),
                _lookup(pid, a.property.iri, "property"),
                _lookup(iid, a.object.iri, "individual"),
            )
            for a in assertions
        ]
        relations[part] = sorted(rows)

    types = sorted(
        {
            (
                _lookup(iid, ca.individual.iri, "individual"),
                _lookup(cid, ca.expr.entity.iri, "class"),
            )
            for ca in class_assertions
            if isinstance(ca.expr, Named)
        }
    )

    taxonomy: set[Row] = set()
    domain: set[Row] = set()
    rng: set[Row] = set()
    subprop: set[Row] = set()
    for ax in schema_axioms:
        if isinstance(ax, SubClassOf) and isinstance(ax.sub, Named) and isinstance(ax.sup, Named):
            if ax.sub != ax.sup:
                taxonomy.add(
                    (
                        _lookup(cid, ax.sub.entity.iri, "class"),
                        _lookup(cid, ax.sup.entity.iri, "class"),
                    )
                )
        elif isinstance(ax, ObjectPropertyDomain):
            domain.update(_pair_rows_for(ax.expr, _lookup(pid, ax.property.iri, "property"), cid))
        elif isinstance(ax, ObjectPropertyRange):
            rng.update(_pair_rows_for(ax.expr, _lookup(pid, ax.property.iri, "property"), cid))
        elif isinstance(ax, SubObjectPropertyOf):
            subprop.add(
                (_lookup(pid, ax.sub.iri, "property"), _lookup(pid, ax.sup.iri, "property"))
            )

    export = CooExport(
        relations=relations,
        types=types,
        taxonomy=sorted(taxonomy),
        domain=sorted(domain),
        range=sorted(rng),
        subproperty=sorted(subprop),
    )
    export.manifest = {
        "index_base": 1 if maps.one_based else 0,
        "counts": maps.counts(),
        "rows": {
            "train": len(relations["train"]),
            "valid": len(relations["valid"]),
            "test": len(relations["test"]),
            "types": len(export.types),
            "taxonomy": len(export.taxonomy),
            "domain": len(export.domain),
            "range": len(export.range),
            "subproperty": len(export.subproperty),
        },
        "split": {
            "seed": split.seed,
            "ratios": list(split.ratios),
            "moved_for_coverage": split.moved_for_coverage,
            "moved_for_leakage": split.moved_for_leakage,
        },
    }
    return export


TABLE_FILES = {
    "train": "train.tsv",
    "valid": "valid.tsv",
    "test": "test.tsv",
    "types": "types.tsv",
    "taxonomy": "taxonomy.tsv",
    "domain": "domain.tsv",
    "range": "range.tsv",
    "subproperty": "subprop.tsv",
}


def _write_rows(path: Path, rows: list[Row]) -> None:
    path.write_text(
        "".join("\t".join(str(v) for v in row) + "\n" for row in rows), encoding="utf-8"
    )


def sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_coo(export: CooExport, split: Split, directory: Union[str, Path]) -> dict:
    """Write index tables, IRI-form split files, and manifest.json."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)

    for part in ("train", "valid", "test"):
        _write_rows(directory / TABLE_FILES[part], export.relations[part])
    _write_rows(directory / TABLE_FILES["types"], export.types)
    _write_rows(directory / TABLE_FILES["taxonomy"], export.taxonomy)
    _write_rows(directory / TABLE_FILES["domain"], export.domain)
    _write_rows(directory / TABLE_FILES["range"], export.range)
    _write_rows(directory / TABLE_FILES["subproperty"], export.subproperty)

    for part, assertions in split.parts().items():
        lines = sorted(
            f"{a.subject.iri}\t{a.property.iri}\t{a.object.iri}\n" for a in assertions
        )
        (directory / f"{part}.txt").write_text("".join(lines), encoding="utf-8")

    files = sorted(
        list(TABLE_FILES.values()) + ["train.txt", "valid.txt", "test.txt"]
    )
    manifest = dict(export.manifest)
    manifest["files"] = files
    manifest["checksums"] = {f: sha256_file(directory / f) for f in files}
    (directory / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return manifest
