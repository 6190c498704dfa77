"""Dense integer identifier maps for individuals, properties, and classes."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union


@dataclass(frozen=True)
class IdMaps:
    """Per-category bijections IRI <-> dense id in lexicographic IRI order.

    Ids are 0-based by default because the exported index files address
    0-based tensor dimensions; one_based=True shifts every id up by one.
    """

    individual_ids: dict[str, int]
    property_ids: dict[str, int]
    class_ids: dict[str, int]
    one_based: bool = False

    def counts(self) -> dict[str, int]:
        return {
            "individuals": len(self.individual_ids),
            "properties": len(self.property_ids),
            "classes": len(self.class_ids),
        }


def _dense(iris: Iterable[str], one_based: bool) -> dict[str, int]:
    base = 1 if one_based else 0
    return {iri: i + base for i, iri in enumerate(sorted(set(iris)))}


def build_id_maps(
    individuals: Iterable[str],
    properties: Iterable[str],
    classes: Iterable[str],
    one_based: bool = False,
) -> IdMaps:
    return IdMaps(
        individual_ids=_dense(individuals, one_based),
        property_ids=_dense(properties, one_based),
        class_ids=_dense(classes, one_based),
        one_based=one_based,
    )


ID_MAP_FILES = {
    "individual_ids": "entity_ids.tsv",
    "property_ids": "relation_ids.tsv",
    "class_ids": "class_ids.tsv",
}


def write_id_maps(maps: IdMaps, directory: Union[str, Path]) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for attr, filename in ID_MAP_FILES.items():
        mapping: dict[str, int] = getattr(maps, attr)
        lines = [f"{i}\t{iri}" for iri, i in sorted(mapping.items(), key=lambda kv: kv[1])]
        path = directory / filename
        path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
        written.append(path)
    return written


def read_id_maps(directory: Union[str, Path]) -> IdMaps:
    directory = Path(directory)
    loaded: dict[str, dict[str, int]] = {}
    for attr, filename in ID_MAP_FILES.items():
        mapping: dict[str, int] = {}
        text = (directory / filename).read_text(encoding="utf-8")
        for line in text.splitlines():
            if not line:
                continue
            i, iri = line.split("\t", 1)
            mapping[iri] = int(i)
        loaded[attr] = mapping
    one_based = any(
        mapping and min(mapping.values()) == 1 for mapping in loaded.values()
    )
    return IdMaps(one_based=one_based, **loaded)
