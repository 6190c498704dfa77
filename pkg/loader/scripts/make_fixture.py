#!/usr/bin/env python3
"""Build the loader-equivalence fixture: a small bundle exported by the
pipeline plus the symbolic answers for every traversal utility, computed
directly over the bundle's axiom sets (id-mapped through the bundle's own
map files).

Run from the repository root:
    python3 loader/scripts/make_fixture.py
"""

from __future__ import annotations

import json
import random
import shutil
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(ROOT / "src"))

from kgdistill.model import Named, UnionOf  # noqa: E402
from kgdistill.pipeline import PipelineConfig, run  # noqa: E402

FIXTURES = ROOT / "loader" / "tests" / "fixtures"

PREFIXES = """@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix ex: <http://fixture.example.org/> .
"""

N_CLASSES = 50
N_INDIVIDUALS = 200
N_PROPS = 10


def schema_doc() -> str:
    lines = [PREFIXES, "<http://fixture.example.org/onto> rdf:type owl:Ontology ."]
    for i in range(N_CLASSES):
        lines.append(f"ex:K{i} rdf:type owl:Class .")
        if i > 0:
            lines.append(f"ex:K{i} rdfs:subClassOf ex:K{(i - 1) // 3} .")
    # a few extra edges make the taxonomy a DAG, not a tree
    lines.append("ex:K40 rdfs:subClassOf ex:K2 .")
    lines.append("ex:K41 rdfs:subClassOf ex:K7 .")
    lines.append("ex:K23 rdfs:subClassOf ex:K8 .")
    for i in range(N_PROPS):
        lines.append(f"ex:r{i} rdf:type owl:ObjectProperty .")
        lines.append(f"ex:r{i} rdfs:domain ex:K{(3 * i + 1) % N_CLASSES} .")
        if i == 0:
            lines.append("ex:r0 rdfs:range [ rdf:type owl:Class ; owl:unionOf (ex:K5 ex:K6) ] .")
        else:
            lines.append(f"ex:r{i} rdfs:range ex:K{(7 * i + 2) % N_CLASSES} .")
    lines.append("ex:r1 rdfs:subPropertyOf ex:r0 .")
    lines.append("ex:r3 rdfs:subPropertyOf ex:r2 .")
    lines.append("ex:r4 owl:inverseOf ex:r5 .")
    return "\n".join(lines) + "\n"


def abox_doc() -> str:
    rng = random.Random(99)
    lines = [PREFIXES]
    for i in range(N_INDIVIDUALS):
        lines.append(f"ex:n{i:03d} rdf:type owl:NamedIndividual .")
        lines.append(f"ex:n{i:03d} rdf:type ex:K{i % N_CLASSES} .")
        if i % 3 == 0:
            lines.append(f"ex:n{i:03d} rdf:type ex:K{(i * 7 + 1) % N_CLASSES} .")
    seen = set()
    while len(seen) < 600:
        s = rng.randrange(N_INDIVIDUALS)
        o = rng.randrange(N_INDIVIDUALS)
        p = rng.randrange(N_PROPS)
        seen.add((s, p, o))
    for s, p, o in sorted(seen):
        lines.append(f"ex:n{s:03d} ex:r{p} ex:n{o:03d} .")
    return "\n".join(lines) + "\n"


def closure(direct: dict[int, set[int]]) -> dict[int, set[int]]:
    out: dict[int, set[int]] = {}
    for start in direct:
        reached: set[int] = set()
        stack = list(direct.get(start, ()))
        while stack:
            c = stack.pop()
            if c in reached:
                continue
            reached.add(c)
            stack.extend(direct.get(c, ()))
        reached.discard(start)
        out[start] = reached
    return out


def main() -> None:
    work = ROOT / "loader" / "scripts" / "_work"
    if work.exists():
        shutil.rmtree(work)
    work.mkdir(parents=True)
    (work / "schema.ttl").write_text(schema_doc())
    (work / "abox.ttl").write_text(abox_doc())

    config = PipelineConfig(
        source_files=(str(work / "abox.ttl"),),
        schema_files=(str(work / "schema.ttl"),),
        output_dir=str(work / "out"),
        dataset_name="fixture",
        k=1,
        seed=5,
        variant="base",
    )
    result = run(config)
    bundle = result.bundles["base"]

    target = FIXTURES / "bundle"
    if target.exists():
        shutil.rmtree(target)
    shutil.copytree(bundle.directory, target)

    maps = bundle.id_maps
    iid, pid, cid = maps.individual_ids, maps.property_ids, maps.class_ids
    components = bundle.components

    typings = sorted(
        (iid[ca.individual.iri], cid[ca.expr.entity.iri])
        for ca in components.abox_types
        if isinstance(ca.expr, Named)
    )
    assertions = sorted(
        (iid[a.subject.iri], pid[a.property.iri], iid[a.object.iri])
        for a in components.abox_relations
    )
    taxonomy_pairs = sorted(
        (cid[ax.sub.entity.iri], cid[ax.sup.entity.iri]) for ax in components.taxonomy
    )

    direct_sup: dict[int, set[int]] = {}
    direct_sub: dict[int, set[int]] = {}
    for a, b in taxonomy_pairs:
        direct_sup.setdefault(a, set()).add(b)
        direct_sub.setdefault(b, set()).add(a)
    trans_sup = closure(direct_sup)
    trans_sub = closure(direct_sub)

    classes_of: dict[int, set[int]] = {}
    for i, c in typings:
        classes_of.setdefault(i, set()).add(c)

    domains: dict[int, set[int]] = {}
    ranges: dict[int, set[int]] = {}
    from kgdistill.model import ObjectPropertyDomain, ObjectPropertyRange

    def named_ids(expr) -> list[int]:
        if isinstance(expr, Named):
            return [cid[expr.entity.iri]]
        if isinstance(expr, UnionOf):
            return [cid[o.entity.iri] for o in expr.operands if isinstance(o, Named)]
        return []

    for ax in components.rbox:
        if isinstance(ax, ObjectPropertyDomain):
            domains.setdefault(pid[ax.property.iri], set()).update(named_ids(ax.expr))
        elif isinstance(ax, ObjectPropertyRange):
            ranges.setdefault(pid[ax.property.iri], set()).update(named_ids(ax.expr))

    all_class_ids = sorted(cid.values())
    superclass_targets = {b for _, b in taxonomy_pairs}

    expected = {
        "counts": maps.counts(),
        "assertions": assertions,
        "typings": typings,
        "taxonomy_pairs": taxonomy_pairs,
        "classes_of": {str(i): sorted(cs) for i, cs in classes_of.items()},
        "superclasses_direct": {
            str(c): sorted(direct_sup.get(c, ())) for c in all_class_ids
        },
        "superclasses_transitive": {
            str(c): sorted(trans_sup.get(c, ())) for c in all_class_ids
        },
        "subclasses_direct": {str(c): sorted(direct_sub.get(c, ())) for c in all_class_ids},
        "subclasses_transitive": {
            str(c): sorted(trans_sub.get(c, ())) for c in all_class_ids
        },
        "is_leaf": {str(c): c not in superclass_targets for c in all_class_ids},
        "domains_of": {str(p): sorted(v) for p, v in sorted(domains.items())},
        "ranges_of": {str(p): sorted(v) for p, v in sorted(ranges.items())},
    }
    (FIXTURES / "expected.json").write_text(
        json.dumps(expected, indent=1, sort_keys=True) + "\n"
    )
    shutil.rmtree(work)
    print(f"fixture bundle: {target}")
    print(f"counts: {maps.counts()}")


if __name__ == "__main__":
    main()
