"""Seeded generator for a consistent synthetic KG at configurable scale.

The schema is a class tree plus a schema-only "tag" branch carrying the
expressive axioms (disjointness, restrictions, cardinality) away from the
instance data, so the generated KG is consistent by construction while the
full rule engine still has real work to do.
"""

from __future__ import annotations

import random

EX = "http://synth.example.org/"

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
XSD = "http://www.w3.org/2001/XMLSchema#"

HEADER = (
    f"@prefix rdf: <{RDF}> .\n"
    f"@prefix rdfs: <{RDFS}> .\n"
    f"@prefix owl: <{OWL}> .\n"
    f"@prefix xsd: <{XSD}> .\n"
    f"@prefix ex: <{EX}> .\n\n"
)


def generate_schema(n_classes=300, n_tags=120, n_props=100, seed=0) -> str:
    rng = random.Random(seed)
    lines = [HEADER, "<http://synth.example.org/onto> rdf:type owl:Ontology .\n"]

    # wide class tree (fanout 8): realistic taxonomy depth of 3-4
    for i in range(n_classes):
        lines.append(f"ex:C{i} rdf:type owl:Class .")
        if i > 0:
            lines.append(f"ex:C{i} rdfs:subClassOf ex:C{(i - 1) // 8} .")

    # schema-only tag branch with the expressive constructs
    for i in range(n_tags):
        lines.append(f"ex:T{i} rdf:type owl:Class .")
        if i > 0:
            lines.append(f"ex:T{i} rdfs:subClassOf ex:T{(i - 1) // 3} .")
    for i in range(0, n_tags - 1, 8):
        lines.append(f"ex:T{i} owl:disjointWith ex:T{i + 1} .")
    for i in range(0, n_tags - 2, 9):
        lines.append(f"ex:T{i} owl:equivalentClass ex:T{i + 2} .")
    for i in range(0, n_tags - 1, 6):
        lines.append(f"ex:tagprop{i} rdf:type owl:ObjectProperty .")
        lines.append(
            f"ex:T{i} rdfs:subClassOf [ rdf:type owl:Restriction ; "
            f"owl:onProperty ex:tagprop{i} ; owl:someValuesFrom ex:T{i + 1} ] ."
        )
    for i in range(1, n_tags - 1, 7):
        lines.append(
            f"ex:T{i} rdfs:subClassOf [ rdf:type owl:Restriction ; "
            f"owl:onProperty ex:tagprop{max(0, i - 1) // 6 * 6} ; owl:allValuesFrom ex:T{i + 1} ] ."
        )
    for i in range(2, n_tags - 1, 11):
        lines.append(
            f"ex:T{i} rdfs:subClassOf [ rdf:type owl:Restriction ; "
            f"owl:onProperty ex:tagprop0 ; "
            f'owl:maxCardinality "3"^^xsd:nonNegativeInteger ] .'
        )
    for i in range(0, n_tags - 4, 13):
        lines.append(f"ex:T{i + 3} owl:unionOf (ex:T{i + 1} ex:T{i + 2}) .")

    # properties: domains and ranges on mid-tree classes
    mids = list(range(4, 36))
    for i in range(n_props):
        dom = mids[i % len(mids)]
        rng_c = mids[(i * 7 + 3) % len(mids)]
        lines.append(f"ex:p{i} rdf:type owl:ObjectProperty .")
        lines.append(f"ex:p{i} rdfs:domain ex:C{dom} .")
        lines.append(f"ex:p{i} rdfs:range ex:C{rng_c} .")
    for i in range(0, n_props - 1, 4):
        lines.append(f"ex:p{i + 1} rdfs:subPropertyOf ex:p{i} .")
    for i in range(0, 30, 2):
        lines.append(f"ex:q{i} rdf:type owl:ObjectProperty .")
        lines.append(f"ex:p{i} owl:inverseOf ex:q{i} .")
    for i in range(0, 10, 2):
        lines.append(f"ex:p{i} owl:equivalentProperty ex:p{i + 50} .")
    for i in range(5):
        lines.append(f"ex:chainprop{i} rdf:type owl:ObjectProperty .")
        lines.append(f"ex:chainprop{i} owl:propertyChainAxiom (ex:p{2 * i} ex:p{2 * i + 1}) .")
    for i in range(90, 95):
        lines.append(f"ex:p{i} rdf:type owl:FunctionalProperty .")
    for i in range(95, 98):
        lines.append(f"ex:t{i} rdf:type owl:ObjectProperty , owl:TransitiveProperty .")
    lines.append("ex:p98 rdf:type owl:SymmetricProperty .")
    lines.append("ex:p99 rdf:type owl:IrreflexiveProperty .")
    return "\n".join(lines) + "\n"


def generate_abox(
    n_triples=100_000, n_inds=12_000, n_props=90, n_classes=300, seed=0
) -> str:
    """N-Triples ABox; consistent with generate_schema's constraints."""
    rng = random.Random(seed + 1)
    lines = []
    leaf_lo = n_classes // 2

    def ind(i: int) -> str:
        return f"<{EX}i{i:06d}>"

    for i in range(n_inds):
        leaf = leaf_lo + (i % (n_classes - leaf_lo))
        lines.append(f"{ind(i)} <{RDF}type> <{OWL}NamedIndividual> .")
        lines.append(f"{ind(i)} <{RDF}type> <{EX}C{leaf}> .")

    # bulk relations: per-property subject/object blocks keep the number of
    # distinct properties each individual participates in realistic
    block = n_inds // n_props
    per_prop = (n_triples - 3000) // n_props
    for p in range(n_props):
        s_lo = (p * block) % n_inds
        o_lo = (((p * 7 + 13) % n_props) * block) % n_inds
        for _ in range(per_prop):
            s = s_lo + rng.randrange(block)
            o = o_lo + rng.randrange(block)
            lines.append(f"{ind(s)} <{EX}p{p}> {ind(o)} .")

    # functional properties: one object per subject
    for i in range(1500):
        p = 90 + (i % 5)
        lines.append(f"{ind(i)} <{EX}p{p}> {ind(n_inds - 1 - i)} .")

    # transitive properties on short disjoint chains
    count = 0
    base = 0
    while count < 1500:
        p = 95 + (base % 3)
        chain = [rng.randrange(n_inds) for _ in range(4)]
        for a, b in zip(chain, chain[1:]):
            lines.append(f"{ind(a)} <{EX}t{p}> {ind(b)} .")
            count += 1
        base += 1
    return "\n".join(lines) + "\n"


def write_kg(directory, n_triples=100_000, n_inds=12_000, seed=0):
    schema_path = directory / "schema.ttl"
    abox_path = directory / "abox.nt"
    schema_path.write_text(generate_schema(seed=seed), encoding="utf-8")
    abox_path.write_text(
        generate_abox(n_triples=n_triples, n_inds=n_inds, seed=seed), encoding="utf-8"
    )
    return schema_path, abox_path
