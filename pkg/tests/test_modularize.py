import random

import pytest

from kgdistill.extract import ABoxSubset
from kgdistill.model import (
    DisjointClasses,
    EntityKind,
    EntityRef,
    Named,
    ObjectPropertyDomain,
    Ontology,
    Signature,
    SubClassOf,
    SubObjectPropertyOf,
    clazz,
    obj_prop,
    signature_of,
)
from kgdistill.modularize import decompose, extract_module, initial_signature

from conftest import C, EX, ce, pe, rel, sub, typ
from oracles import naive_module_fixpoint


def subset_of(relations, typings, k=1):
    return ABoxSubset(
        property_assertions=frozenset(relations),
        class_assertions=frozenset(typings),
        individuals=frozenset(
            i for a in relations for i in (a.subject.iri, a.object.iri)
        ),
        properties=frozenset(a.property.iri for a in relations),
        extraction_k=k,
    )


def test_initial_signature_classes_and_properties_only():
    abox = subset_of([rel("a", "p", "b")], [typ("a", "A")])
    sig = initial_signature(abox)
    assert sig.entities == {ce("A"), pe("p")}


def test_initial_signature_properties_only_abox():
    abox = subset_of([rel("a", "p", "b")], [])
    assert initial_signature(abox).entities == {pe("p")}


def test_initial_signature_exact_enumeration():
    relations = [rel("a", f"p{i}", "b") for i in range(3)]
    typings = [typ("a", f"A{i}") for i in range(4)]
    sig = initial_signature(subset_of(relations, typings))
    assert sig.entities == {pe(f"p{i}") for i in range(3)} | {ce(f"A{i}") for i in range(4)}


def test_empty_seed_gives_empty_module_one_iteration():
    onto = Ontology.from_axioms([sub("A", "B")])
    module = extract_module(onto, Signature(frozenset()))
    assert module.axioms == frozenset()
    assert module.iterations == 1


def test_disconnected_axiom_excluded():
    onto = Ontology.from_axioms([sub("A", "B"), sub("C", "D")])
    module = extract_module(onto, Signature(frozenset({ce("A")})))
    assert module.axioms == {sub("A", "B")}
    assert module.final_signature.entities == {ce("A"), ce("B")}


def test_signature_growth_pulls_chained_axioms():
    onto = Ontology.from_axioms(
        [sub("A", "B"), sub("B", "C"), ObjectPropertyDomain(pe("p"), C("C")), sub("X", "Y")]
    )
    module = extract_module(onto, Signature(frozenset({ce("A")})))
    assert module.axioms == {
        sub("A", "B"),
        sub("B", "C"),
        ObjectPropertyDomain(pe("p"), C("C")),
    }


def test_abox_not_in_search_space():
    onto = Ontology.from_axioms([sub("A", "B"), typ("x", "A")])
    module = extract_module(onto, Signature(frozenset({ce("A")})))
    assert module.axioms == {sub("A", "B")}


def test_punned_names_do_not_bridge():
    # class ex:n and property ex:n share an IRI but not a kind
    onto = Ontology.from_axioms(
        [
            SubClassOf(Named(clazz(EX + "n")), C("B")),
            SubObjectPropertyOf(obj_prop(EX + "n"), pe("q")),
        ]
    )
    module = extract_module(onto, Signature(frozenset({EntityRef(EX + "n", EntityKind.CLASS)})))
    assert module.axioms == {SubClassOf(Named(clazz(EX + "n")), C("B"))}


def test_monotone_in_seed():
    onto = Ontology.from_axioms([sub("A", "B"), sub("C", "D")])
    m1 = extract_module(onto, Signature(frozenset({ce("A")})))
    m2 = extract_module(onto, Signature(frozenset({ce("A"), ce("C")})))
    assert m1.axioms <= m2.axioms


def test_idempotent_on_own_signature():
    onto = Ontology.from_axioms([sub("A", "B"), sub("B", "C"), sub("X", "Y")])
    m1 = extract_module(onto, Signature(frozenset({ce("A")})))
    m2 = extract_module(Ontology.from_axioms(m1.axioms), m1.final_signature)
    assert m2.axioms == m1.axioms


def test_self_containment():
    onto = Ontology.from_axioms([sub("A", "B"), sub("B", "C")])
    module = extract_module(onto, Signature(frozenset({ce("A")})))
    for ax in module.axioms:
        assert signature_of(ax).entities <= module.final_signature.entities


def _random_ontology(rng, n_axioms=120, n_symbols=40):
    axioms = []
    for _ in range(n_axioms):
        kind = rng.random()
        if kind < 0.6:
            a, b = rng.sample(range(n_symbols), 2)
            axioms.append(sub(f"S{a}", f"S{b}"))
        elif kind < 0.8:
            a, b = rng.sample(range(n_symbols), 2)
            axioms.append(DisjointClasses((C(f"S{a}"), C(f"S{b}"))))
        else:
            p = rng.randrange(n_symbols)
            a = rng.randrange(n_symbols)
            axioms.append(ObjectPropertyDomain(pe(f"P{p}"), C(f"S{a}")))
    return Ontology.from_axioms(axioms)


@pytest.mark.parametrize("seed", range(15))
def test_matches_naive_repeat_scan_oracle(seed):
    rng = random.Random(seed)
    onto = _random_ontology(rng)
    axioms = sorted(onto.schema_axioms(), key=lambda a: a.key())
    sigs = [frozenset(signature_of(ax).entities) for ax in axioms]
    seed_syms = frozenset(
        e for ax in rng.sample(axioms, min(3, len(axioms))) for e in signature_of(ax).entities
    )
    module = extract_module(onto, Signature(seed_syms))
    oracle_idx = naive_module_fixpoint(sigs, seed_syms)
    assert module.axioms == {axioms[i] for i in oracle_idx}


def test_decompose_partition():
    axioms = [
        sub("A", "B"),
        DisjointClasses((C("A"), C("Z"))),
        ObjectPropertyDomain(pe("p"), C("A")),
        typ("x", "A"),
        rel("x", "p", "y"),
    ]
    comp = decompose(axioms)
    assert comp.taxonomy == {sub("A", "B")}
    assert comp.tbox_other == {DisjointClasses((C("A"), C("Z")))}
    assert comp.rbox == {ObjectPropertyDomain(pe("p"), C("A"))}
    assert comp.abox_types == {typ("x", "A")}
    assert comp.abox_relations == {rel("x", "p", "y")}
    assert comp.all_axioms() == frozenset(axioms)
    assert sum(comp.sizes().values()) == len(axioms)


def test_decompose_empty():
    comp = decompose([])
    assert sum(comp.sizes().values()) == 0


def test_write_components(tmp_path):
    from kgdistill.modularize import write_components
    from kgdistill.rdfio import parse_ontology_file

    comp = decompose([sub("A", "B"), typ("x", "A"), rel("x", "p", "y")])
    written = write_components(comp, tmp_path)
    names = {p.name for p in written}
    assert names == {"taxonomy.ttl", "tbox.ttl", "rbox.ttl", "abox_types.nt", "abox_relations.nt"}
    back, _ = parse_ontology_file(tmp_path / "taxonomy.ttl")
    assert back.tbox == {sub("A", "B")}
