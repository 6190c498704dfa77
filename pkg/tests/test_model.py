import pytest

from kgdistill.model import (
    Box,
    Characteristic,
    CharacteristicKind,
    ClassAssertion,
    DisjointClasses,
    EntityKind,
    EntityRef,
    EquivalentClasses,
    Named,
    ObjectPropertyAssertion,
    ObjectPropertyDomain,
    Ontology,
    Provenance,
    SomeValuesFrom,
    SubClassOf,
    SubPropertyChainOf,
    TOP,
    UnionOf,
    classify_box,
    clazz,
    individual,
    is_taxonomic,
    obj_prop,
    signature_of,
)

from conftest import C, EX, ce, ie, pe, rel, sub, typ


def test_entity_ref_requires_absolute_iri():
    with pytest.raises(ValueError):
        EntityRef("not-an-iri", EntityKind.CLASS)
    EntityRef("urn:x", EntityKind.CLASS)
    EntityRef("http://e/x", EntityKind.CLASS)


def test_signature_of_simple_subclass():
    assert signature_of(sub("A", "B")).entities == {ce("A"), ce("B")}


def test_signature_of_nested_expression():
    ax = SubClassOf(C("A"), SomeValuesFrom(pe("r"), UnionOf((C("B"), C("C")))))
    assert signature_of(ax).entities == {ce("A"), ce("B"), ce("C"), pe("r")}


def test_signature_excludes_top():
    ax = SubClassOf(C("A"), TOP)
    assert signature_of(ax).entities == {ce("A")}


def test_signature_of_abox_axioms_includes_individuals():
    assert signature_of(rel("x", "p", "y")).entities == {ie("x"), pe("p"), ie("y")}
    assert signature_of(typ("x", "A")).entities == {ie("x"), ce("A")}


@pytest.mark.parametrize(
    "axiom,box",
    [
        (sub("A", "B"), Box.TBOX),
        (DisjointClasses((C("A"), C("B"))), Box.TBOX),
        (EquivalentClasses((C("A"), C("B"))), Box.TBOX),
        (ObjectPropertyDomain(pe("p"), C("A")), Box.RBOX),
        (Characteristic(pe("p"), CharacteristicKind.TRANSITIVE), Box.RBOX),
        (SubPropertyChainOf((pe("p"), pe("q")), pe("r")), Box.RBOX),
        (typ("x", "A"), Box.ABOX),
        (rel("x", "p", "y"), Box.ABOX),
    ],
)
def test_classify_box(axiom, box):
    assert classify_box(axiom) is box


def test_is_taxonomic():
    assert is_taxonomic(sub("A", "B"))
    assert not is_taxonomic(SubClassOf(C("A"), SomeValuesFrom(pe("r"), C("B"))))
    assert not is_taxonomic(DisjointClasses((C("A"), C("B"))))


def test_equivalent_and_disjoint_equality_is_order_insensitive():
    assert EquivalentClasses((C("A"), C("B"))) == EquivalentClasses((C("B"), C("A")))
    assert DisjointClasses((C("A"), C("B"), C("D"))) == DisjointClasses((C("D"), C("A"), C("B")))
    assert hash(EquivalentClasses((C("A"), C("B")))) == hash(EquivalentClasses((C("B"), C("A"))))


def test_chain_equality_is_order_sensitive():
    a = SubPropertyChainOf((pe("p"), pe("q")), pe("r"))
    b = SubPropertyChainOf((pe("q"), pe("p")), pe("r"))
    assert a != b


def test_provenance_excluded_from_equality():
    a = sub("A", "B")
    b = SubClassOf(C("A"), C("B"), provenance=Provenance.INFERRED)
    assert a == b
    assert len({a, b}) == 1


def test_ontology_vocabulary_is_union_of_signatures():
    onto = Ontology.from_axioms([sub("A", "B"), rel("x", "p", "y")])
    expected = {ce("A"), ce("B"), ie("x"), pe("p"), ie("y")}
    assert onto.vocabulary == expected
    assert len(onto) == 2


def test_ontology_dedupes_structural_equals():
    onto = Ontology.from_axioms([sub("A", "B"), SubClassOf(C("A"), C("B"), provenance=Provenance.INFERRED)])
    assert len(onto.tbox) == 1


def test_punning_conflicts():
    onto = Ontology.from_axioms(
        [
            sub("thing", "B"),
            ObjectPropertyAssertion(ie("x"), obj_prop(EX + "thing"), ie("y")),
        ]
    )
    conflicts = onto.punning_conflicts()
    assert EX + "thing" in conflicts
    assert conflicts[EX + "thing"] == {EntityKind.CLASS, EntityKind.OBJECT_PROPERTY}


def test_union_requires_two_operands():
    with pytest.raises(ValueError):
        UnionOf((C("A"),))
