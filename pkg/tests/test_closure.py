import random

import pytest

from kgdistill.model import (
    Characteristic,
    CharacteristicKind,
    EquivalentClasses,
    EquivalentObjectProperties,
    InverseObjectProperties,
    Named,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    Ontology,
    Provenance,
    SubClassOf,
    SubObjectPropertyOf,
    clazz,
)
from kgdistill.reasoner import materialize_schema

from conftest import C, EX, pe, sub
from oracles import random_dag, random_digraph, warshall_pairs


def closure_of(axioms):
    return materialize_schema(Ontology.from_axioms(axioms))


def test_subclass_transitivity():
    closure, inferred = closure_of([sub("A", "B"), sub("B", "C")])
    assert SubClassOf(C("A"), C("C")) in inferred
    assert (EX + "A", EX + "C") in closure.subsumptions


def test_cycle_becomes_equivalence_without_tautologies():
    closure, inferred = closure_of([sub("A", "B"), sub("B", "A")])
    assert closure.equivalence_classes == (frozenset({EX + "A", EX + "B"}),)
    for ax in inferred:
        if isinstance(ax, SubClassOf):
            assert ax.sub != ax.sup
    assert EquivalentClasses((C("A"), C("B"))) in inferred


def test_domain_inherited_by_subproperty():
    # q <= p and domain(p) = C entails domain(q) = C
    closure, inferred = closure_of(
        [SubObjectPropertyOf(pe("q"), pe("p")), ObjectPropertyDomain(pe("p"), C("C"))]
    )
    assert ObjectPropertyDomain(pe("q"), C("C")) in inferred
    assert C("C") in closure.entailed_domains[EX + "q"]


def test_domain_range_swap_across_inverse():
    closure, inferred = closure_of(
        [
            InverseObjectProperties(pe("p"), pe("q")),
            ObjectPropertyDomain(pe("p"), C("C")),
            ObjectPropertyRange(pe("p"), C("D")),
        ]
    )
    assert ObjectPropertyRange(pe("q"), C("C")) in inferred
    assert ObjectPropertyDomain(pe("q"), C("D")) in inferred


def test_inverse_of_inverse_is_equivalence():
    closure, inferred = closure_of(
        [
            InverseObjectProperties(pe("p"), pe("q")),
            InverseObjectProperties(pe("q"), pe("r")),
        ]
    )
    assert frozenset({EX + "p", EX + "r"}) in closure.equivalent_properties
    assert EquivalentObjectProperties((pe("p"), pe("r"))) in inferred


def test_characteristics_propagate_across_equivalence():
    closure, inferred = closure_of(
        [
            EquivalentObjectProperties((pe("p"), pe("q"))),
            Characteristic(pe("p"), CharacteristicKind.TRANSITIVE),
        ]
    )
    assert Characteristic(pe("q"), CharacteristicKind.TRANSITIVE) in inferred
    assert CharacteristicKind.TRANSITIVE in closure.entailed_characteristics[EX + "q"]


def test_inverse_pairs_closed_symmetrically():
    closure, _ = closure_of([InverseObjectProperties(pe("p"), pe("q"))])
    assert (EX + "p", EX + "q") in closure.inverse_pairs
    assert (EX + "q", EX + "p") in closure.inverse_pairs


def test_property_hierarchy_transitive():
    closure, inferred = closure_of(
        [SubObjectPropertyOf(pe("p"), pe("q")), SubObjectPropertyOf(pe("q"), pe("r"))]
    )
    assert (EX + "p", EX + "r") in closure.property_hierarchy
    assert SubObjectPropertyOf(pe("p"), pe("r")) in inferred


def test_inferred_axioms_carry_inferred_provenance():
    _, inferred = closure_of([sub("A", "B"), sub("B", "C")])
    assert all(ax.provenance is Provenance.INFERRED for ax in inferred)


def test_inferred_excludes_asserted():
    _, inferred = closure_of([sub("A", "B"), sub("B", "C"), sub("A", "C")])
    assert SubClassOf(C("A"), C("C")) not in inferred


def _closure_pairs_via_engine(n, edges):
    def cname(i):
        return f"{EX}N{i:04d}"

    axioms = [SubClassOf(Named(clazz(cname(a))), Named(clazz(cname(b)))) for a, b in edges]
    closure, _ = closure_of(axioms)
    ids = {cname(i): i for i in range(n)}
    return {(ids[a], ids[b]) for a, b in closure.subsumptions}


@pytest.mark.parametrize("seed", range(25))
def test_closure_equals_warshall_on_random_dags(seed):
    rng = random.Random(seed)
    n, edges = random_dag(rng, max_nodes=60, max_edges=150)
    assert _closure_pairs_via_engine(n, edges) == warshall_pairs(n, edges)


@pytest.mark.parametrize("seed", range(10))
def test_closure_equals_warshall_on_cyclic_digraphs(seed):
    rng = random.Random(1000 + seed)
    n, edges = random_digraph(rng)
    assert _closure_pairs_via_engine(n, edges) == warshall_pairs(n, edges)


def test_closure_monotone_under_axiom_addition():
    base = [sub("A", "B"), sub("B", "C")]
    c1, _ = closure_of(base)
    c2, _ = closure_of(base + [sub("C", "D")])
    assert c1.subsumptions <= c2.subsumptions
