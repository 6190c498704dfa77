"""Schema-level rule engine: deductive closure with derivation supports.

The rule set covers: subclass transitivity (with sound decomposition of
union subjects and intersection superclasses), equivalence as mutual
subsumption, property-hierarchy transitivity, inverse symmetry and
inverse-of-inverse equivalence, domain/range inheritance down the property
hierarchy and across inverses, and characteristic propagation across
equivalent properties. Sound but incomplete beyond this fragment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..model import (
    Axiom,
    Bottom,
    Characteristic,
    CharacteristicKind,
    ClassExpr,
    ComplementOf,
    DisjointClasses,
    EntityKind,
    EquivalentClasses,
    EquivalentObjectProperties,
    IntersectionOf,
    InverseObjectProperties,
    Named,
    ObjectPropertyDomain,
    ObjectPropertyRange,
    Ontology,
    Provenance,
    SomeValuesFrom,
    SubClassOf,
    SubObjectPropertyOf,
    SubPropertyChainOf,
    Top,
    UnionOf,
    clazz,
    obj_prop,
)

Support = frozenset


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        i += 1
        mask >>= 1


def _merge_support(existing: Optional[frozenset], new: frozenset) -> frozenset:
    """Keep the smaller (then lexicographically first) support for determinism."""
    if existing is None:
        return new
    if (len(new), sorted(a.key() for a in new)) < (
        len(existing),
        sorted(a.key() for a in existing),
    ):
        return new
    return existing


class _Graph:
    """Directed graph over interned names, edges carrying axiom supports."""

    def __init__(self) -> None:
        self.ids: dict[str, int] = {}
        self.names: list[str] = []
        self.edges: list[dict[int, frozenset]] = []

    def intern(self, name: str) -> int:
        i = self.ids.get(name)
        if i is None:
            i = len(self.names)
            self.ids[name] = i
            self.names.append(name)
            self.edges.append({})
        return i

    def add_edge(self, a: int, b: int, support: frozenset) -> None:
        if a == b:
            return
        self.edges[a][b] = _merge_support(self.edges[a].get(b), support)

    def __len__(self) -> int:
        return len(self.names)

    def sccs(self) -> tuple[list[list[int]], list[int]]:
        """Tarjan (iterative); returns (components, component id per node)."""
        n = len(self.names)
        index = [-1] * n
        low = [0] * n
        on_stack = [False] * n
        stack: list[int] = []
        comps: list[list[int]] = []
        comp_of = [-1] * n
        counter = 0
        for root in range(n):
            if index[root] != -1:
                continue
            work = [(root, iter(self.edges[root]))]
            index[root] = low[root] = counter
            counter += 1
            stack.append(root)
            on_stack[root] = True
            while work:
                v, it = work[-1]
                advanced = False
                for w in it:
                    if index[w] == -1:
                        index[w] = low[w] = counter
                        counter += 1
                        stack.append(w)
                        on_stack[w] = True
                        work.append((w, iter(self.edges[w])))
                        advanced = True
                        break
                    elif on_stack[w]:
                        low[v] = min(low[v], index[w])
                if advanced:
                    continue
                work.pop()
                if work:
                    pv = work[-1][0]
                    low[pv] = min(low[pv], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp_of[w] = len(comps)
                        comp.append(w)
                        if w == v:
                            break
                    comps.append(comp)
        return comps, comp_of

    def reach_masks(self) -> list[int]:
        """reach[i]: bitmask of nodes reachable from i via >= 1 edge."""
        comps, comp_of = self.sccs()
        member_mask = [0] * len(comps)
        for node, c in enumerate(comp_of):
            member_mask[c] |= 1 << node
        comp_edges: list[set[int]] = [set() for _ in comps]
        for a in range(len(self.names)):
            for b in self.edges[a]:
                if comp_of[a] != comp_of[b]:
                    comp_edges[comp_of[a]].add(comp_of[b])
        # Tarjan emits components in reverse topological order: successors first
        comp_reach = [0] * len(comps)
        for c in range(len(comps)):
            mask = 0
            for d in comp_edges[c]:
                mask |= member_mask[d] | comp_reach[d]
            comp_reach[c] = mask
        out = [0] * len(self.names)
        for node, c in enumerate(comp_of):
            mask = comp_reach[c]
            if bin(member_mask[c]).count("1") > 1:
                mask |= member_mask[c]
            out[node] = mask
        return out

    def bfs_supports(self, src: int) -> dict[int, frozenset]:
        """Union of edge supports along a shortest path from src to each node."""
        out: dict[int, frozenset] = {src: frozenset()}
        frontier = [src]
        while frontier:
            nxt = []
            for v in frontier:
                base = out[v]
                for w, sup in self.edges[v].items():
                    if w not in out:
                        out[w] = base | sup
                        nxt.append(w)
            frontier = nxt
        return out


@dataclass
class SchemaIndex:
    """Precomputed schema closure shared by satisfiability and ABox checks."""

    ontology: Ontology
    cg: _Graph = field(default_factory=_Graph)
    pg: _Graph = field(default_factory=_Graph)
    creach: list[int] = field(default_factory=list)
    preach: list[int] = field(default_factory=list)
    bottom_direct: dict[int, frozenset] = field(default_factory=dict)
    complex_direct: dict[int, list[tuple[ClassExpr, frozenset]]] = field(default_factory=dict)
    disjoint_pairs: list[tuple[int, int, frozenset]] = field(default_factory=list)
    complement_pairs: list[tuple[int, int, frozenset]] = field(default_factory=list)
    inverse: dict[int, dict[int, frozenset]] = field(default_factory=dict)
    chars: dict[int, dict[CharacteristicKind, frozenset]] = field(default_factory=dict)
    domains: dict[int, dict[ClassExpr, frozenset]] = field(default_factory=dict)
    ranges: dict[int, dict[ClassExpr, frozenset]] = field(default_factory=dict)
    chains: list[tuple[tuple[int, ...], int, frozenset]] = field(default_factory=list)
    exists_left: dict[int, list[tuple[ClassExpr, int, frozenset]]] = field(default_factory=dict)
    _class_bfs_cache: dict[int, dict[int, frozenset]] = field(default_factory=dict)
    _prop_bfs_cache: dict[int, dict[int, frozenset]] = field(default_factory=dict)
    _supers_cache: dict[int, list[int]] = field(default_factory=dict)
    _psupers_cache: dict[int, list[int]] = field(default_factory=dict)

    # -- construction ------------------------------------------------------

    @staticmethod
    def build(ontology: Ontology) -> "SchemaIndex":
        idx = SchemaIndex(ontology)
        for e in sorted(ontology.vocabulary, key=lambda e: e.iri):
            if e.kind is EntityKind.CLASS:
                idx.cg.intern(e.iri)
            elif e.kind is EntityKind.OBJECT_PROPERTY:
                idx.pg.intern(e.iri)
        for ax in sorted(ontology.tbox, key=lambda a: a.key()):
            idx._index_tbox(ax)
        for ax in sorted(ontology.rbox, key=lambda a: a.key()):
            idx._index_rbox(ax)
        idx._inverse_closure()
        idx.creach = idx.cg.reach_masks()
        idx.preach = idx.pg.reach_masks()
        idx._entail_domains_ranges()
        idx._entail_characteristics()
        return idx

    def _index_tbox(self, ax: Axiom) -> None:
        sup = frozenset([ax])
        if isinstance(ax, SubClassOf):
            self._subclass_fact(ax.sub, ax.sup, sup)
        elif isinstance(ax, EquivalentClasses):
            ops = list(ax.operands)
            for i, a in enumerate(ops):
                for b in ops[i + 1:]:
                    self._subclass_fact(a, b, sup)
                    self._subclass_fact(b, a, sup)
        elif isinstance(ax, DisjointClasses):
            named = [o for o in ax.operands if isinstance(o, Named)]
            for i, a in enumerate(named):
                for b in named[i + 1:]:
                    ia, ib = self.cg.intern(a.entity.iri), self.cg.intern(b.entity.iri)
                    self.disjoint_pairs.append((ia, ib, sup))

    def _subclass_fact(self, sub: ClassExpr, sup_expr: ClassExpr, support: frozenset) -> None:
        if isinstance(sub, Named):
            self._decompose_superclass(self.cg.intern(sub.entity.iri), sup_expr, support)
        elif isinstance(sub, UnionOf):
            for op in sub.operands:
                self._subclass_fact(op, sup_expr, support)
        elif isinstance(sub, SomeValuesFrom) and isinstance(sup_expr, Named):
            if sub.property.kind is EntityKind.OBJECT_PROPERTY:
                p = self.pg.intern(sub.property.iri)
                e = self.cg.intern(sup_expr.entity.iri)
                self.exists_left.setdefault(p, []).append((sub.filler, e, support))
        # other complex subjects: outside the rule fragment

    def _decompose_superclass(self, sub_id: int, expr: ClassExpr, support: frozenset) -> None:
        if isinstance(expr, Named):
            self.cg.add_edge(sub_id, self.cg.intern(expr.entity.iri), support)
        elif isinstance(expr, Top):
            pass
        elif isinstance(expr, Bottom):
            self.bottom_direct[sub_id] = _merge_support(self.bottom_direct.get(sub_id), support)
        elif isinstance(expr, IntersectionOf):
            for op in expr.operands:
                self._decompose_superclass(sub_id, op, support)
        else:
            self.complex_direct.setdefault(sub_id, []).append((expr, support))
            if isinstance(expr, ComplementOf) and isinstance(expr.operand, Named):
                e = self.cg.intern(expr.operand.entity.iri)
                self.complement_pairs.append((sub_id, e, support))

    def _index_rbox(self, ax: Axiom) -> None:
        sup = frozenset([ax])
        if isinstance(ax, SubObjectPropertyOf):
            self.pg.add_edge(self.pg.intern(ax.sub.iri), self.pg.intern(ax.sup.iri), sup)
        elif isinstance(ax, EquivalentObjectProperties):
            ids = [self.pg.intern(p.iri) for p in ax.operands]
            for i, a in enumerate(ids):
                for b in ids[i + 1:]:
                    self.pg.add_edge(a, b, sup)
                    self.pg.add_edge(b, a, sup)
        elif isinstance(ax, InverseObjectProperties):
            p, q = self.pg.intern(ax.first.iri), self.pg.intern(ax.second.iri)
            self.inverse.setdefault(p, {})[q] = _merge_support(
                self.inverse.get(p, {}).get(q), sup
            )
            self.inverse.setdefault(q, {})[p] = _merge_support(
                self.inverse.get(q, {}).get(p), sup
            )
        elif isinstance(ax, ObjectPropertyDomain):
            p = self.pg.intern(ax.property.iri)
            d = self.domains.setdefault(p, {})
            d[ax.expr] = _merge_support(d.get(ax.expr), sup)
        elif isinstance(ax, ObjectPropertyRange):
            p = self.pg.intern(ax.property.iri)
            d = self.ranges.setdefault(p, {})
            d[ax.expr] = _merge_support(d.get(ax.expr), sup)
        elif isinstance(ax, Characteristic):
            p = self.pg.intern(ax.property.iri)
            d = self.chars.setdefault(p, {})
            d[ax.kind] = _merge_support(d.get(ax.kind), sup)
        elif isinstance(ax, SubPropertyChainOf):
            chain = tuple(self.pg.intern(p.iri) for p in ax.chain)
            self.chains.append((chain, self.pg.intern(ax.sup.iri), sup))

    def _inverse_closure(self) -> None:
        # inverse of an inverse is the property itself: p == r when
        # inv(p,q) and inv(q,r); realized as mutual property edges
        for p, qs in list(self.inverse.items()):
            for q, s1 in list(qs.items()):
                for r, s2 in list(self.inverse.get(q, {}).items()):
                    if p != r:
                        self.pg.add_edge(p, r, s1 | s2)
                        self.pg.add_edge(r, p, s1 | s2)

    def _entail_domains_ranges(self) -> None:
        changed = True
        while changed:
            changed = False
            for p in range(len(self.pg)):
                mask = self.preach[p]
                q = 0
                m = mask
                while m:
                    if m & 1:
                        psup = self.prop_path_support(p, q)
                        for expr, s in list(self.domains.get(q, {}).items()):
                            d = self.domains.setdefault(p, {})
                            if expr not in d:
                                d[expr] = s | psup
                                changed = True
                        for expr, s in list(self.ranges.get(q, {}).items()):
                            d = self.ranges.setdefault(p, {})
                            if expr not in d:
                                d[expr] = s | psup
                                changed = True
                    q += 1
                    m >>= 1
            for p, qs in self.inverse.items():
                for q, inv_sup in qs.items():
                    for expr, s in list(self.domains.get(p, {}).items()):
                        d = self.ranges.setdefault(q, {})
                        if expr not in d:
                            d[expr] = s | inv_sup
                            changed = True
                    for expr, s in list(self.ranges.get(p, {}).items()):
                        d = self.domains.setdefault(q, {})
                        if expr not in d:
                            d[expr] = s | inv_sup
                            changed = True

    def _entail_characteristics(self) -> None:
        for p in range(len(self.pg)):
            mask = self.preach[p]
            q = 0
            m = mask
            while m:
                if m & 1 and q != p and (self.preach[q] >> p) & 1:
                    # p and q are equivalent properties
                    path = self.prop_path_support(p, q) | self.prop_path_support(q, p)
                    for kind, s in list(self.chars.get(q, {}).items()):
                        d = self.chars.setdefault(p, {})
                        if kind not in d:
                            d[kind] = s | path
                q += 1
                m >>= 1

    # -- lookups -----------------------------------------------------------

    def class_id(self, iri: str) -> Optional[int]:
        return self.cg.ids.get(iri)

    def prop_id(self, iri: str) -> Optional[int]:
        return self.pg.ids.get(iri)

    def class_path_support(self, a: int, b: int) -> frozenset:
        if a == b:
            return frozenset()
        cache = self._class_bfs_cache.get(a)
        if cache is None:
            cache = self.cg.bfs_supports(a)
            self._class_bfs_cache[a] = cache
        return cache[b]

    def prop_path_support(self, a: int, b: int) -> frozenset:
        if a == b:
            return frozenset()
        cache = self._prop_bfs_cache.get(a)
        if cache is None:
            cache = self.pg.bfs_supports(a)
            self._prop_bfs_cache[a] = cache
        return cache[b]

    def superclasses_strict(self, c: int) -> list[int]:
        got = self._supers_cache.get(c)
        if got is None:
            got = [i for i in _bits(self.creach[c]) if i != c]
            self._supers_cache[c] = got
        return got

    def superclasses_refl(self, c: int) -> list[int]:
        return [c] + self.superclasses_strict(c)

    def superprops_strict(self, p: int) -> list[int]:
        got = self._psupers_cache.get(p)
        if got is None:
            got = [i for i in _bits(self.preach[p]) if i != p]
            self._psupers_cache[p] = got
        return got

    def effective_constraints(self, c: int) -> list[tuple[ClassExpr, frozenset]]:
        """Complex superclass expressions reachable from c, with path support."""
        out = []
        for d in self.superclasses_refl(c):
            for expr, s in self.complex_direct.get(d, ()):
                out.append((expr, s | self.class_path_support(c, d)))
        return out

    def bottom_support(self, c: int) -> Optional[frozenset]:
        """Support for c being subsumed by Bottom, or None."""
        best: Optional[frozenset] = None
        for d in self.superclasses_refl(c):
            s = self.bottom_direct.get(d)
            if s is not None:
                best = _merge_support(best, s | self.class_path_support(c, d))
        return best


# ---------------------------------------------------------------------------
# SchemaClosure and materialization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SchemaClosure:
    """Deductive closure of the schema in name-pair form.

    `subsumptions` is the full transitive closure of the named-subclass
    digraph minus tautologies (no X<=X, nothing involving Top).
    """

    subsumptions: frozenset[tuple[str, str]]
    equivalence_classes: tuple[frozenset[str], ...]
    property_hierarchy: frozenset[tuple[str, str]]
    inverse_pairs: frozenset[tuple[str, str]]
    equivalent_properties: tuple[frozenset[str], ...]
    entailed_domains: dict[str, frozenset[ClassExpr]]
    entailed_ranges: dict[str, frozenset[ClassExpr]]
    entailed_characteristics: dict[str, frozenset[CharacteristicKind]]


def closure_from_index(idx: SchemaIndex) -> SchemaClosure:
    cg, pg = idx.cg, idx.pg
    subs = set()
    for a in range(len(cg)):
        m = idx.creach[a]
        b = 0
        while m:
            if m & 1 and b != a:
                subs.add((cg.names[a], cg.names[b]))
            b += 1
            m >>= 1
    comps, _ = cg.sccs()
    eq_classes = tuple(
        sorted(
            (frozenset(cg.names[i] for i in comp) for comp in comps if len(comp) > 1),
            key=sorted,
        )
    )
    phier = set()
    for a in range(len(pg)):
        m = idx.preach[a]
        b = 0
        while m:
            if m & 1 and b != a:
                phier.add((pg.names[a], pg.names[b]))
            b += 1
            m >>= 1
    pcomps, _ = pg.sccs()
    eq_props = tuple(
        sorted(
            (frozenset(pg.names[i] for i in comp) for comp in pcomps if len(comp) > 1),
            key=sorted,
        )
    )
    inv = set()
    for p, qs in idx.inverse.items():
        for q in qs:
            inv.add((pg.names[p], pg.names[q]))
    return SchemaClosure(
        subsumptions=frozenset(subs),
        equivalence_classes=eq_classes,
        property_hierarchy=frozenset(phier),
        inverse_pairs=frozenset(inv),
        equivalent_properties=eq_props,
        entailed_domains={
            pg.names[p]: frozenset(exprs) for p, exprs in idx.domains.items() if exprs
        },
        entailed_ranges={
            pg.names[p]: frozenset(exprs) for p, exprs in idx.ranges.items() if exprs
        },
        entailed_characteristics={
            pg.names[p]: frozenset(kinds) for p, kinds in idx.chars.items() if kinds
        },
    )


def materialize_schema(
    ontology: Ontology, index: Optional[SchemaIndex] = None
) -> tuple[SchemaClosure, frozenset[Axiom]]:
    """Compute the schema closure and the implicit axioms it adds.

    The inferred set carries provenance Inferred, contains no tautology
    (X<=X, X<=Top) and no axiom already asserted.
    """
    idx = index or SchemaIndex.build(ontology)
    closure = closure_from_index(idx)
    inferred: set[Axiom] = set()

    asserted_subs = {
        (ax.sub.entity.iri, ax.sup.entity.iri)
        for ax in ontology.tbox
        if isinstance(ax, SubClassOf) and isinstance(ax.sub, Named) and isinstance(ax.sup, Named)
    }
    for a, b in closure.subsumptions - asserted_subs:
        inferred.add(
            SubClassOf(Named(clazz(a)), Named(clazz(b)), provenance=Provenance.INFERRED)
        )

    for group in closure.equivalence_classes:
        ax = EquivalentClasses(
            tuple(Named(clazz(i)) for i in sorted(group)), provenance=Provenance.INFERRED
        )
        if ax not in ontology.tbox:
            inferred.add(ax)

    asserted_psubs = {
        (ax.sub.iri, ax.sup.iri)
        for ax in ontology.rbox
        if isinstance(ax, SubObjectPropertyOf)
    }
    for a, b in closure.property_hierarchy - asserted_psubs:
        inferred.add(
            SubObjectPropertyOf(obj_prop(a), obj_prop(b), provenance=Provenance.INFERRED)
        )

    for group in closure.equivalent_properties:
        ax = EquivalentObjectProperties(
            tuple(obj_prop(i) for i in sorted(group)), provenance=Provenance.INFERRED
        )
        if ax not in ontology.rbox:
            inferred.add(ax)

    asserted_domains = {
        (ax.property.iri, ax.expr)
        for ax in ontology.rbox
        if isinstance(ax, ObjectPropertyDomain)
    }
    for p, exprs in closure.entailed_domains.items():
        for expr in exprs:
            if (p, expr) not in asserted_domains:
                inferred.add(
                    ObjectPropertyDomain(obj_prop(p), expr, provenance=Provenance.INFERRED)
                )

    asserted_ranges = {
        (ax.property.iri, ax.expr)
        for ax in ontology.rbox
        if isinstance(ax, ObjectPropertyRange)
    }
    for p, exprs in closure.entailed_ranges.items():
        for expr in exprs:
            if (p, expr) not in asserted_ranges:
                inferred.add(
                    ObjectPropertyRange(obj_prop(p), expr, provenance=Provenance.INFERRED)
                )

    asserted_chars = {
        (ax.property.iri, ax.kind) for ax in ontology.rbox if isinstance(ax, Characteristic)
    }
    for p, kinds in closure.entailed_characteristics.items():
        for kind in kinds:
            if (p, kind) not in asserted_chars:
                inferred.add(Characteristic(obj_prop(p), kind, provenance=Provenance.INFERRED))

    return closure, frozenset(inferred)
