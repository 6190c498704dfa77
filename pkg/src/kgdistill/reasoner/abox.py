"""ABox rule engine: consequence materialization, clash detection, realization.

Facts are interned to integers; every derived fact carries a support set of
asserted axioms so clashes come with replayable justifications. The Unique
Name Assumption is on by default: distinct IRIs denote distinct individuals
for the cardinality-style clash kinds (disable with una=False).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from ..model import (
    Axiom,
    Bottom,
    CharacteristicKind,
    ClassAssertion,
    ClassExpr,
    ComplementOf,
    ExactCardinality,
    IntersectionOf,
    MaxCardinality,
    Named,
    ObjectPropertyAssertion,
    Ontology,
    Provenance,
    Top,
    UnionOf,
    classify_box,
    Box,
    clazz,
    individual,
)
from .closure import SchemaIndex
from .justify import Justification, dedup_justifications, minimize_support


class ClashKind(str, Enum):
    DISJOINT_INSTANCE = "DisjointInstance"
    COMPLEMENT_INSTANCE = "ComplementInstance"
    IRREFLEXIVE_SELF_LOOP = "IrreflexiveSelfLoop"
    ASYMMETRIC_PAIR = "AsymmetricPair"
    FUNCTIONAL_FAN_OUT = "FunctionalFanOut"
    INVERSE_FUNCTIONAL_FAN_IN = "InverseFunctionalFanIn"
    MAX_CARDINALITY_VIOLATION = "MaxCardinalityViolation"
    BOTTOM_INSTANCE = "BottomInstance"


@dataclass(frozen=True)
class Clash:
    kind: ClashKind
    participants: tuple[str, ...]
    description: str
    justifications: tuple[Justification, ...]

    def sort_key(self) -> tuple:
        return (self.kind.value, self.participants)


class InconsistentInputError(ValueError):
    def __init__(self, clashes: list["Clash"]):
        super().__init__(f"input is inconsistent: {len(clashes)} clash(es) detected")
        self.clashes = clashes


_UNA_KINDS = {
    ClashKind.FUNCTIONAL_FAN_OUT,
    ClashKind.INVERSE_FUNCTIONAL_FAN_IN,
    ClashKind.MAX_CARDINALITY_VIOLATION,
}


class AboxEngine:
    def __init__(
        self,
        schema: Ontology,
        abox: Iterable[Axiom],
        *,
        una: bool = True,
        index: Optional[SchemaIndex] = None,
    ):
        self.idx = index or SchemaIndex.build(schema)
        self.una = una
        self.abox = sorted(
            (ax for ax in abox if classify_box(ax) is Box.ABOX), key=lambda a: a.key()
        )

        self._n_sch_classes = len(self.idx.cg)
        self._extra_classes: dict[str, int] = {}
        self._class_names: list[str] = list(self.idx.cg.names)
        self._n_sch_props = len(self.idx.pg)
        self._extra_props: dict[str, int] = {}
        self._prop_names: list[str] = list(self.idx.pg.names)

        self.ind_ids: dict[str, int] = {}
        self.ind_names: list[str] = []

        self.types: dict[int, set[int]] = {}
        self.type_support: dict[tuple[int, int], frozenset] = {}
        self.rel_support: dict[tuple[int, int, int], frozenset] = {}
        self.by_subj: dict[int, dict[int, set[int]]] = {}
        self.by_obj: dict[int, dict[int, set[int]]] = {}

        self.bottom_typed: dict[int, frozenset] = {}
        self.complement_typed: dict[tuple[int, int], frozenset] = {}
        self.ind_constraints: dict[int, list[tuple[ClassExpr, frozenset]]] = {}

        self.asserted_types: set[tuple[int, int]] = set()

        self._filler_index: dict[int, list[tuple[int, int, ClassExpr, frozenset]]] = {}
        for p, entries in self.idx.exists_left.items():
            for filler, e, sup in entries:
                for named in self._filler_named_ids(filler):
                    self._filler_index.setdefault(named, []).append((p, e, filler, sup))

        self._chains_by_prop: dict[int, list] = {}
        for chain, sup_p, s_ax in self.idx.chains:
            for i, link in enumerate(chain):
                self._chains_by_prop.setdefault(link, []).append((chain, sup_p, s_ax, i))

        self._rel_rules: dict[int, tuple] = {}
        self._type_rules: dict[int, list[tuple[int, frozenset]]] = {}

        self._queue: deque = deque()
        self._ran = False

    def _rules_for_prop(self, p: int) -> tuple:
        """Precompiled rule table for one property id."""
        got = self._rel_rules.get(p)
        if got is not None:
            return got
        if p >= self._n_sch_props:
            got = ((), (), None, None, (), (), (), ())
            self._rel_rules[p] = got
            return got
        idx = self.idx
        supers = tuple(
            (q, idx.prop_path_support(p, q)) for q in idx.superprops_strict(p)
        )
        invs = tuple(idx.inverse.get(p, {}).items())
        chars = idx.chars.get(p, {})
        sym = chars.get(CharacteristicKind.SYMMETRIC)
        trans = chars.get(CharacteristicKind.TRANSITIVE)
        doms = tuple(
            (self._cid(expr.entity.iri), s)
            for expr, s in idx.domains.get(p, {}).items()
            if isinstance(expr, Named)
        )
        rngs = tuple(
            (self._cid(expr.entity.iri), s)
            for expr, s in idx.ranges.get(p, {}).items()
            if isinstance(expr, Named)
        )
        exists = tuple(idx.exists_left.get(p, ()))
        chains = tuple(self._chains_by_prop.get(p, ()))
        got = (supers, invs, sym, trans, doms, rngs, exists, chains)
        self._rel_rules[p] = got
        return got

    def _supers_for_class(self, c: int) -> list[tuple[int, frozenset]]:
        got = self._type_rules.get(c)
        if got is None:
            got = [
                (d, self.idx.class_path_support(c, d))
                for d in self._class_supers_strict(c)
            ]
            self._type_rules[c] = got
        return got

    # -- interning ---------------------------------------------------------

    def _cid(self, iri: str) -> int:
        i = self.idx.cg.ids.get(iri)
        if i is not None:
            return i
        i = self._extra_classes.get(iri)
        if i is None:
            i = self._n_sch_classes + len(self._extra_classes)
            self._extra_classes[iri] = i
            self._class_names.append(iri)
        return i

    def _pid(self, iri: str) -> int:
        i = self.idx.pg.ids.get(iri)
        if i is not None:
            return i
        i = self._extra_props.get(iri)
        if i is None:
            i = self._n_sch_props + len(self._extra_props)
            self._extra_props[iri] = i
            self._prop_names.append(iri)
        return i

    def _iid(self, iri: str) -> int:
        i = self.ind_ids.get(iri)
        if i is None:
            i = len(self.ind_names)
            self.ind_ids[iri] = i
            self.ind_names.append(iri)
        return i

    def _class_supers_strict(self, c: int) -> list[int]:
        if c < self._n_sch_classes:
            return self.idx.superclasses_strict(c)
        return []

    def _prop_supers_strict(self, p: int) -> list[int]:
        if p < self._n_sch_props:
            return self.idx.superprops_strict(p)
        return []

    def _filler_named_ids(self, filler: ClassExpr) -> list[int]:
        if isinstance(filler, Named):
            return [self._cid(filler.entity.iri)]
        if isinstance(filler, UnionOf):
            out = []
            for op in filler.operands:
                if isinstance(op, Named):
                    out.append(self._cid(op.entity.iri))
            return out
        return []

    # -- fact insertion ----------------------------------------------------

    def _add_type(self, x: int, c: int, support: frozenset) -> None:
        have = self.types.setdefault(x, set())
        if c in have:
            return
        have.add(c)
        self.type_support[(x, c)] = support
        self._queue.append((1, x, c))

    def _add_rel(self, p: int, x: int, y: int, support: frozenset) -> None:
        key = (p, x, y)
        if key in self.rel_support:
            return
        self.rel_support[key] = support
        self.by_subj.setdefault(p, {}).setdefault(x, set()).add(y)
        self.by_obj.setdefault(p, {}).setdefault(y, set()).add(x)
        self._queue.append((0, p, x, y))

    def _seed(self) -> None:
        for ax in self.abox:
            sup = frozenset([ax])
            if isinstance(ax, ObjectPropertyAssertion):
                p = self._pid(ax.property.iri)
                s = self._iid(ax.subject.iri)
                o = self._iid(ax.object.iri)
                self._add_rel(p, s, o, sup)
            elif isinstance(ax, ClassAssertion):
                x = self._iid(ax.individual.iri)
                self._seed_typing(x, ax.expr, sup)

    def _seed_typing(
        self, x: int, expr: ClassExpr, sup: frozenset, top_level: bool = True
    ) -> None:
        if isinstance(expr, Named):
            c = self._cid(expr.entity.iri)
            if top_level:
                # only a directly asserted named typing counts as asserted;
                # operands of an intersection are derived facts
                self.asserted_types.add((x, c))
            self._add_type(x, c, sup)
        elif isinstance(expr, IntersectionOf):
            for op in expr.operands:
                self._seed_typing(x, op, sup, top_level=False)
        elif isinstance(expr, Bottom):
            if x not in self.bottom_typed:
                self.bottom_typed[x] = sup
        elif isinstance(expr, ComplementOf) and isinstance(expr.operand, Named):
            key = (x, self._cid(expr.operand.entity.iri))
            self.complement_typed.setdefault(key, sup)
        elif isinstance(expr, (MaxCardinality, ExactCardinality)):
            self.ind_constraints.setdefault(x, []).append((expr, sup))
        # Top and remaining complex typings carry no rule in this fragment

    # -- fixpoint ----------------------------------------------------------

    def run(self) -> "AboxEngine":
        if self._ran:
            return self
        self._ran = True
        self._seed()
        queue = self._queue
        rel_support = self.rel_support
        type_support = self.type_support
        while queue:
            fact = queue.popleft()
            if fact[0] == 0:
                _, p, x, y = fact
                s = rel_support[(p, x, y)]
                supers, invs, sym, trans, doms, rngs, exists, chains = self._rules_for_prop(p)
                for q, s_q in supers:
                    self._add_rel(q, x, y, s | s_q)
                for q, s_inv in invs:
                    self._add_rel(q, y, x, s | s_inv)
                if sym is not None:
                    self._add_rel(p, y, x, s | sym)
                if trans is not None:
                    for z in tuple(self.by_subj.get(p, {}).get(y, ())):
                        self._add_rel(p, x, z, s | rel_support[(p, y, z)] | trans)
                    for w in tuple(self.by_obj.get(p, {}).get(x, ())):
                        self._add_rel(p, w, y, s | rel_support[(p, w, x)] | trans)
                for c, s_d in doms:
                    self._add_type(x, c, s | s_d)
                for c, s_r in rngs:
                    self._add_type(y, c, s | s_r)
                for filler, e, s_ax in exists:
                    if isinstance(filler, Top):
                        self._add_type(x, e, s | s_ax)
                    else:
                        for d in self._filler_named_ids(filler):
                            if d in self.types.get(y, ()):
                                self._add_type(x, e, s | s_ax | type_support[(y, d)])
                                break
                if chains:
                    self._apply_chains(p, x, y, s, chains)
            else:
                _, x, c = fact
                s = type_support[(x, c)]
                for d, s_d in self._supers_for_class(c):
                    self._add_type(x, d, s | s_d)
                # the new type (x, c) may satisfy an existential filler: the
                # triggering fact's own support justifies the filler side
                for p, e, filler, s_ax in self._filler_index.get(c, ()):
                    for w in tuple(self.by_obj.get(p, {}).get(x, ())):
                        self._add_type(
                            w, e, self.rel_support[(p, w, x)] | s_ax | s
                        )
        return self

    def _apply_chains(self, p: int, x: int, y: int, s: frozenset, entries) -> None:
        for chain, sup_p, s_ax, i in entries:
            lefts = [(x, s)]
            for j in range(i - 1, -1, -1):
                new_lefts = []
                for start, acc in lefts:
                    for w in self.by_obj.get(chain[j], {}).get(start, ()):
                        new_lefts.append(
                            (w, acc | self.rel_support[(chain[j], w, start)])
                        )
                lefts = new_lefts
                if not lefts:
                    break
            if not lefts:
                continue
            rights = [(y, frozenset())]
            for j in range(i + 1, len(chain)):
                new_rights = []
                for end, acc in rights:
                    for z in self.by_subj.get(chain[j], {}).get(end, ()):
                        new_rights.append(
                            (z, acc | self.rel_support[(chain[j], end, z)])
                        )
                rights = new_rights
                if not rights:
                    break
            for start, ls in lefts:
                for end, rs in rights:
                    self._add_rel(sup_p, start, end, ls | rs | s_ax)

    # -- clash detection -----------------------------------------------------

    def clashes(self, minimize: bool = True) -> list[Clash]:
        self.run()
        idx = self.idx
        found: list[tuple[ClashKind, tuple[str, ...], str, frozenset]] = []

        inds_by_type: dict[int, set[int]] = {}
        for x, cs in self.types.items():
            for c in cs:
                inds_by_type.setdefault(c, set()).add(x)

        def name(x: int) -> str:
            return self.ind_names[x]

        for a, b, s_pair in idx.disjoint_pairs:
            both = inds_by_type.get(a, set()) & inds_by_type.get(b, set())
            for x in sorted(both):
                found.append(
                    (
                        ClashKind.DISJOINT_INSTANCE,
                        (name(x),),
                        f"{name(x)} is an instance of disjoint classes "
                        f"{idx.cg.names[a]} and {idx.cg.names[b]}",
                        s_pair | self.type_support[(x, a)] | self.type_support[(x, b)],
                    )
                )

        for a, e, s_pair in idx.complement_pairs:
            both = inds_by_type.get(a, set()) & inds_by_type.get(e, set())
            for x in sorted(both):
                found.append(
                    (
                        ClashKind.COMPLEMENT_INSTANCE,
                        (name(x),),
                        f"{name(x)} is an instance of {self._class_names[e]} and of a "
                        f"class subsumed by its complement",
                        s_pair | self.type_support[(x, a)] | self.type_support[(x, e)],
                    )
                )
        for (x, e), s_assert in sorted(self.complement_typed.items()):
            if e in self.types.get(x, ()):
                found.append(
                    (
                        ClashKind.COMPLEMENT_INSTANCE,
                        (name(x),),
                        f"{name(x)} is asserted in the complement of {self._class_names[e]}",
                        s_assert | self.type_support[(x, e)],
                    )
                )

        for p in range(self._n_sch_props):
            chars = idx.chars.get(p, {})
            pname = idx.pg.names[p]
            irr = chars.get(CharacteristicKind.IRREFLEXIVE)
            if irr is not None:
                for x, ys in sorted(self.by_subj.get(p, {}).items()):
                    if x in ys:
                        found.append(
                            (
                                ClashKind.IRREFLEXIVE_SELF_LOOP,
                                (name(x),),
                                f"irreflexive {pname} loops on {name(x)}",
                                irr | self.rel_support[(p, x, x)],
                            )
                        )
            asym = chars.get(CharacteristicKind.ASYMMETRIC)
            if asym is not None:
                for x, ys in sorted(self.by_subj.get(p, {}).items()):
                    for y in sorted(ys):
                        if y < x or x not in self.by_subj.get(p, {}).get(y, ()):
                            continue
                        found.append(
                            (
                                ClashKind.ASYMMETRIC_PAIR,
                                tuple(sorted((name(x), name(y)))),
                                f"asymmetric {pname} holds both ways between "
                                f"{name(x)} and {name(y)}",
                                asym
                                | self.rel_support[(p, x, y)]
                                | self.rel_support[(p, y, x)],
                            )
                        )
            if self.una:
                fun = chars.get(CharacteristicKind.FUNCTIONAL)
                if fun is not None:
                    for x, ys in sorted(self.by_subj.get(p, {}).items()):
                        if len(ys) >= 2:
                            w1, w2 = sorted(ys)[:2]
                            found.append(
                                (
                                    ClashKind.FUNCTIONAL_FAN_OUT,
                                    (name(x),) + tuple(name(y) for y in sorted(ys)),
                                    f"functional {pname} fans out from {name(x)}",
                                    fun
                                    | self.rel_support[(p, x, w1)]
                                    | self.rel_support[(p, x, w2)],
                                )
                            )
                ifun = chars.get(CharacteristicKind.INVERSE_FUNCTIONAL)
                if ifun is not None:
                    for y, xs in sorted(self.by_obj.get(p, {}).items()):
                        if len(xs) >= 2:
                            w1, w2 = sorted(xs)[:2]
                            found.append(
                                (
                                    ClashKind.INVERSE_FUNCTIONAL_FAN_IN,
                                    (name(y),) + tuple(name(x) for x in sorted(xs)),
                                    f"inverse-functional {pname} fans into {name(y)}",
                                    ifun
                                    | self.rel_support[(p, w1, y)]
                                    | self.rel_support[(p, w2, y)],
                                )
                            )

        if self.una:
            found.extend(self._cardinality_clashes(inds_by_type))

        for x, s in sorted(self.bottom_typed.items()):
            found.append(
                (
                    ClashKind.BOTTOM_INSTANCE,
                    (name(x),),
                    f"{name(x)} is asserted to be in owl:Nothing",
                    s,
                )
            )
        for c in range(self._n_sch_classes):
            s_bot = idx.bottom_support(c)
            if s_bot is None:
                continue
            for x in sorted(inds_by_type.get(c, ())):
                found.append(
                    (
                        ClashKind.BOTTOM_INSTANCE,
                        (name(x),),
                        f"{name(x)} has unsatisfiable type {idx.cg.names[c]}",
                        s_bot | self.type_support[(x, c)],
                    )
                )

        return self._finalize_clashes(found, minimize)

    def _cardinality_clashes(self, inds_by_type) -> list:
        out = []
        constraints: list[tuple[int, ClassExpr, frozenset]] = []
        for c in range(self._n_sch_classes):
            for expr, s in self.idx.effective_constraints(c):
                if isinstance(expr, (MaxCardinality, ExactCardinality)):
                    constraints.append((c, expr, s))
        per_ind: list[tuple[int, ClassExpr, frozenset]] = []  # (x, expr, support)
        for x, entries in self.ind_constraints.items():
            for expr, s in entries:
                per_ind.append((x, expr, s))

        def check(x: int, expr, base_support: frozenset):
            p = self.idx.pg.ids.get(expr.property.iri)
            if p is None:
                return
            ys = self.by_subj.get(p, {}).get(x, set())
            matching: list[tuple[int, frozenset]] = []
            for y in sorted(ys):
                if isinstance(expr.filler, Top):
                    matching.append((y, frozenset()))
                else:
                    for d in self._filler_named_ids(expr.filler):
                        if d in self.types.get(y, ()):
                            matching.append((y, self.type_support[(y, d)]))
                            break
            if len(matching) > expr.n:
                sup = base_support
                for y, ts in matching[: expr.n + 1]:
                    sup = sup | self.rel_support[(p, x, y)] | ts
                out.append(
                    (
                        ClashKind.MAX_CARDINALITY_VIOLATION,
                        (self.ind_names[x],) + tuple(self.ind_names[y] for y, _ in matching),
                        f"{self.ind_names[x]} has {len(matching)} {expr.property.iri} "
                        f"successors, at most {expr.n} allowed",
                        sup,
                    )
                )

        for c, expr, s in constraints:
            for x in sorted(inds_by_type.get(c, ())):
                check(x, expr, s | self.type_support[(x, c)])
        for x, expr, s in per_ind:
            check(x, expr, s)
        return out

    def _finalize_clashes(self, found, minimize: bool) -> list[Clash]:
        grouped: dict[tuple, list] = {}
        for kind, participants, desc, support in found:
            grouped.setdefault((kind, participants), []).append((desc, support))
        clashes: list[Clash] = []
        for (kind, participants), entries in sorted(
            grouped.items(), key=lambda kv: (kv[0][0].value, kv[0][1])
        ):
            desc = entries[0][0]
            justs = []
            for _, support in entries:
                if minimize:
                    support = minimize_support(
                        support, lambda sub: _replay_has_clash(sub, kind, participants, self.una)
                    )
                justs.append(
                    Justification(support, f"clash:{kind.value}:{','.join(participants)}")
                )
            clashes.append(
                Clash(
                    kind=kind,
                    participants=participants,
                    description=desc,
                    justifications=dedup_justifications(justs),
                )
            )
        return clashes

    # -- realization -------------------------------------------------------

    def realized(self) -> frozenset[ClassAssertion]:
        self.run()
        out = []
        for (x, c), _ in self.type_support.items():
            if (x, c) in self.asserted_types:
                continue
            out.append(
                ClassAssertion(
                    individual(self.ind_names[x]),
                    Named(clazz(self._class_names[c])),
                    provenance=Provenance.INFERRED,
                )
            )
        return frozenset(out)


def _replay_has_clash(
    support: frozenset, kind: ClashKind, participants: tuple[str, ...], una: bool
) -> bool:
    schema_axioms = [ax for ax in support if classify_box(ax) is not Box.ABOX]
    abox_axioms = [ax for ax in support if classify_box(ax) is Box.ABOX]
    engine = AboxEngine(Ontology.from_axioms(schema_axioms), abox_axioms, una=una)
    for clash in engine.clashes(minimize=False):
        if clash.kind == kind and clash.participants == participants:
            return True
    return False


def check_consistency(
    schema: Ontology,
    abox: Iterable[Axiom],
    *,
    una: bool = True,
    minimize: bool = True,
    index: Optional[SchemaIndex] = None,
) -> list[Clash]:
    """All clashes the rule engine finds in schema+abox, with justifications."""
    return AboxEngine(schema, abox, una=una, index=index).clashes(minimize=minimize)


def realize(
    schema: Ontology,
    abox: Iterable[Axiom],
    *,
    una: bool = True,
    index: Optional[SchemaIndex] = None,
) -> frozenset[ClassAssertion]:
    """Implicit named class assertions of a consistent (schema, abox) pair."""
    engine = AboxEngine(schema, abox, una=una, index=index)
    clash_list = engine.clashes(minimize=False)
    if clash_list:
        raise InconsistentInputError(clash_list)
    return engine.realized()
