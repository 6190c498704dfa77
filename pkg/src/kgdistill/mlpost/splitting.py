"""Train/valid/test splitting with coverage repair and inversion-leakage filtering.

Triples are only ever moved into train, never dropped, so the three parts
always partition the input set. Coverage: every individual and property
seen in valid/test also occurs in train. Leakage: no eval triple has its
reverse (same property or a declared/entailed inverse) sitting in train.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Iterable

from ..model import ObjectPropertyAssertion

Triple = tuple[str, str, str]


def _as_triple(a: ObjectPropertyAssertion) -> Triple:
    return (a.subject.iri, a.property.iri, a.object.iri)


@dataclass(frozen=True)
class Split:
    train: frozenset[ObjectPropertyAssertion]
    valid: frozenset[ObjectPropertyAssertion]
    test: frozenset[ObjectPropertyAssertion]
    seed: int
    ratios: tuple[float, float, float]
    moved_for_coverage: int = 0
    moved_for_leakage: int = 0

    def parts(self) -> dict[str, frozenset[ObjectPropertyAssertion]]:
        return {"train": self.train, "valid": self.valid, "test": self.test}

    def all_assertions(self) -> frozenset[ObjectPropertyAssertion]:
        return self.train | self.valid | self.test


def _validate_ratios(ratios) -> tuple[float, float, float]:
    if len(ratios) != 3 or any(r <= 0 for r in ratios):
        raise ValueError(f"need three positive ratios, got {ratios}")
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise ValueError(f"ratios must sum to 1, got {sum(ratios)}")
    return tuple(ratios)  # type: ignore[return-value]


class _Coverage:
    def __init__(self, train: Iterable[ObjectPropertyAssertion]):
        self.entities: set[str] = set()
        self.properties: set[str] = set()
        for a in train:
            self.add(a)

    def add(self, a: ObjectPropertyAssertion) -> None:
        self.entities.add(a.subject.iri)
        self.entities.add(a.object.iri)
        self.properties.add(a.property.iri)

    def covers(self, a: ObjectPropertyAssertion) -> bool:
        return (
            a.subject.iri in self.entities
            and a.object.iri in self.entities
            and a.property.iri in self.properties
        )


def split(
    assertions: Iterable[ObjectPropertyAssertion],
    ratios: tuple[float, float, float],
    seed: int,
) -> Split:
    """Seeded shuffle, partition by ratios, then repair training coverage."""
    ratios = _validate_ratios(ratios)
    pool = sorted(set(assertions), key=lambda a: a.key())
    rng = random.Random(seed)
    rng.shuffle(pool)

    n = len(pool)
    n_valid = int(n * ratios[1])
    n_test = int(n * ratios[2])
    n_train = n - n_valid - n_test
    train = pool[:n_train]
    valid = pool[n_train:n_train + n_valid]
    test = pool[n_train + n_valid:]

    cov = _Coverage(train)
    moved = 0
    kept_valid, kept_test = [], []
    for part, kept in ((valid, kept_valid), (test, kept_test)):
        for a in part:
            if cov.covers(a):
                kept.append(a)
            else:
                train.append(a)
                cov.add(a)
                moved += 1
    return Split(
        train=frozenset(train),
        valid=frozenset(kept_valid),
        test=frozenset(kept_test),
        seed=seed,
        ratios=ratios,
        moved_for_coverage=moved,
    )


def filter_inversion_leakage(
    split_in: Split, inverses: Iterable[tuple[str, str]]
) -> Split:
    """Move eval triples whose reverse sits in train; re-repair coverage.

    An eval triple <s,p,o> leaks when train holds <o,p,s>, or <o,q,s> with
    (p,q) a declared or entailed inverse pair. Moving triples into train can
    introduce new leaks or coverage gaps, so both passes loop to a joint
    fixpoint (each pass only grows train; termination is guaranteed).
    """
    inv: dict[str, set[str]] = {}
    for p, q in inverses:
        inv.setdefault(p, set()).add(q)
        inv.setdefault(q, set()).add(p)

    train = set(split_in.train)
    valid = set(split_in.valid)
    test = set(split_in.test)
    train_keys = {_as_triple(a) for a in train}
    moved_leak = 0
    moved_cov = 0

    def reverse_in_train(a: ObjectPropertyAssertion) -> bool:
        s, p, o = _as_triple(a)
        if (o, p, s) in train_keys:
            return True
        return any((o, q, s) in train_keys for q in inv.get(p, ()))

    changed = True
    while changed:
        changed = False
        for part in (valid, test):
            for a in sorted(part, key=lambda a: a.key()):
                if reverse_in_train(a):
                    part.discard(a)
                    train.add(a)
                    train_keys.add(_as_triple(a))
                    moved_leak += 1
                    changed = True
        cov = _Coverage(train)
        for part in (valid, test):
            for a in sorted(part, key=lambda a: a.key()):
                if not cov.covers(a):
                    part.discard(a)
                    train.add(a)
                    train_keys.add(_as_triple(a))
                    cov.add(a)
                    moved_cov += 1
                    changed = True

    return replace(
        split_in,
        train=frozenset(train),
        valid=frozenset(valid),
        test=frozenset(test),
        moved_for_coverage=split_in.moved_for_coverage + moved_cov,
        moved_for_leakage=split_in.moved_for_leakage + moved_leak,
    )
