"""Independent test oracles: brute-force implementations kept deliberately
separate from the library code paths they check."""

from __future__ import annotations

import random

import numpy as np


def warshall_pairs(n: int, edges: set[tuple[int, int]]) -> set[tuple[int, int]]:
    """Transitive closure via Warshall on a boolean matrix, reflexive pairs dropped."""
    m = np.zeros((n, n), dtype=bool)
    for a, b in edges:
        m[a, b] = True
    for k in range(n):
        m |= np.outer(m[:, k], m[k, :])
    return {(int(i), int(j)) for i, j in zip(*np.nonzero(m)) if i != j}


def random_dag(rng: random.Random, max_nodes: int = 200, max_edges: int = 600):
    n = rng.randint(2, max_nodes)
    order = list(range(n))
    rng.shuffle(order)
    m = rng.randint(0, max_edges)
    edges = set()
    for _ in range(m):
        i, j = rng.sample(range(n), 2)
        if order[i] < order[j]:
            edges.add((i, j))
        else:
            edges.add((j, i))
    return n, edges


def random_digraph(rng: random.Random, max_nodes: int = 60, max_edges: int = 200):
    n = rng.randint(2, max_nodes)
    m = rng.randint(0, max_edges)
    edges = set()
    for _ in range(m):
        i, j = rng.sample(range(n), 2)
        edges.add((i, j))
    return n, edges


def naive_module_fixpoint(axiom_sigs: list[frozenset], seed: frozenset) -> set[int]:
    """Quadratic repeat-scan fixpoint for signature-based module extraction."""
    sigma = set(seed)
    module: set[int] = set()
    while True:
        before = len(sigma)
        for i, sig in enumerate(axiom_sigs):
            if sig & sigma:
                module.add(i)
        for i in module:
            sigma |= axiom_sigs[i]
        if len(sigma) == before:
            return module


def brute_force_degree(assertions: list[tuple[str, str, str]]) -> dict[str, int]:
    deg: dict[str, int] = {}
    for s, _, o in assertions:
        deg[s] = deg.get(s, 0) + 1
        deg[o] = deg.get(o, 0) + 1
    return deg


def brute_force_filter(
    assertions: list[tuple[str, str, str]], k: int, unsat_props: set[str]
) -> set[tuple[str, str, str]]:
    deg = brute_force_degree(assertions)
    return {
        (s, p, o)
        for s, p, o in assertions
        if deg[s] >= k and deg[o] >= k and p not in unsat_props
    }


def coverage_violations(train, evals) -> list:
    ents = {t[0] for t in train} | {t[2] for t in train}
    props = {t[1] for t in train}
    return [t for t in evals if t[0] not in ents or t[2] not in ents or t[1] not in props]


def leakage_pairs(train, evals, inverse_pairs) -> list:
    train_set = set(train)
    inv = {}
    for p, q in inverse_pairs:
        inv.setdefault(p, set()).add(q)
        inv.setdefault(q, set()).add(p)
    hits = []
    for s, p, o in evals:
        if (o, p, s) in train_set:
            hits.append((s, p, o))
            continue
        for q in inv.get(p, ()):
            if (o, q, s) in train_set:
                hits.append((s, p, o))
                break
    return hits
