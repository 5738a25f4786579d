"""Quasi-stratified acyclicity of two-relation structures.

The forbidden pattern is a combined strongly connected subset (CSC
subset: strongly connected over the union of the two relations) in
which every member is touched by a precedence pair, so no member can
serve as the base of a nested stratum.  A member untouched by
precedence inside the subset is a pre-dominant.

Two deciders are provided.  The naive one scans all subsets and is the
oracle; the polynomial one peels pre-dominants off strongly connected
components:  any strongly connected subset lies inside one component,
any subset meeting the component's pre-dominants inherits one (being a
pre-dominant survives restriction), and the remaining subsets live in
the component minus its pre-dominants.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .relcore import Structure, _bits, add_prec, add_weak, is_relational, new_structure


@dataclass(frozen=True)
class CscWitness:
    """Certificate against quasi-stratified acyclicity."""

    subset: frozenset[str]
    note: str = "strongly connected over the combined relation, no pre-dominant"


def predominants(s: Structure, subset: Iterable[str]) -> frozenset[str]:
    """Members of the subset with no precedence pair to any member."""
    members = set(subset)
    if not members:
        raise ValueError("pre-dominants are defined for non-empty subsets")
    mask = 0
    for label in members:
        mask |= 1 << s.domain.position(label)
    out = []
    cols = s.prec.column_masks
    for i in _bits(mask):
        if s.prec.rows[i] & mask == 0 and cols[i] & mask == 0:
            out.append(s.domain.labels[i])
    return frozenset(out)


def _combined_rows(s: Structure) -> tuple[int, ...]:
    return tuple(a | b for a, b in zip(s.prec.rows, s.weak.rows))


def _scc_masks(rows: tuple[int, ...], members: int) -> list[int]:
    """Strongly connected components of the induced subgraph, as masks,
    in Tarjan emission order (reverse topological order)."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    counter = 0
    out: list[int] = []

    for root in _bits(members):
        if root in index:
            continue
        work: list[tuple[int, Iterable[int]]] = [(root, iter(_bits(rows[root] & members)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, successors = work[-1]
            advanced = False
            for w in successors:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(_bits(rows[w] & members))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = 0
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp |= 1 << w
                    if w == v:
                        break
                out.append(comp)
    return out


def csc_components(s: Structure, subset: Iterable[str] | None = None) -> list[frozenset[str]]:
    """Strongly connected components of the combined relation, in
    reverse topological order of the condensation."""
    if subset is None:
        members = (1 << len(s.domain)) - 1
    else:
        members = 0
        for label in subset:
            members |= 1 << s.domain.position(label)
    labels = s.domain.labels
    return [
        frozenset(labels[i] for i in _bits(mask))
        for mask in _scc_masks(_combined_rows(s), members)
    ]


def is_csc_subset(s: Structure, subset: Iterable[str]) -> bool:
    """True when the subset induces a strongly connected combined graph."""
    members = 0
    for label in subset:
        members |= 1 << s.domain.position(label)
    if members == 0:
        return False
    masks = _scc_masks(_combined_rows(s), members)
    return len(masks) == 1


def csc_subsets_naive(s: Structure, bound: int = 12) -> list[frozenset[str]]:
    """Every CSC subset, smallest first then lexicographic; the oracle."""
    n = len(s.domain)
    if n > bound:
        raise ValueError(f"domain size {n} exceeds subset-scan bound {bound}")
    rows = _combined_rows(s)
    out: list[frozenset[str]] = []
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            members = 0
            for i in combo:
                members |= 1 << i
            if len(_scc_masks(rows, members)) == 1:
                out.append(frozenset(s.domain.labels[i] for i in combo))
    return out


def qsa_witness_naive(s: Structure, bound: int = 12) -> CscWitness | None:
    """Smallest, lexicographically least CSC subset without pre-dominant."""
    if not is_relational(s):
        raise ValueError("structure is not relational")
    for subset in csc_subsets_naive(s, bound=bound):
        if not predominants(s, subset):
            return CscWitness(subset)
    return None


def is_qsa_naive(s: Structure, bound: int = 12) -> bool:
    return is_relational(s) and qsa_witness_naive(s, bound=bound) is None


def qsa_witness(s: Structure) -> CscWitness | None:
    """Polynomial decision; returns the failing component as witness."""
    if not is_relational(s):
        raise ValueError("structure is not relational")
    rows = _combined_rows(s)
    prec_rows = s.prec.rows
    prec_cols = s.prec.column_masks
    pending = [(1 << len(s.domain)) - 1]
    while pending:
        members = pending.pop()
        for comp in _scc_masks(rows, members):
            if comp.bit_count() < 2:
                continue
            dominants = 0
            for i in _bits(comp):
                if prec_rows[i] & comp == 0 and prec_cols[i] & comp == 0:
                    dominants |= 1 << i
            if dominants == 0:
                return CscWitness(frozenset(s.domain.labels[i] for i in _bits(comp)))
            pending.append(comp & ~dominants)
    return None


def is_qsa(s: Structure) -> bool:
    return is_relational(s) and qsa_witness(s) is None


@dataclass(frozen=True)
class LegalExtensions:
    """Which single-pair additions between x and y keep the structure acyclic."""

    prec_ok: bool
    weak_ok: bool


def legal_extensions(s: Structure, x: str, y: str) -> LegalExtensions:
    if not is_qsa(s):
        raise ValueError("legality probes need a quasi-stratified acyclic structure")
    if x == y:
        raise ValueError("legality probes need two distinct elements")
    s.domain.position(x)
    s.domain.position(y)
    return LegalExtensions(
        prec_ok=is_qsa(add_prec(s, x, y)),
        weak_ok=is_qsa(add_weak(s, x, y)),
    )


def random_qsa_structure(
    labels: Iterable[str], seed: int, density: float = 0.35
) -> Structure:
    """Random acyclic structure, deterministic per seed.

    Candidate pairs are visited in a seeded shuffle; each is kept with
    the given probability when the structure stays acyclic, so the
    result is acyclic by construction.
    """
    label_tuple = tuple(labels)
    rng = random.Random(seed)
    candidates = [
        (which, x, y)
        for which in ("prec", "weak")
        for x in label_tuple
        for y in label_tuple
        if x != y
    ]
    rng.shuffle(candidates)
    s = new_structure(label_tuple)
    for which, x, y in candidates:
        if rng.random() >= density:
            continue
        probe = add_prec(s, x, y) if which == "prec" else add_weak(s, x, y)
        if qsa_witness(probe) is None:
            s = probe
    return s
