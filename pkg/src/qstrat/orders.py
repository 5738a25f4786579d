"""Recognition of the classical order classes and their witness machinery.

The four classes form a chain: every total order is stratified, every
stratified order is interval, every interval order is partial.  Each
predicate is a literal quantifier scan of its axiom set; the companion
``*_violation`` function returns the first offending tuple, scanning in
domain declaration order so witnesses are deterministic.

The module also hosts the two constructive characterisations (stratified
partition and integer interval realization) and the forbidden-cycle
searches on two-relation structures that mirror the order classes.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .relcore import BinRel, Domain, Poset, Structure, _bits, is_relational

Violation = tuple[str, tuple[str, ...]]


def _prec_pairs(rel: BinRel) -> list[tuple[int, int]]:
    return [(i, j) for i, row in enumerate(rel.rows) for j in _bits(row)]


def partial_order_violation(rel: BinRel) -> Violation | None:
    labels = rel.domain.labels
    for i, row in enumerate(rel.rows):
        if row >> i & 1:
            return "po:1", (labels[i],)
    for i, row in enumerate(rel.rows):
        for j in _bits(row):
            missing = rel.rows[j] & ~row
            if missing:
                k = next(_bits(missing))
                return "po:2", (labels[i], labels[j], labels[k])
    return None


def total_order_violation(rel: BinRel) -> Violation | None:
    bad = partial_order_violation(rel)
    if bad is not None:
        return ("to:" + bad[0][3:], bad[1])
    labels = rel.domain.labels
    for i in range(len(labels)):
        for j in range(len(labels)):
            if i != j and not rel.holds_idx(i, j) and not rel.holds_idx(j, i):
                return "to:3", (labels[i], labels[j])
    return None


def stratified_order_violation(rel: BinRel) -> Violation | None:
    bad = partial_order_violation(rel)
    if bad is not None:
        return ("so:" + bad[0][3:], bad[1])
    labels = rel.domain.labels
    n = len(labels)
    for x in range(n):
        for y in range(n):
            if rel.holds_idx(x, y) or rel.holds_idx(y, x):
                continue
            for z in range(n):
                if rel.holds_idx(x, z) and not rel.holds_idx(y, z):
                    return "so:3", (labels[x], labels[y], labels[z])
                if rel.holds_idx(z, x) and not rel.holds_idx(z, y):
                    return "so:4", (labels[x], labels[y], labels[z])
    return None


def interval_order_violation(rel: BinRel) -> Violation | None:
    labels = rel.domain.labels
    for i, row in enumerate(rel.rows):
        if row >> i & 1:
            return "io:1", (labels[i],)
    pairs = _prec_pairs(rel)
    for x, y in pairs:
        for z, w in pairs:
            if not rel.holds_idx(x, w) and not rel.holds_idx(z, y):
                return "io:2", (labels[x], labels[y], labels[z], labels[w])
    return None


def is_partial_order(rel: BinRel) -> bool:
    return partial_order_violation(rel) is None


def is_total_order(rel: BinRel) -> bool:
    return total_order_violation(rel) is None


def is_stratified_order(rel: BinRel) -> bool:
    return stratified_order_violation(rel) is None


def is_interval_order(rel: BinRel) -> bool:
    return interval_order_violation(rel) is None


def stratified_partition(p: Poset) -> list[frozenset[str]] | None:
    """Strata of a stratified order, earliest first, or None.

    The strata are the equivalence classes of the incomparability
    relation; for a stratified order they are exactly the layers peeled
    off by repeatedly removing the minimal elements.
    """
    if stratified_order_violation(p.prec) is not None:
        return None
    labels = p.domain.labels
    n = len(labels)
    cols = p.prec.column_masks
    remaining = (1 << n) - 1
    strata: list[frozenset[str]] = []
    while remaining:
        layer = 0
        for i in _bits(remaining):
            if cols[i] & remaining == 0:
                layer |= 1 << i
        strata.append(frozenset(labels[i] for i in _bits(layer)))
        remaining &= ~layer
    return strata


def interval_realization(p: Poset) -> dict[str, tuple[int, int]] | None:
    """Integer interval endpoints realizing an interval order, or None.

    Begins are the inclusion ranks of the distinct predecessor sets,
    ends the ranks of the distinct successor sets; the construction is
    checked against the order before being returned.
    """
    if interval_order_violation(p.prec) is not None:
        return None
    labels = p.domain.labels
    n = len(labels)
    pred = p.prec.column_masks
    succ = p.prec.rows
    begin_rank = {m: r for r, m in enumerate(sorted(set(pred), key=lambda m: m.bit_count()))}
    end_rank = {m: r for r, m in enumerate(sorted(set(succ), key=lambda m: -m.bit_count()))}
    out = {labels[i]: (begin_rank[pred[i]], end_rank[succ[i]]) for i in range(n)}
    for i in range(n):
        b, e = out[labels[i]]
        assert b <= e, "interval realization produced a reversed interval"
        for j in range(n):
            assert p.prec.holds_idx(i, j) == (e < out[labels[j]][0]), (
                "interval realization disagrees with the order"
            )
    return out


def _combined_rows(s: Structure) -> tuple[int, ...]:
    return tuple(a | b for a, b in zip(s.prec.rows, s.weak.rows))


def _shortest_cycle(rows: tuple[int, ...], n: int) -> list[int] | None:
    best: list[int] | None = None
    for start in range(n):
        dist = {start: 0}
        parent: dict[int, int] = {}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in _bits(rows[u]):
                if v == start:
                    cycle = [start]
                    node = u
                    while node != start:
                        cycle.append(node)
                        node = parent[node]
                    cycle.append(start)
                    cycle = cycle[::-1]
                    if best is None or len(cycle) < len(best):
                        best = cycle
                    queue.clear()
                    break
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
    return best


def forbidden_cycle_total(s: Structure) -> list[str] | None:
    """Shortest cycle over the combined relation, as labels, or None.

    Any such cycle rules out a sequential (total order) execution.
    """
    if not is_relational(s):
        raise ValueError("structure is not relational")
    n = len(s.domain)
    cycle = _shortest_cycle(_combined_rows(s), n)
    if cycle is None:
        return None
    return [s.domain.labels[i] for i in cycle]


def forbidden_cycle_stratified(s: Structure) -> list[str] | None:
    """Shortest combined cycle containing a precedence step, or None."""
    if not is_relational(s):
        raise ValueError("structure is not relational")
    rows = _combined_rows(s)
    labels = s.domain.labels
    best: list[int] | None = None
    for u, v in _prec_pairs(s.prec):
        dist = {v: 0}
        parent: dict[int, int] = {}
        queue = deque([v])
        path: list[int] | None = None
        while queue:
            w = queue.popleft()
            if w == u:
                path = [u]
                while path[-1] != v:
                    path.append(parent[path[-1]])
                path.reverse()
                break
            for t in _bits(rows[w]):
                if t not in dist:
                    dist[t] = dist[w] + 1
                    parent[t] = w
                    queue.append(t)
        if path is not None:
            cycle = [u] + path
            if best is None or len(cycle) < len(best):
                best = cycle
    if best is None:
        return None
    return [labels[i] for i in best]


def forbidden_cycle_interval(s: Structure) -> list[str] | None:
    """Shortest combined closed walk with no two adjacent weak-only steps.

    Steps taken in the precedence relation are strong; a step available
    only through weak precedence is weak.  The walk is forbidden for
    interval executions when every pair of cyclically consecutive steps
    contains a strong one.  States (vertex, incoming step kind) turn the
    wrap-around condition into plain cycle search.
    """
    if not is_relational(s):
        raise ValueError("structure is not relational")
    n = len(s.domain)
    labels = s.domain.labels
    prec = s.prec.rows
    weak_only = tuple(s.weak.rows[i] & ~prec[i] for i in range(n))

    def successors(state: tuple[int, bool]) -> Iterable[tuple[int, bool]]:
        u, incoming_strong = state
        for v in _bits(prec[u]):
            yield v, True
        if incoming_strong:
            for v in _bits(weak_only[u]):
                yield v, False

    best: list[tuple[int, bool]] | None = None
    for start in [(v, strong) for v in range(n) for strong in (True, False)]:
        dist = {start: 0}
        parent: dict[tuple[int, bool], tuple[int, bool]] = {}
        queue = deque([start])
        found = False
        while queue and not found:
            state = queue.popleft()
            for nxt in successors(state):
                if nxt == start:
                    walk = [start, state]
                    while walk[-1] != start:
                        walk.append(parent[walk[-1]])
                    walk.reverse()
                    if best is None or len(walk) < len(best):
                        best = walk
                    found = True
                    break
                if nxt not in dist:
                    dist[nxt] = dist[state] + 1
                    parent[nxt] = state
                    queue.append(nxt)
    if best is None:
        return None
    return [labels[v] for v, _ in best]


def enumerate_posets(labels: Iterable[str], bound: int = 4) -> list[Poset]:
    """All partial orders over the labelled set, by brute force."""
    domain = Domain.of(labels)
    n = len(domain)
    if n > bound:
        raise ValueError(f"domain size {n} exceeds enumeration bound {bound}")
    slots = [(i, j) for i in range(n) for j in range(n) if i != j]
    out: list[Poset] = []
    for mask in range(1 << len(slots)):
        rows = [0] * n
        for k, (i, j) in enumerate(slots):
            if mask >> k & 1:
                rows[i] |= 1 << j
        rel = BinRel(domain, tuple(rows))
        if rel.is_transitive():
            out.append(Poset(domain, rel))
    return out
