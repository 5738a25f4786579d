"""Quasi-stratified orders.

The class sits strictly between the stratified and the interval orders.
It is generated from the empty order by two constructions: adding an
isolated element (a "base" event simultaneous with everything present)
and sequential composition.  Equivalently, an irreflexive relation is
quasi-stratified exactly when every pair of precedence pairs
(x, y) and (z, t) satisfies one of five resolutions:

    x < t and z < y       (the interval-order resolution)
    x < z and x < t
    z < x and z < y
    t < y and z < y
    y < t and x < t

Each nonempty quasi-stratified order factorizes uniquely into strata,
where a stratum is an order containing at least one element unordered
with everything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .relcore import BinRel, Domain, Poset, _bits, reindex_poset


@dataclass(frozen=True, eq=False)
class QsOrder:
    """A quasi-stratified order; wraps the underlying partial order."""

    poset: Poset

    @property
    def domain(self) -> Domain:
        return self.poset.domain

    @property
    def prec(self) -> BinRel:
        return self.poset.prec

    def __len__(self) -> int:
        return len(self.poset.domain)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QsOrder):
            return NotImplemented
        return self.poset == other.poset

    def __hash__(self) -> int:
        return hash(self.poset)


def qs_order_violation(rel: BinRel) -> tuple[str, ...] | None:
    """First witness against the axioms: (x,) for a self-loop, else a
    quadruple (x, y, z, t) with x<y and z<t admitting no resolution."""
    labels = rel.domain.labels
    rows = rel.rows
    for i, row in enumerate(rows):
        if row >> i & 1:
            return (labels[i],)
    pairs = [(i, j) for i, row in enumerate(rows) for j in _bits(row)]
    for x, y in pairs:
        for z, t in pairs:
            if rows[x] >> t & 1 and rows[z] >> y & 1:
                continue
            if rows[x] >> z & 1 and rows[x] >> t & 1:
                continue
            if rows[z] >> x & 1 and rows[z] >> y & 1:
                continue
            if rows[t] >> y & 1 and rows[z] >> y & 1:
                continue
            if rows[y] >> t & 1 and rows[x] >> t & 1:
                continue
            return (labels[x], labels[y], labels[z], labels[t])
    return None


def is_qs_order(rel: BinRel) -> bool:
    return qs_order_violation(rel) is None


def qso_from_poset(p: Poset) -> QsOrder:
    """Validated constructor; raises with the violating tuple otherwise."""
    witness = qs_order_violation(p.prec)
    if witness is not None:
        raise ValueError(f"not a quasi-stratified order, witness {witness}")
    return QsOrder(p)


def qso_empty() -> QsOrder:
    domain = Domain(())
    return QsOrder(Poset(domain, BinRel.empty(domain)))


def qso_add_isolated(q: QsOrder, x: str) -> QsOrder:
    """Add x unordered with every existing element."""
    if x in q.domain:
        raise ValueError(f"label already in domain: {x!r}")
    domain = Domain(q.domain.labels + (x,))
    return QsOrder(Poset(domain, BinRel(domain, q.prec.rows + (0,))))


def qso_seq_compose(q: QsOrder, r: QsOrder) -> QsOrder:
    """Sequential composition: everything in q precedes everything in r."""
    if q.domain.label_set & r.domain.label_set:
        raise ValueError("sequential composition requires disjoint domains")
    domain = Domain(q.domain.labels + r.domain.labels)
    nq = len(q.domain)
    tail = ((1 << len(r.domain)) - 1) << nq
    rows = tuple(row | tail for row in q.prec.rows) + tuple(row << nq for row in r.prec.rows)
    return QsOrder(Poset(domain, BinRel(domain, rows)))


def stratum_base(q: QsOrder) -> frozenset[str]:
    """Elements with no precedence relation to any other element."""
    cols = q.prec.column_masks
    return frozenset(
        label
        for i, label in enumerate(q.domain.labels)
        if q.prec.rows[i] == 0 and cols[i] == 0
    )


def is_qso_stratum(q: QsOrder) -> bool:
    return len(q) > 0 and bool(stratum_base(q))


def qso_projection(q: QsOrder, subset: Iterable[str]) -> QsOrder:
    """Restriction to a label subset; the class is closed under this."""
    prec = q.prec.restrict(subset)
    out = QsOrder(Poset(prec.domain, prec))
    assert qs_order_violation(out.prec) is None
    return out


def factorize_strata(q: QsOrder) -> list[QsOrder]:
    """The unique factorization of a nonempty order into strata.

    Sequential cut points force every element before the cut ahead of
    every element after it in any topological sort, so scanning the
    prefixes of one fixed sort finds them all; cutting at every one
    gives the finest, hence the stratum, factorization.
    """
    n = len(q)
    if n == 0:
        raise ValueError("cannot factorize the empty order")
    cols = q.prec.column_masks
    order = sorted(range(n), key=lambda i: (cols[i].bit_count(), i))
    full = (1 << n) - 1
    segments: list[list[int]] = []
    segment: list[int] = []
    prefix = 0
    for i in order:
        segment.append(i)
        prefix |= 1 << i
        rest = full & ~prefix
        if rest == 0 or all(rest & ~q.prec.rows[j] == 0 for j in segment):
            segments.append(segment)
            segment = []
            continue
    factors = []
    for seg in segments:
        factor = qso_projection(q, [q.domain.labels[i] for i in seg])
        if not is_qso_stratum(factor):
            raise ValueError("factor is not a stratum; input is not quasi-stratified")
        factors.append(factor)
    return factors


def enumerate_qs_orders(labels: Iterable[str], bound: int = 6) -> list[QsOrder]:
    """Every quasi-stratified order over the labelled set, duplicate-free.

    Generated through the stratum-tree encoding, whose decoding map is a
    bijection onto the nonempty orders of the class.
    """
    domain = Domain.of(labels)
    if len(domain) > bound:
        raise ValueError(f"domain size {len(domain)} exceeds enumeration bound {bound}")
    return list(_enumerate_cached(domain.labels))


def _enumerate_cached(labels: tuple[str, ...]) -> tuple[QsOrder, ...]:
    from . import qsseq

    domain = Domain(labels)
    if not labels:
        return (qso_empty(),)
    cached = _ENUM_CACHE.get(labels)
    if cached is None:
        cached = tuple(
            QsOrder(reindex_poset(qsseq.seq_to_order(s).poset, domain))
            for s in qsseq.enumerate_qs_seqs(labels, bound=len(labels))
        )
        _ENUM_CACHE[labels] = cached
    return cached


_ENUM_CACHE: dict[tuple[str, ...], tuple[QsOrder, ...]] = {}
