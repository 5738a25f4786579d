"""Finite labelled domains, binary relations, and two-relation structures.

A structure pairs a precedence relation ("earlier than") with a weak
precedence relation ("not later than") over a shared domain of labelled
events.  Relations are stored as one successor bitmask per element, so
subset tests, unions and intersections are single word operations per
row; the intended scale is a few dozen events.

Values are immutable and safe to share.  Every operation returns a new
value.  Equality on relations, structures and posets is semantic: two
values are equal when they have the same label set and relate the same
label pairs, regardless of the order in which labels were declared.
Declaration order still matters for iteration and serialisation, which
follow it deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Domain:
    """Ordered collection of distinct, non-empty event labels."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        for label in self.labels:
            if not isinstance(label, str) or not label:
                raise ValueError(f"labels must be non-empty strings, got {label!r}")
        if len(set(self.labels)) != len(self.labels):
            seen: set[str] = set()
            for label in self.labels:
                if label in seen:
                    raise ValueError(f"duplicate label: {label!r}")
                seen.add(label)

    @classmethod
    def of(cls, labels: Iterable[str]) -> Domain:
        return cls(tuple(labels))

    @cached_property
    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def label_set(self) -> frozenset[str]:
        return frozenset(self.labels)

    def position(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise ValueError(f"unknown label: {label!r}") from None

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self.index


@dataclass(frozen=True, eq=False)
class BinRel:
    """Binary relation over a domain, one successor bitmask per element."""

    domain: Domain
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.domain)
        if len(self.rows) != n:
            raise ValueError("row count does not match domain size")
        full = (1 << n) - 1
        if any(row & ~full for row in self.rows):
            raise ValueError("relation references positions outside the domain")

    @classmethod
    def empty(cls, domain: Domain) -> BinRel:
        return cls(domain, (0,) * len(domain))

    @classmethod
    def from_pairs(cls, domain: Domain, pairs: Iterable[tuple[str, str]]) -> BinRel:
        rows = [0] * len(domain)
        for x, y in pairs:
            rows[domain.position(x)] |= 1 << domain.position(y)
        return cls(domain, tuple(rows))

    def holds(self, x: str, y: str) -> bool:
        return bool(self.rows[self.domain.position(x)] >> self.domain.position(y) & 1)

    def holds_idx(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def pairs(self) -> Iterator[tuple[str, str]]:
        """Related label pairs in row-major declaration order."""
        labels = self.domain.labels
        for i, row in enumerate(self.rows):
            for j in _bits(row):
                yield labels[i], labels[j]

    @cached_property
    def label_pairs(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.pairs())

    @cached_property
    def column_masks(self) -> tuple[int, ...]:
        cols = [0] * len(self.domain)
        for i, row in enumerate(self.rows):
            for j in _bits(row):
                cols[j] |= 1 << i
        return tuple(cols)

    def count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def with_pair(self, x: str, y: str) -> BinRel:
        """Relation with (x, y) added; a no-op when already present."""
        i, j = self.domain.position(x), self.domain.position(y)
        if self.rows[i] >> j & 1:
            return self
        rows = list(self.rows)
        rows[i] |= 1 << j
        return BinRel(self.domain, tuple(rows))

    def union(self, other: BinRel) -> BinRel:
        if other.domain is not self.domain and other.domain.labels != self.domain.labels:
            raise ValueError("relation union requires identical domains")
        return BinRel(self.domain, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def intersection(self, other: BinRel) -> BinRel:
        if other.domain is not self.domain and other.domain.labels != self.domain.labels:
            raise ValueError("relation intersection requires identical domains")
        return BinRel(self.domain, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def is_subrelation_of(self, other: BinRel) -> bool:
        if other.domain.labels == self.domain.labels:
            return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))
        return self.label_pairs <= other.label_pairs

    def restrict(self, labels: Iterable[str]) -> BinRel:
        """Restriction to a sub-domain, keeping declaration order."""
        wanted = set(labels)
        for label in wanted:
            self.domain.position(label)
        kept = [i for i, label in enumerate(self.domain.labels) if label in wanted]
        sub = Domain(tuple(self.domain.labels[i] for i in kept))
        rows = []
        for i in kept:
            row = 0
            for new_j, old_j in enumerate(kept):
                if self.rows[i] >> old_j & 1:
                    row |= 1 << new_j
            rows.append(row)
        return BinRel(sub, tuple(rows))

    def aligned_to(self, domain: Domain) -> BinRel:
        """The same relation re-indexed over a domain with equal label set."""
        if domain.labels == self.domain.labels:
            return BinRel(domain, self.rows)
        if domain.label_set != self.domain.label_set:
            raise ValueError("cannot align relations over different label sets")
        return BinRel.from_pairs(domain, self.pairs())

    def is_irreflexive(self) -> bool:
        return all(row >> i & 1 == 0 for i, row in enumerate(self.rows))

    def is_transitive(self) -> bool:
        for row in self.rows:
            for j in _bits(row):
                if self.rows[j] & ~row:
                    return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinRel):
            return NotImplemented
        if self.domain.labels == other.domain.labels:
            return self.rows == other.rows
        return (
            self.domain.label_set == other.domain.label_set
            and self.label_pairs == other.label_pairs
        )

    def __hash__(self) -> int:
        return hash((self.domain.label_set, self.label_pairs))


@dataclass(frozen=True, eq=False)
class Structure:
    """Two-relation structure: precedence and weak precedence over one domain."""

    domain: Domain
    prec: BinRel
    weak: BinRel

    def __post_init__(self) -> None:
        if self.prec.domain.labels != self.domain.labels or self.weak.domain.labels != self.domain.labels:
            raise ValueError("both relations must share the structure's domain")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Structure):
            return NotImplemented
        return (
            self.domain.label_set == other.domain.label_set
            and self.prec == other.prec
            and self.weak == other.weak
        )

    def __hash__(self) -> int:
        return hash((self.domain.label_set, self.prec, self.weak))


@dataclass(frozen=True, eq=False)
class Poset:
    """Partial order: an irreflexive, transitive precedence relation."""

    domain: Domain
    prec: BinRel

    def __post_init__(self) -> None:
        if self.prec.domain.labels != self.domain.labels:
            raise ValueError("relation must share the poset's domain")
        if not self.prec.is_irreflexive():
            raise ValueError("partial order must be irreflexive")
        if not self.prec.is_transitive():
            raise ValueError("partial order must be transitive")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.domain.label_set == other.domain.label_set and self.prec == other.prec

    def __hash__(self) -> int:
        return hash((self.domain.label_set, self.prec))


def new_structure(
    labels: Iterable[str],
    prec: Iterable[tuple[str, str]] = (),
    weak: Iterable[tuple[str, str]] = (),
) -> Structure:
    """Build a structure from labels and label pairs; duplicate pairs collapse."""
    domain = Domain.of(labels)
    return Structure(domain, BinRel.from_pairs(domain, prec), BinRel.from_pairs(domain, weak))


def new_poset(labels: Iterable[str], prec: Iterable[tuple[str, str]] = ()) -> Poset:
    domain = Domain.of(labels)
    return Poset(domain, BinRel.from_pairs(domain, prec))


def is_relational(s: Structure) -> bool:
    """True when both relations are irreflexive."""
    return s.prec.is_irreflexive() and s.weak.is_irreflexive()


def extends(base: Structure, ext: Structure) -> bool:
    """True when ext refines base: same label set, both relations enlarged."""
    if base.domain.labels == ext.domain.labels:
        return base.prec.is_subrelation_of(ext.prec) and base.weak.is_subrelation_of(ext.weak)
    if base.domain.label_set != ext.domain.label_set:
        return False
    return (
        base.prec.label_pairs <= ext.prec.label_pairs
        and base.weak.label_pairs <= ext.weak.label_pairs
    )


def project(s: Structure, subset: Iterable[str]) -> Structure:
    """Restriction of both relations to subset x subset."""
    wanted = set(subset)
    prec = s.prec.restrict(wanted)
    weak = s.weak.restrict(wanted)
    return Structure(prec.domain, prec, weak)


def intersect(s: Structure, t: Structure) -> Structure:
    """Component-wise intersection; the domain keeps s's declaration order."""
    common = t.domain.label_set & s.domain.label_set
    a = project(s, common)
    prec = a.prec.intersection(t.prec.restrict(common).aligned_to(a.domain))
    weak = a.weak.intersection(t.weak.restrict(common).aligned_to(a.domain))
    return Structure(a.domain, prec, weak)


def add_element(s: Structure, x: str) -> Structure:
    if x in s.domain:
        raise ValueError(f"label already in domain: {x!r}")
    domain = Domain(s.domain.labels + (x,))
    prec = BinRel(domain, s.prec.rows + (0,))
    weak = BinRel(domain, s.weak.rows + (0,))
    return Structure(domain, prec, weak)


def add_prec(s: Structure, x: str, y: str) -> Structure:
    """Structure with x prec y added; a no-op when already present."""
    prec = s.prec.with_pair(x, y)
    return s if prec is s.prec else Structure(s.domain, prec, s.weak)


def add_weak(s: Structure, x: str, y: str) -> Structure:
    """Structure with x weak-prec y added; a no-op when already present."""
    weak = s.weak.with_pair(x, y)
    return s if weak is s.weak else Structure(s.domain, s.prec, weak)


def poset_to_structure(p: Poset) -> Structure:
    """Embed a partial order: weak precedence holds wherever the reverse
    precedence is absent, so unordered events come out mutually weak."""
    n = len(p.domain)
    full = (1 << n) - 1
    cols = p.prec.column_masks
    weak_rows = tuple(full & ~(1 << i) & ~cols[i] for i in range(n))
    return Structure(p.domain, p.prec, BinRel(p.domain, weak_rows))


def reindex_structure(s: Structure, domain: Domain) -> Structure:
    """The same structure over a domain with equal label set."""
    return Structure(domain, s.prec.aligned_to(domain), s.weak.aligned_to(domain))


def reindex_poset(p: Poset, domain: Domain) -> Poset:
    return Poset(domain, p.prec.aligned_to(domain))
