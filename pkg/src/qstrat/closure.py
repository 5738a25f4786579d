"""Closed structures and the structure closure.

A closed structure is the largest acyclic structure with a given set of
saturations; equivalently it is the component-wise intersection of
those saturations.  The practical route avoids enumerating saturations:
a one-step operator adds every pair whose opposite addition would break
acyclicity, and its fixpoint is the closure.  This generalises the
classical fact that a partial order is the intersection of its total
order extensions.

The closed structures are characterised by four axioms:

    qsc:1  both relations are irreflexive
    qsc:2  x prec y forbids y weak x
    qsc:3  if adding x prec y breaks acyclicity, y weak x is present
    qsc:4  if adding x weak y breaks acyclicity, y prec x is present

``qsc_property_suite`` evaluates the consequence laws that closed
structures satisfy, used to probe candidate axiomatisations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qsa import (
    csc_subsets_naive,
    is_csc_subset,
    is_qsa,
    predominants,
    qsa_witness,
)
from .relcore import BinRel, Structure, add_prec, add_weak
from .saturate import saturations


def qsc_violation(s: Structure) -> tuple[str, tuple[str, str]] | None:
    """First witness against closedness, as (axiom id, pair).

    Probe axioms are scanned with qsc:4 ahead of qsc:3, so a missing
    precedence pair is reported before the weak pairs it entails.
    """
    labels = s.domain.labels
    n = len(labels)
    for i in range(n):
        if s.weak.holds_idx(i, i) or s.prec.holds_idx(i, i):
            return "qsc:1", (labels[i], labels[i])
    for i in range(n):
        for j in range(n):
            if s.prec.holds_idx(i, j) and s.weak.holds_idx(j, i):
                return "qsc:2", (labels[i], labels[j])
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            x, y = labels[i], labels[j]
            if not s.prec.holds_idx(j, i) and qsa_witness(add_weak(s, x, y)) is not None:
                return "qsc:4", (x, y)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            x, y = labels[i], labels[j]
            if not s.weak.holds_idx(j, i) and qsa_witness(add_prec(s, x, y)) is not None:
                return "qsc:3", (x, y)
    return None


def is_qsc(s: Structure) -> bool:
    return qsc_violation(s) is None


def closure_step(s: Structure) -> Structure:
    """One closure step: every probe runs against the input and all
    additions land simultaneously."""
    if not is_qsa(s):
        raise ValueError("can only close a quasi-stratified acyclic structure")
    labels = s.domain.labels
    n = len(labels)
    prec_rows = list(s.prec.rows)
    weak_rows = list(s.weak.rows)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            x, y = labels[i], labels[j]
            if not s.prec.holds_idx(j, i) and qsa_witness(add_weak(s, x, y)) is not None:
                prec_rows[j] |= 1 << i
            if not s.weak.holds_idx(j, i) and qsa_witness(add_prec(s, x, y)) is not None:
                weak_rows[j] |= 1 << i
    return Structure(
        s.domain, BinRel(s.domain, tuple(prec_rows)), BinRel(s.domain, tuple(weak_rows))
    )


@dataclass(frozen=True)
class ClosureReport:
    """Closure outcome: the closed structure, what was added, and how
    many operator applications it took (the last one confirms the
    fixpoint)."""

    closed: Structure
    added_prec: frozenset[tuple[str, str]]
    added_weak: frozenset[tuple[str, str]]
    iterations: int


def close(s: Structure) -> ClosureReport:
    """Iterate the closure step to its fixpoint.

    Each productive application adds at least one pair, so at most
    2 * n^2 of them can occur; exceeding that bound means a bug, not a
    hard input.
    """
    if not is_qsa(s):
        raise ValueError("can only close a quasi-stratified acyclic structure")
    bound = 2 * len(s.domain) ** 2
    current = s
    iterations = 0
    while True:
        nxt = closure_step(current)
        iterations += 1
        if nxt.prec.rows == current.prec.rows and nxt.weak.rows == current.weak.rows:
            break
        current = nxt
        assert iterations <= bound, "closure failed to stabilise in the pair bound"
    assert qsc_violation(current) is None, "closure fixpoint is not closed"
    return ClosureReport(
        closed=current,
        added_prec=current.prec.label_pairs - s.prec.label_pairs,
        added_weak=current.weak.label_pairs - s.weak.label_pairs,
        iterations=iterations,
    )


def close_oracle(s: Structure, bound: int = 6) -> Structure:
    """Closure by definition: intersect all saturations component-wise."""
    sats = saturations(s, bound=bound)
    n = len(s.domain)
    prec_rows = [(1 << n) - 1] * n
    weak_rows = [(1 << n) - 1] * n
    for m in sats:
        for i in range(n):
            prec_rows[i] &= m.prec.rows[i]
            weak_rows[i] &= m.weak.rows[i]
    return Structure(
        s.domain, BinRel(s.domain, tuple(prec_rows)), BinRel(s.domain, tuple(weak_rows))
    )


@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of one derived-property scan."""

    name: str
    status: str  # "pass", "fail", or "not evaluated"
    witness: tuple[str, ...] | None = None


def qsc_property_suite(s: Structure, enum_bound: int = 6) -> list[PropertyCheck]:
    """Scan the consequence laws of closed structures.

    Reports the first violating tuple per law.  The saturation-counting
    law needs enumeration and is marked "not evaluated" beyond the
    bound.  Input must be closed.
    """
    bad = qsc_violation(s)
    if bad is not None:
        raise ValueError(
            f"the property suite needs a closed structure; {bad[0]} fails on {bad[1]}"
        )
    labels = s.domain.labels
    n = len(labels)
    p = s.prec.holds_idx
    w = s.weak.holds_idx
    checks: list[PropertyCheck] = []

    def scan(name: str, arity: int, violated) -> None:
        for combo in _tuples(n, arity):
            if violated(*combo):
                checks.append(PropertyCheck(name, "fail", tuple(labels[i] for i in combo)))
                return
        checks.append(PropertyCheck(name, "pass"))

    scan("prec_implies_weak", 2, lambda x, y: p(x, y) and not w(x, y))
    scan(
        "prec_weak_prec_gives_prec",
        4,
        lambda x, y, z, t: p(x, y) and w(y, z) and p(z, t) and not p(x, t),
    )
    scan(
        "mixed_chain_gives_weak",
        3,
        lambda x, y, z: ((w(x, y) and p(y, z)) or (p(x, y) and w(y, z))) and not w(x, z),
    )
    scan(
        "weak_prec_weak_gives_weak",
        4,
        lambda x, y, z, t: w(x, y) and p(y, z) and w(z, t) and t != x and not w(x, t),
    )
    scan(
        "weak_cycle_orients_base",
        3,
        lambda x, y, z: w(x, z)
        and p(z, y)
        and w(y, x)
        and not (w(z, x) and w(x, y)),
    )
    scan(
        "prec_into_weak_cycle",
        4,
        lambda x, y, z, t: p(t, x)
        and w(x, z)
        and p(z, y)
        and w(y, x)
        and not (p(t, z) and p(t, y)),
    )
    scan(
        "prec_out_of_weak_cycle",
        4,
        lambda x, y, z, t: w(x, z)
        and p(z, y)
        and w(y, x)
        and p(x, t)
        and not (p(z, t) and p(y, t)),
    )
    scan(
        "weak_into_weak_cycle",
        4,
        lambda x, y, z, t: x != t
        and w(t, y)
        and w(y, x)
        and w(x, z)
        and p(z, y)
        and not w(t, x),
    )
    scan(
        "weak_out_of_weak_cycle",
        4,
        lambda x, y, z, t: p(z, y)
        and w(y, x)
        and w(x, z)
        and w(z, t)
        and t != x
        and not w(x, t),
    )
    scan(
        "double_route_gives_prec",
        4,
        lambda x, y, z, t: p(x, z)
        and w(z, y)
        and w(x, t)
        and p(t, y)
        and not p(x, y),
    )

    found = None
    for x, y, z in _tuples(n, 3):
        if w(x, y) and p(y, z) and w(z, x):
            triple = frozenset((labels[x], labels[y], labels[z]))
            if not is_csc_subset(s, triple) or predominants(s, triple) != {labels[x]}:
                found = (labels[x], labels[y], labels[z])
                break
    checks.append(
        PropertyCheck(
            "weak_cycle_sole_predominant",
            "fail" if found else "pass",
            found,
        )
    )

    if n <= 12:
        found = None
        for subset in csc_subsets_naive(s):
            doms = predominants(s, subset)
            if len(doms) == 2:
                a, b = sorted(doms)
                if not (s.weak.holds(a, b) and s.weak.holds(b, a)):
                    found = (a, b)
                    break
        checks.append(
            PropertyCheck(
                "twin_predominants_mutually_weak",
                "fail" if found else "pass",
                found,
            )
        )
    else:
        checks.append(PropertyCheck("twin_predominants_mutually_weak", "not evaluated"))

    open_pairs = [
        (labels[x], labels[y])
        for x, y in _tuples(n, 2)
        if x != y and not p(x, y) and not w(y, x)
    ]
    found = None
    acyclic_pairs = []
    for x, y in open_pairs:
        if not is_qsa(add_weak(s, y, x)) or not is_qsa(add_prec(s, x, y)):
            if found is None:
                found = (x, y)
        else:
            acyclic_pairs.append((x, y))
    checks.append(
        PropertyCheck("open_pair_stays_acyclic", "fail" if found else "pass", found)
    )

    if n <= enum_bound:
        total = len(saturations(s, bound=enum_bound))
        found = None
        for x, y in acyclic_pairs:
            if (
                len(saturations(add_weak(s, y, x), bound=enum_bound)) >= total
                or len(saturations(add_prec(s, x, y), bound=enum_bound)) >= total
            ):
                found = (x, y)
                break
        checks.append(
            PropertyCheck("open_pair_splits_saturations", "fail" if found else "pass", found)
        )
    else:
        checks.append(PropertyCheck("open_pair_splits_saturations", "not evaluated"))

    return checks


def _tuples(n: int, arity: int):
    if arity == 2:
        return ((x, y) for x in range(n) for y in range(n))
    if arity == 3:
        return ((x, y, z) for x in range(n) for y in range(n) for z in range(n))
    return (
        (x, y, z, t)
        for x in range(n)
        for y in range(n)
        for z in range(n)
        for t in range(n)
    )
