"""Shared fixtures: the worked examples used across the suite plus
random structure helpers."""

from __future__ import annotations

import random

import pytest

from qstrat import Structure, new_poset, new_structure

LABELS = "abcdefgh"


@pytest.fixture
def transactions() -> Structure:
    """Four transactions: a before c, b before d, a not later than b,
    c not later than d."""
    return new_structure(
        ["a", "b", "c", "d"], [("a", "c"), ("b", "d")], [("a", "b"), ("c", "d")]
    )


@pytest.fixture
def maximal_ext() -> Structure:
    """One maximal extension of transactions: the embedding of nested_poset."""
    return new_structure(
        ["a", "b", "c", "d"],
        [("a", "c"), ("a", "d"), ("b", "d"), ("c", "d")],
        [
            ("a", "b"),
            ("b", "a"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("c", "b"),
            ("b", "d"),
            ("c", "d"),
        ],
    )


@pytest.fixture
def transactions_closure() -> Structure:
    """The closure of transactions."""
    return new_structure(
        ["a", "b", "c", "d"],
        [("a", "c"), ("a", "d"), ("b", "d")],
        [("a", "b"), ("a", "c"), ("a", "d"), ("b", "d"), ("c", "d")],
    )


@pytest.fixture
def nested_poset():
    """Quasi-stratified but not stratified: b spans a and c, then d."""
    return new_poset(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("c", "d"), ("b", "d")])


@pytest.fixture
def interval_only_poset():
    """Interval but not quasi-stratified."""
    return new_poset(["a", "b", "c", "d"], [("a", "c"), ("b", "d"), ("a", "d")])


@pytest.fixture
def hierarchy_posets():
    """The four-order hierarchy: total, stratified, interval, partial."""
    return {
        "a": new_poset(
            ["1", "2", "3", "4"],
            [("1", "2"), ("2", "3"), ("3", "4"), ("1", "3"), ("2", "4"), ("1", "4")],
        ),
        "b": new_poset(
            ["1", "2", "3", "4"],
            [("2", "3"), ("3", "4"), ("1", "3"), ("2", "4"), ("1", "4")],
        ),
        "c": new_poset(["1", "2", "3", "4"], [("1", "3"), ("2", "4"), ("1", "4")]),
        "d": new_poset(["1", "2", "3", "4"], [("1", "3"), ("2", "4")]),
    }


@pytest.fixture
def cycle_structures():
    """The forbidden-cycle hierarchy on four events."""
    return {
        "a": new_structure(
            ["1", "2", "3", "4"], [], [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")]
        ),
        "b": new_structure(
            ["1", "2", "3", "4"], [("1", "2")], [("2", "3"), ("3", "4"), ("4", "1")]
        ),
        "c": new_structure(
            ["1", "2", "3", "4"], [("1", "2"), ("2", "3")], [("3", "4"), ("4", "1")]
        ),
        "d": new_structure(
            ["1", "2", "3", "4"], [("1", "2"), ("3", "4")], [("2", "3"), ("4", "1")]
        ),
    }


def random_structure(rng: random.Random, n: int, density: float | None = None) -> Structure:
    """Random relational structure (no acyclicity guarantee)."""
    labels = LABELS[:n]
    if density is None:
        density = rng.uniform(0.05, 0.5)
    slots = [(x, y) for x in labels for y in labels if x != y]
    prec = [p for p in slots if rng.random() < density]
    weak = [p for p in slots if rng.random() < density]
    return new_structure(labels, prec, weak)


def all_relational_structures(n: int):
    """Every relational structure on the first n labels."""
    labels = LABELS[:n]
    slots = [(x, y) for x in labels for y in labels if x != y]
    k = len(slots)
    for pm in range(1 << k):
        prec = [slots[i] for i in range(k) if pm >> i & 1]
        for wm in range(1 << k):
            weak = [slots[i] for i in range(k) if wm >> i & 1]
            yield new_structure(labels, prec, weak)
