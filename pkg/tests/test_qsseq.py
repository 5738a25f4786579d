import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qstrat import (
    QsSeq,
    enumerate_qs_orders,
    enumerate_qs_seqs,
    format_seq,
    is_qso_stratum,
    is_qs_order,
    is_stratified_order,
    is_valid_seq,
    leaf,
    node,
    order_to_seq,
    qso_from_poset,
    random_qs_seq,
    seq_domain,
    seq_from_json,
    seq_to_json,
    seq_to_order,
    seq_violation,
    stratified_partition,
)

from conftest import LABELS

NESTED_TREE = QsSeq((node({"b"}, [leaf({"a"}), leaf({"c"})]), leaf({"d"})))


def test_domain_of_leaf():
    assert seq_domain(QsSeq((leaf({"a", "b"}),))) == {"a", "b"}


def test_domain_of_nested_tree():
    assert seq_domain(NESTED_TREE) == {"a", "b", "c", "d"}


def test_domain_of_two_leaves():
    assert seq_domain(QsSeq((leaf({"a"}), leaf({"b"})))) == {"a", "b"}


def test_single_child_rejected():
    bad = QsSeq((node({"a"}, [leaf({"b"})]),))
    assert seq_violation(bad) == "an internal node needs at least two child strata"


def test_overlapping_bases_rejected():
    bad = QsSeq((leaf({"a"}), leaf({"a", "b"})))
    assert "disjoint" in seq_violation(bad)


def test_empty_base_rejected():
    assert seq_violation(QsSeq((leaf([]),))) == "empty base set"


def test_empty_sequence_rejected():
    assert seq_violation(QsSeq(())) is not None


def test_generated_sequences_validate():
    rng = random.Random(2)
    for _ in range(1000):
        n = rng.randint(1, 8)
        assert is_valid_seq(random_qs_seq(LABELS[:n], seed=rng.randrange(1 << 30)))


def test_decode_leaf_antichain():
    q = seq_to_order(QsSeq((leaf({"a", "b"}),)))
    assert not q.prec.label_pairs
    assert q.domain.label_set == {"a", "b"}


def test_decode_two_leaves_chain():
    q = seq_to_order(QsSeq((leaf({"a"}), leaf({"b"}))))
    assert sorted(q.prec.label_pairs) == [("a", "b")]


def test_decode_nested_tree(nested_poset):
    assert seq_to_order(NESTED_TREE) == qso_from_poset(nested_poset)


def test_decode_rejects_invalid():
    with pytest.raises(ValueError, match="invalid sequence"):
        seq_to_order(QsSeq((node({"a"}, [leaf({"b"})]),)))


def test_encode_antichain():
    q = seq_to_order(QsSeq((leaf({"a", "b"}),)))
    assert order_to_seq(q) == QsSeq((leaf({"a", "b"}),))


def test_encode_nested_order(nested_poset):
    assert order_to_seq(qso_from_poset(nested_poset)) == NESTED_TREE


def test_encode_chain():
    from qstrat import new_poset

    q = qso_from_poset(new_poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")]))
    assert order_to_seq(q) == QsSeq((leaf({"a"}), leaf({"b"}), leaf({"c"})))


def test_encode_rejects_empty():
    from qstrat import qso_empty

    with pytest.raises(ValueError, match="empty"):
        order_to_seq(qso_empty())


def test_round_trip_enumerated_orders():
    for n in range(1, 5):
        for q in enumerate_qs_orders(LABELS[:n]):
            assert seq_to_order(order_to_seq(q)) == q


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**30), n=st.integers(1, 8))
def test_round_trip_random_sequences(seed, n):
    seq = random_qs_seq(LABELS[:n], seed=seed)
    assert order_to_seq(seq_to_order(seq)) == seq


def test_decoded_orders_are_qs_with_right_domain():
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(1, 7)
        seq = random_qs_seq(LABELS[:n], seed=rng.randrange(1 << 30))
        q = seq_to_order(seq)
        assert is_qs_order(q.prec)
        assert q.domain.label_set == seq_domain(seq)


def test_stratum_correspondence():
    rng = random.Random(6)
    for _ in range(200):
        n = rng.randint(1, 7)
        seq = random_qs_seq(LABELS[:n], seed=rng.randrange(1 << 30))
        assert (len(seq.strata) == 1) == is_qso_stratum(seq_to_order(seq))


def test_all_leaf_sequences_are_stratified():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(1, 6)
        pool = list(LABELS[:n])
        rng.shuffle(pool)
        cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1))) if n > 1 else []
        blocks = [pool[i:j] for i, j in zip([0] + cuts, cuts + [n])]
        seq = QsSeq(tuple(leaf(b) for b in blocks))
        q = seq_to_order(seq)
        assert is_stratified_order(q.prec)
        assert stratified_partition(q.poset) == [frozenset(b) for b in blocks]


def test_enumerate_counts():
    assert len(enumerate_qs_seqs(LABELS[:1])) == 1
    assert len(enumerate_qs_seqs(LABELS[:2])) == 3
    assert len(enumerate_qs_seqs(LABELS[:3])) == 19


def test_enumerate_two_element_contents():
    seqs = set(enumerate_qs_seqs(LABELS[:2]))
    assert seqs == {
        QsSeq((leaf({"a", "b"}),)),
        QsSeq((leaf({"a"}), leaf({"b"}))),
        QsSeq((leaf({"b"}), leaf({"a"}))),
    }


def test_enumerate_matches_order_count():
    for n in range(1, 5):
        assert len(enumerate_qs_seqs(LABELS[:n])) == len(enumerate_qs_orders(LABELS[:n]))


def test_enumerate_all_valid_and_distinct():
    seqs = enumerate_qs_seqs(LABELS[:4])
    assert len(set(seqs)) == len(seqs)
    assert all(is_valid_seq(s) for s in seqs)


def test_enumerate_bound():
    with pytest.raises(ValueError, match="bound"):
        enumerate_qs_seqs(LABELS[:7])


def test_random_seq_single_label_forced():
    for seed in range(5):
        assert random_qs_seq(["a"], seed=seed) == QsSeq((leaf({"a"}),))


def test_random_seq_deterministic():
    a = random_qs_seq(LABELS[:5], seed=42)
    b = random_qs_seq(LABELS[:5], seed=42)
    assert a == b


def test_random_seq_needs_labels():
    with pytest.raises(ValueError, match="at least one label"):
        random_qs_seq([], seed=0)


def test_json_round_trip():
    rng = random.Random(10)
    for _ in range(100):
        n = rng.randint(1, 7)
        seq = random_qs_seq(LABELS[:n], seed=rng.randrange(1 << 30))
        data = json.loads(json.dumps(seq_to_json(seq)))
        assert seq_from_json(data) == seq


def test_json_shape_of_nested_tree():
    assert seq_to_json(NESTED_TREE) == [
        {"base": ["b"], "children": [{"base": ["a"]}, {"base": ["c"]}]},
        {"base": ["d"]},
    ]


def test_json_rejects_garbage():
    with pytest.raises(ValueError):
        seq_from_json({"base": ["a"]})
    with pytest.raises(ValueError):
        seq_from_json([{"root": ["a"]}])


def test_format_seq():
    assert format_seq(NESTED_TREE) == "(b | a c) ; d"
    assert format_seq(QsSeq((leaf({"b", "a"}), leaf({"c"})))) == "a,b ; c"
