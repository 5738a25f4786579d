"""Stratum trees: decomposing quasi-stratified orders and going back.

A quasi-stratified order factorizes uniquely into strata; each stratum
is a tree whose root holds the base events and whose children are the
sub-strata running during the base's lifetime.  The encoding and
decoding maps are inverse bijections, demonstrated here on every order
over four labelled events and on random trees.
"""

from qstrat import (
    enumerate_qs_orders,
    factorize_strata,
    format_seq,
    new_poset,
    order_to_seq,
    qso_from_poset,
    random_qs_seq,
    seq_to_order,
)

order = qso_from_poset(new_poset("abcd", [("a", "c"), ("a", "d"), ("c", "d"), ("b", "d")]))
print("order:", sorted(order.prec.label_pairs))
print("strata:", [tuple(f.domain.labels) for f in factorize_strata(order)])
print("tree:", format_seq(order_to_seq(order)))
print()

print("all 183 orders over four events round-trip through their trees:")
orders = enumerate_qs_orders("abcd")
assert all(seq_to_order(order_to_seq(q)) == q for q in orders)
print("  ok ({} orders, {} distinct)".format(len(orders), len(set(orders))))
print()

print("a few random trees over eight events:")
for seed in (1, 2, 3):
    seq = random_qs_seq("abcdefgh", seed=seed)
    assert order_to_seq(seq_to_order(seq)) == seq
    print(f"  seed {seed}: {format_seq(seq)}")
