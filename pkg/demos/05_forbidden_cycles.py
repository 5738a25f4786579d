"""Which cycles rule out which execution models.

A two-relation structure admits a sequential execution only without
combined cycles, a step-sequence execution only without cycles carrying
a precedence step, and an interval execution only without cycles in
which every pair of consecutive steps contains a precedence step.  For
quasi-stratified executions the forbidden pattern is a strongly
connected subset in which every member touches a precedence pair, so no
member can serve as the base of a nested stratum.
"""

from qstrat import (
    forbidden_cycle_interval,
    forbidden_cycle_stratified,
    forbidden_cycle_total,
    is_qsa,
    legal_extensions,
    new_structure,
    predominants,
    qsa_witness,
)

cycles = {
    "pure weak cycle": new_structure(
        "1234", [], [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")]
    ),
    "one precedence step": new_structure(
        "1234", [("1", "2")], [("2", "3"), ("3", "4"), ("4", "1")]
    ),
    "two adjacent precedence steps": new_structure(
        "1234", [("1", "2"), ("2", "3")], [("3", "4"), ("4", "1")]
    ),
    "alternating steps": new_structure(
        "1234", [("1", "2"), ("3", "4")], [("2", "3"), ("4", "1")]
    ),
}

for name, s in cycles.items():
    print(f"== {name}")
    for kind, find in [
        ("sequential", forbidden_cycle_total),
        ("step sequence", forbidden_cycle_stratified),
        ("interval", forbidden_cycle_interval),
    ]:
        witness = find(s)
        verdict = "ruled out: " + " -> ".join(witness) if witness else "possible"
        print(f"   {kind:<14} {verdict}")
    if is_qsa(s):
        doms = sorted(predominants(s, s.domain.labels))
        print(f"   quasi-stratified: possible (pre-dominants of the cycle: {doms})")
    else:
        witness = qsa_witness(s)
        members = ", ".join(sorted(witness.subset))
        print(f"   quasi-stratified: ruled out, {{{members}}} has no pre-dominant")
    print()

print("probing single-pair extensions of the one-precedence-step cycle:")
s = cycles["one precedence step"]
for x, y in [("3", "1"), ("2", "1")]:
    result = legal_extensions(s, x, y)
    print(f"   add {x} prec {y}: {'keeps' if result.prec_ok else 'breaks'} acyclicity;"
          f" add {x} weak {y}: {'keeps' if result.weak_ok else 'breaks'}")
