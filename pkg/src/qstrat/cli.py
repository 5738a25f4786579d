"""Command-line front end.

Structure files are single JSON documents::

    {"domain": ["a", "b"], "prec": [["a", "b"]], "weak": []}

``weak`` may be omitted, which marks the file as a plain partial order;
commands that need a two-relation structure then embed it (unordered
events become mutually weak).  Unknown keys are rejected.

Exit codes: 0 pass/success, 1 check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import closure, orders, qsa, qso, qsseq, saturate
from .relcore import (
    BinRel,
    Domain,
    Poset,
    Structure,
    is_relational,
    new_poset,
    new_structure,
    poset_to_structure,
)


class InputError(Exception):
    """Malformed or unusable input file."""


@dataclass(frozen=True)
class InputFile:
    labels: tuple[str, ...]
    prec: tuple[tuple[str, str], ...]
    weak: tuple[tuple[str, str], ...] | None

    def relation(self) -> BinRel:
        domain = Domain(self.labels)
        return BinRel.from_pairs(domain, self.prec)

    def structure(self) -> Structure:
        if self.weak is not None:
            return new_structure(self.labels, self.prec, self.weak)
        try:
            poset = new_poset(self.labels, self.prec)
        except ValueError as exc:
            raise InputError(f"cannot embed as a structure: {exc}") from exc
        return poset_to_structure(poset)

    def poset(self) -> Poset:
        try:
            return new_poset(self.labels, self.prec)
        except ValueError as exc:
            raise InputError(f"not a partial order: {exc}") from exc


def _pair_list(value: object, key: str) -> tuple[tuple[str, str], ...]:
    if not isinstance(value, list):
        raise InputError(f'"{key}" must be a list of pairs')
    out = []
    for item in value:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, str) for x in item)
        ):
            raise InputError(f'"{key}" entries must be two-element lists of strings')
        out.append((item[0], item[1]))
    return tuple(out)


def read_input(path: str | Path) -> InputFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    unknown = set(data) - {"domain", "prec", "weak"}
    if unknown:
        raise InputError(f"unknown keys: {sorted(unknown)}")
    if "domain" not in data or "prec" not in data:
        raise InputError('input needs "domain" and "prec" keys')
    domain = data["domain"]
    if not isinstance(domain, list) or not all(isinstance(x, str) for x in domain):
        raise InputError('"domain" must be a list of strings')
    prec = _pair_list(data["prec"], "prec")
    weak = _pair_list(data["weak"], "weak") if "weak" in data else None
    f = InputFile(tuple(domain), prec, weak)
    try:
        f.relation()
        if weak is not None:
            f.structure()
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return f


def structure_json_text(s: Structure) -> str:
    """Canonical file form: domain order preserved, pairs sorted, one
    line per key."""
    domain = json.dumps(list(s.domain.labels))
    prec = json.dumps([list(p) for p in sorted(s.prec.label_pairs)])
    weak = json.dumps([list(p) for p in sorted(s.weak.label_pairs)])
    return (
        "{\n"
        f'  "domain": {domain},\n'
        f'  "prec": {prec},\n'
        f'  "weak": {weak}\n'
        "}\n"
    )


def dot_text(s: Structure) -> str:
    """DOT rendering: solid arrows for precedence, dashed for weak."""
    lines = ["digraph structure {", "  rankdir=LR;"]
    for label in s.domain.labels:
        lines.append(f'  "{label}";')
    for x, y in sorted(s.prec.label_pairs):
        lines.append(f'  "{x}" -> "{y}";')
    for x, y in sorted(s.weak.label_pairs):
        lines.append(f'  "{x}" -> "{y}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fmt_pairs(pairs) -> str:
    return ", ".join(f"{x}->{y}" for x, y in sorted(pairs)) or "(none)"


def _self_loop(s: Structure) -> tuple[str, str] | None:
    for name, rel in [("prec", s.prec), ("weak", s.weak)]:
        for i, label in enumerate(s.domain.labels):
            if rel.holds_idx(i, i):
                return name, label
    return None


_ORDER_CLASSES = {
    "po": ("a partial order", orders.partial_order_violation),
    "to": ("a total order", orders.total_order_violation),
    "so": ("a stratified order", orders.stratified_order_violation),
    "io": ("an interval order", orders.interval_order_violation),
}


def cmd_check(args: argparse.Namespace) -> int:
    f = read_input(args.path)
    cls = args.cls
    if cls in _ORDER_CLASSES:
        wording, finder = _ORDER_CLASSES[cls]
        bad = finder(f.relation())
        if bad is None:
            print(f"PASS: precedence relation is {wording}")
            return 0
        axiom, tup = bad
        print(f"FAIL: not {wording}; {axiom} fails on ({', '.join(tup)})")
        return 1
    if cls == "qso":
        witness = qso.qs_order_violation(f.relation())
        if witness is None:
            print("PASS: precedence relation is a quasi-stratified order")
            return 0
        print(f"FAIL: not a quasi-stratified order; witness ({', '.join(witness)})")
        return 1
    s = f.structure()
    if cls == "relational":
        loop = _self_loop(s)
        if loop is None:
            print("PASS: structure is relational")
            return 0
        print(f"FAIL: not relational; {loop[0]} relates {loop[1]} to itself")
        return 1
    if cls == "qsa":
        loop = _self_loop(s)
        if loop is not None:
            print(
                f"FAIL: not quasi-stratified acyclic; {loop[0]} relates {loop[1]} to itself"
            )
            return 1
        witness = qsa.qsa_witness(s)
        if witness is None:
            print("PASS: structure is quasi-stratified acyclic")
            return 0
        members = ", ".join(sorted(witness.subset))
        print(f"FAIL: not quasi-stratified acyclic; {{{members}}} is {witness.note}")
        return 1
    if cls == "qsm":
        bad = saturate.qsm_violation(s)
        if bad is None:
            print("PASS: structure is maximal")
            return 0
        print(f"FAIL: not maximal; {bad[0]} fails on ({', '.join(bad[1])})")
        return 1
    if cls == "qsc":
        bad = closure.qsc_violation(s)
        if bad is None:
            print("PASS: structure is closed")
            return 0
        axiom, (x, y) = bad
        if axiom == "qsc:4":
            detail = f"adding {x} weak {y} breaks acyclicity, so {y} prec {x} is required but missing"
        elif axiom == "qsc:3":
            detail = f"adding {x} prec {y} breaks acyclicity, so {y} weak {x} is required but missing"
        else:
            detail = f"fails on ({x}, {y})"
        print(f"FAIL: not closed; {axiom}: {detail}")
        return 1
    raise InputError(f"unknown class flag: {cls}")


def cmd_close(args: argparse.Namespace) -> int:
    f = read_input(args.path)
    s = f.structure()
    if not qsa.is_qsa(s):
        witness = qsa.qsa_witness(s) if is_relational(s) else None
        if witness is not None:
            members = ", ".join(sorted(witness.subset))
            print(f"FAIL: not quasi-stratified acyclic; {{{members}}} is {witness.note}")
        else:
            print("FAIL: not quasi-stratified acyclic; a relation has a self-loop")
        return 1
    report = closure.close(s)
    sys.stdout.write(structure_json_text(report.closed))
    if not report.added_prec and not report.added_weak:
        print("already closed, 0 additions", file=sys.stderr)
    else:
        print(f"added prec: {_fmt_pairs(report.added_prec)}", file=sys.stderr)
        print(f"added weak: {_fmt_pairs(report.added_weak)}", file=sys.stderr)
    print(f"iterations: {report.iterations}", file=sys.stderr)
    return 0


def cmd_saturate(args: argparse.Namespace) -> int:
    f = read_input(args.path)
    s = f.structure()
    if not qsa.is_qsa(s):
        print("FAIL: input is not quasi-stratified acyclic")
        return 1
    sats = saturate.saturations(s, limit=args.limit)
    print(f"{len(sats)} saturation(s){' (truncated)' if sats.truncated else ''}")
    for k, m in enumerate(sats, start=1):
        print(f"-- saturation {k}")
        print(f"   prec: {_fmt_pairs(m.prec.label_pairs)}")
        print(f"   weak: {_fmt_pairs(m.weak.label_pairs)}")
        order = saturate.qsm_to_qso(m)
        if len(order) > 0:
            print(f"   tree: {qsseq.format_seq(qsseq.order_to_seq(order))}")
            realization = orders.interval_realization(order.poset)
            cells = " ".join(
                f"{x}:[{b},{e}]" for x, (b, e) in sorted(realization.items())
            )
            print(f"   intervals: {cells}")
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    f = read_input(args.path)
    rel = f.relation()
    witness = qso.qs_order_violation(rel)
    if witness is not None:
        print(f"FAIL: not a quasi-stratified order; witness ({', '.join(witness)})")
        return 1
    if len(rel.domain) == 0:
        print("(empty)")
        return 0
    order = qso.QsOrder(f.poset())
    print(qsseq.format_seq(qsseq.order_to_seq(order)))
    return 0


def cmd_intervals(args: argparse.Namespace) -> int:
    f = read_input(args.path)
    if orders.interval_order_violation(f.relation()) is not None:
        print("FAIL: not an interval order")
        return 1
    realization = orders.interval_realization(f.poset())
    for label in f.labels:
        b, e = realization[label]
        print(f"{label}: [{b}, {e}]")
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    f = read_input(args.path)
    if args.format == "tree":
        return cmd_decompose(args)
    s = f.structure()
    if args.format == "dot":
        sys.stdout.write(dot_text(s))
    else:
        sys.stdout.write(structure_json_text(s))
    return 0


def default_labels(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple(chr(ord("a") + i) for i in range(n))
    return tuple(f"e{i}" for i in range(1, n + 1))


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise InputError("--n must be non-negative")
    if not 0.0 <= args.density <= 1.0:
        raise InputError("--density must lie in [0, 1]")
    s = qsa.random_qsa_structure(default_labels(args.n), seed=args.seed, density=args.density)
    sys.stdout.write(structure_json_text(s))
    return 0


def _selftest_qsa_oracle(max_n: int, rng: random.Random) -> bool:
    for n in range(1, min(3, max_n) + 1):
        labels = default_labels(n)
        slots = [(x, y) for x in labels for y in labels if x != y]
        for pm in range(1 << len(slots)):
            for wm in range(1 << len(slots)):
                prec = [slots[i] for i in range(len(slots)) if pm >> i & 1]
                weak = [slots[i] for i in range(len(slots)) if wm >> i & 1]
                s = new_structure(labels, prec, weak)
                if qsa.is_qsa(s) != qsa.is_qsa_naive(s):
                    return False
    for n in range(4, max_n + 1):
        labels = default_labels(n)
        slots = [(x, y) for x in labels for y in labels if x != y]
        for _ in range(300):
            density = rng.uniform(0.05, 0.5)
            prec = [p for p in slots if rng.random() < density]
            weak = [p for p in slots if rng.random() < density]
            s = new_structure(labels, prec, weak)
            if qsa.is_qsa(s) != qsa.is_qsa_naive(s):
                return False
    return True


def _selftest_axioms_vs_enumeration(max_n: int) -> bool:
    for n in range(1, min(max_n, 4) + 1):
        labels = default_labels(n)
        generated = {o.prec.label_pairs for o in qso.enumerate_qs_orders(labels)}
        if len(generated) != len(qso.enumerate_qs_orders(labels)):
            return False
        recognized = {
            p.prec.label_pairs
            for p in orders.enumerate_posets(labels)
            if qso.is_qs_order(p.prec)
        }
        if generated != recognized:
            return False
    return True


def _selftest_round_trip(max_n: int, rng: random.Random) -> bool:
    for n in range(1, min(max_n, 4) + 1):
        for order in qso.enumerate_qs_orders(default_labels(n)):
            if len(order) == 0:
                continue
            if qsseq.seq_to_order(qsseq.order_to_seq(order)) != order:
                return False
    for _ in range(200):
        n = rng.randint(1, 8)
        seq = qsseq.random_qs_seq(default_labels(n), seed=rng.randrange(1 << 30))
        if qsseq.order_to_seq(qsseq.seq_to_order(seq)) != seq:
            return False
    return True


def _selftest_closure_oracle(max_n: int, rng: random.Random) -> bool:
    for _ in range(50):
        n = rng.randint(1, min(max_n, 5))
        s = qsa.random_qsa_structure(
            default_labels(n), seed=rng.randrange(1 << 30), density=rng.uniform(0.1, 0.6)
        )
        if closure.close(s).closed != closure.close_oracle(s):
            return False
    return True


def cmd_selftest(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        raise InputError("--max-n must be at least 1")
    rng = random.Random(20240101)
    suites = [
        ("acyclicity: polynomial vs subset scan", lambda: _selftest_qsa_oracle(args.max_n, rng)),
        ("order axioms vs enumeration", lambda: _selftest_axioms_vs_enumeration(args.max_n)),
        ("tree codec round trips", lambda: _selftest_round_trip(args.max_n, rng)),
        ("closure vs saturation intersection", lambda: _selftest_closure_oracle(args.max_n, rng)),
    ]
    all_ok = True
    for name, suite in suites:
        ok = suite()
        all_ok = all_ok and ok
        print(f"{name:<40} {'PASS' if ok else 'FAIL'}")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qstrat",
        description="Analyse quasi-stratified orders and their specification structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify an input file")
    p.add_argument("path")
    p.add_argument(
        "--class",
        dest="cls",
        required=True,
        choices=["po", "to", "so", "io", "qso", "relational", "qsa", "qsm", "qsc"],
    )
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("close", help="compute the structure closure")
    p.add_argument("path")
    p.set_defaults(func=cmd_close)

    p = sub.add_parser("saturate", help="enumerate all maximal extensions")
    p.add_argument("path")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("decompose", help="print the stratum-tree decomposition")
    p.add_argument("path")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("intervals", help="print an integer interval realization")
    p.add_argument("path")
    p.set_defaults(func=cmd_intervals)

    p = sub.add_parser("render", help="re-serialize an input file")
    p.add_argument("path")
    p.add_argument("--format", choices=["json", "dot", "tree"], default="json")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("gen", help="generate a random acyclic structure")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--density", type=float, default=0.35)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selftest", help="run the oracle equivalence suites")
    p.add_argument("--max-n", dest="max_n", type=int, default=4)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
