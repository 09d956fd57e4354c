"""Command-line surface.

Subcommands: analyze one input, enumerate a range as CSV, verify (an
alias for analyze --verify), and fixtures (the finite-group sanity
suite).  Exit codes: 0 on success, 2 on invalid input, 3 when
verification disagrees.

Argument order is (a, b, c, d) acting by t x t^-1 = x^a y^b and
t y t^-1 = x^c y^d; note that a printed matrix puts c in the top right,
the action is the contract here.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections import Counter

from .buindex import CrossCheckMismatchError, bu_rules, cube_of_class
from .classify import ClassifiedRing, classify
from .oracle import (
    OracleReport,
    QuadraticCocycle,
    check_group_axioms,
    d8_kernel,
    e_kernel,
    verify,
)
from .ringalg import poly_str, sym2_pairs
from .solgroup import (
    MAPPING_TORUS,
    UNION,
    NotSolError,
    NotUnionError,
    SolGroupSpec,
    h1_basis,
    iter_valid_specs,
    validate,
)

SCHEMA = "sol3/1"
CSV_HEADER = ["family", "a", "b", "c", "d", "eps", "tau", "delta1", "delta2",
              "beta", "case", "basis_note", "bu", "verify"]


def _sym2_mask_str(names, mask: int) -> str:
    pairs = sym2_pairs(len(names))
    parts = []
    for t, (i, j) in enumerate(pairs):
        if (mask >> t) & 1:
            parts.append(f"{names[i]}^2" if i == j else f"{names[i]}*{names[j]}")
    return " + ".join(parts) if parts else "0"


def _oracle_json(report: OracleReport, names) -> dict:
    return {
        "h1": {"dim": report.h1_dim, "agree": report.h1_agree},
        "abelianization": {"value": str(report.abelianization),
                           "agree": report.ab_agree},
        "h2_kernel": {
            "oracle": [_sym2_mask_str(names, m) for m in report.h2_kernel],
            "classifier": [_sym2_mask_str(names, m) for m in report.h2_classifier],
            "agree": report.h2_agree,
        },
        "triples": {"status": report.triple_status, "count": report.triple_count,
                    "agree": report.triple_agree},
        "pd": report.pd_ok,
        "wu": report.wu_ok,
        "agree": report.agree,
    }


def analysis_document(spec: SolGroupSpec, run_oracle: bool = False) -> dict:
    inv = validate(spec)
    cls = classify(spec)
    basis = h1_basis(spec)
    table = bu_rules(spec, cls)
    names = basis.names
    cubes = {}
    for mask in range(1, 1 << inv.beta):
        coeffs = tuple((mask >> i) & 1 for i in range(inv.beta))
        cubes[basis.combo_name(coeffs)] = cube_of_class(cls, coeffs)
    doc = {
        "schema": SCHEMA,
        "input": {"family": spec.family, "a": spec.a, "b": spec.b,
                  "c": spec.c, "d": spec.d},
        "invariants": {
            "eps": inv.eps, "tau": inv.tau,
            "delta1": inv.delta1, "delta2": inv.delta2,
            "k": inv.k, "l": inv.l,
            "orientable": inv.orientable,
            "abelianization": {"free_rank": inv.abelianization.free_rank,
                               "torsion": list(inv.abelianization.torsion)},
            "beta": inv.beta,
            "w1": basis.combo_name(inv.w1),
            "h1_basis": [{"name": n, "on_generators": list(v)}
                         for n, v in basis.classes],
        },
        "case": {"id": cls.label.case_id, "basis_note": cls.label.basis_note,
                 "h1_map": [list(r) for r in cls.h1_map]},
        "ring": {
            "generators": [[n, d] for n, d in cls.ring.generators],
            "relations": [poly_str(cls.ring, r) for r in cls.ring.relations],
        },
        "structure": {
            "dims": list(cls.sc.dims),
            "bases": [list(b) for b in cls.sc.bases],
            "mul12": [[list(v) for v in row] for row in cls.sc.mul12],
            "mul13": [[list(v) for v in row] for row in cls.sc.mul13],
        },
        "cubes": cubes,
        "bu": {e.name: {"index": e.index, "rule": e.rule_id}
               for e in table.entries},
    }
    if run_oracle:
        doc["oracle"] = _oracle_json(verify(spec, cls), names)
    return doc


def _text_lines(doc: dict) -> list[str]:
    inp = doc["input"]
    inv = doc["invariants"]
    out = [f"{inp['family']}({inp['a']}, {inp['b']}, {inp['c']}, {inp['d']})"]
    bits = [f"eps = {inv['eps']}"]
    if inv["tau"] is not None:
        bits += [f"tau = {inv['tau']}", f"delta1 = {inv['delta1']}",
                 f"delta2 = {inv['delta2']}"]
    out.append("  " + "  ".join(bits))
    ab = inv["abelianization"]
    parts = (["Z"] * 0 if ab["free_rank"] == 0 else
             ["Z" if ab["free_rank"] == 1 else f"Z^{ab['free_rank']}"])
    parts += [f"Z/{t}" for t in ab["torsion"]]
    out.append(f"  abelianization: {' x '.join(parts) if parts else '0'}")
    out.append(f"  orientable: {'yes' if inv['orientable'] else 'no'}"
               f"   beta = {inv['beta']}   w1 = {inv['w1']}")
    case = doc["case"]
    label = case["id"] + (f"  ({case['basis_note']})" if case["basis_note"] else "")
    out.append(f"  case: {label}")
    gens = ", ".join(n for n, _ in doc["ring"]["generators"])
    rels = ", ".join(doc["ring"]["relations"])
    out.append(f"  H* = F2[{gens}] / ({rels})")
    out.append(f"  dims: {tuple(doc['structure']['dims'])}")
    cubes = doc["cubes"]
    nonzero = [n for n, v in cubes.items() if v]
    out.append(f"  nonzero cubes: {', '.join(nonzero) if nonzero else 'none'}")
    out.append("  BU indices:")
    for name, e in doc["bu"].items():
        out.append(f"    {name}: {e['index']}  (rule {e['rule']})")
    if "oracle" in doc:
        o = doc["oracle"]
        verdict = "agree" if o["agree"] else "DISAGREE"
        out.append(f"  verification: {verdict}"
                   f"  (h2 {'ok' if o['h2_kernel']['agree'] else 'MISMATCH'},"
                   f" ab {'ok' if o['abelianization']['agree'] else 'MISMATCH'},"
                   f" pd {'ok' if o['pd'] else 'FAIL'},"
                   f" wu {'ok' if o['wu'] else 'FAIL'},"
                   f" triples {o['triples']['status']})")
    return out


def _csv_row(doc: dict) -> list:
    inp = doc["input"]
    inv = doc["invariants"]
    bu = ";".join(f"{name}={e['index']}" for name, e in doc["bu"].items())
    if "oracle" in doc:
        verdict = "agree" if doc["oracle"]["agree"] else "disagree"
    else:
        verdict = ""
    return [inp["family"], inp["a"], inp["b"], inp["c"], inp["d"],
            inv["eps"],
            "" if inv["tau"] is None else inv["tau"],
            "" if inv["delta1"] is None else inv["delta1"],
            "" if inv["delta2"] is None else inv["delta2"],
            inv["beta"], doc["case"]["id"], doc["case"]["basis_note"],
            bu, verdict]


def cmd_analyze(args) -> int:
    spec = SolGroupSpec(args.family, args.a, args.b, args.c, args.d)
    run_oracle = args.verify
    doc = analysis_document(spec, run_oracle)
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    elif args.format == "csv":
        print(f"# schema: {SCHEMA}")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        w.writerow(_csv_row(doc))
        print(buf.getvalue(), end="")
    else:
        print("\n".join(_text_lines(doc)))
    if run_oracle and not doc["oracle"]["agree"]:
        print("verification disagreement", file=sys.stderr)
        return 3
    return 0


def cmd_enumerate(args) -> int:
    if args.bound < 1:
        print("error: --bound must be at least 1", file=sys.stderr)
        return 2
    print(f"# schema: {SCHEMA}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    counts: Counter = Counter()
    disagreements = 0
    for spec in iter_valid_specs(args.bound, args.family):
        doc = analysis_document(spec, args.verify)
        counts[doc["case"]["id"]] += 1
        if args.verify and not doc["oracle"]["agree"]:
            disagreements += 1
        w.writerow(_csv_row(doc))
    print(buf.getvalue(), end="")
    freq = " ".join(f"{case}={n}" for case, n in sorted(counts.items()))
    print(f"# case frequencies: {freq if freq else 'none'}")
    if args.verify:
        print(f"# disagreements: {disagreements}")
        if disagreements:
            return 3
    return 0


def cmd_fixtures(args) -> int:
    checks = []
    d8 = d8_kernel()
    checks.append(("D8 kernel = span{T*Y + Y^2}, dimension 1", d8 == (0b110,)))
    ek = e_kernel()
    checks.append(("E kernel = span{T*U + U^2 + V^2}, dimension 1", ek == (0b101010,)))
    # restricting E to <t, u> (a copy of D8 with y = u) sends v to 0
    restricted = _restrict_e_mask_to_d8(0b101010)
    checks.append(("E relation restricts to the D8 relation", (restricted,) == d8))
    ok = True
    for k in (1, 2, 3):
        npairs = len(sym2_pairs(k))
        for bits in range(1 << npairs):
            coeffs = frozenset(p for t, p in enumerate(sym2_pairs(k))
                               if (bits >> t) & 1)
            if not check_group_axioms(QuadraticCocycle(k, coeffs)):
                ok = False
    checks.append(("extension group axioms, exhaustive for k <= 3", ok))
    failed = 0
    for name, passed in checks:
        print(f"{'pass' if passed else 'FAIL'}  {name}")
        if not passed:
            failed += 1
    return 1 if failed else 0


def _restrict_e_mask_to_d8(mask: int) -> int:
    """Push a quadratic form on <T, U, V> through V -> 0, (T, U) -> (T, Y)."""
    out = 0
    d8_pairs = {p: t for t, p in enumerate(sym2_pairs(2))}
    for t, (i, j) in enumerate(sym2_pairs(3)):
        if (mask >> t) & 1 and i < 2 and j < 2:
            out ^= 1 << d8_pairs[(i, j)]
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sol3ring",
        description="Mod-2 cohomology rings and Borsuk-Ulam indices of "
                    "closed Sol^3-manifolds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_args(sp, verify_default: bool):
        sp.add_argument("family", choices=[MAPPING_TORUS, UNION])
        sp.add_argument("a", type=int)
        sp.add_argument("b", type=int)
        sp.add_argument("c", type=int)
        sp.add_argument("d", type=int)
        sp.add_argument("--format", choices=["text", "json", "csv"],
                        default="text")
        if verify_default:
            sp.set_defaults(verify=True)
        else:
            sp.add_argument("--verify", action="store_true")

    sp = sub.add_parser("analyze", help="classify one input")
    add_spec_args(sp, verify_default=False)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("verify", help="classify and run the oracle")
    add_spec_args(sp, verify_default=True)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("enumerate", help="scan a parameter range, CSV output")
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--family", choices=[MAPPING_TORUS, UNION], default=None)
    sp.add_argument("--verify", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("fixtures", help="finite-group sanity suite")
    sp.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotSolError, NotUnionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except CrossCheckMismatchError as e:
        print(f"verification mismatch: {e}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        # a downstream reader such as head closed the pipe; the devnull
        # dup keeps the interpreter's exit-time flush from raising again
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 1
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
